#include "sandwich/limit.hpp"

#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"
#include "sandwich/table.hpp"

#include <cmath>

namespace sandwich {

std::string_view path_name(Path p) noexcept {
  switch (p) {
    case Path::SupInf: return "supinf";
    case Path::Sandwich: return "sandwich";
    case Path::LawSum: return "law:sum";
    case Path::LawProd: return "law:prod";
    case Path::LawRecip: return "law:recip";
  }
  return "supinf";
}

LimitLaws LimitLaws::standard() {
  return LimitLaws{
      [](const Scalar& a, const Scalar& b) { return a + b; },
      [](const Scalar& a, const Scalar& b) { return a * b; },
      [](const Scalar& b) { return Scalar(Rational(1)) / b; },
  };
}

LimitEngine::LimitEngine(EngineConfig config) : config_(std::move(config)) {
  const auto& t = config_.tolerances;
  if (!(t.eta_eval > 0) || !(t.eta_lim > 0) || !(t.eta_env > 0))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  if (config_.verify.samples < 1 || config_.verify.decades < 1)
    throw Error(ErrorCode::InvalidArgument, "verification plan needs positive decades and samples");
}

namespace {

Scalar tol(double v) { return Scalar(Rational(v)); }

// Analytic limit of a structural BM form.
Rational bm_value(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const: return e.coeff();
    case Kind::PowTail: return 0;
    case Kind::Table: return e.table_function().last_value();
    case Kind::Sum: return bm_value(e.lhs()) + bm_value(e.rhs());
    case Kind::Scale: return e.coeff() * bm_value(e.inner());
    default:
      throw Error(ErrorCode::InvalidArgument, print(e) + " is not a structural monotone form");
  }
}

// X with |e(x) - L(e)| < eps for x > X, for the structural BM forms.
Scalar bm_threshold(const Expr& e, const Scalar& eps, const Rational& tail) {
  switch (e.kind()) {
    case Kind::Const:
      return Scalar(tail);
    case Kind::PowTail: {
      const Rational& c = e.exponent();
      Scalar x = power(Scalar(abs(e.coeff())) / eps, Rational(1 / c));
      return max_value(x, Scalar(tail));
    }
    case Kind::Table: {
      const auto& samples = e.table_function().samples();
      const Rational& last = e.table_function().last_value();
      std::size_t first = samples.size() - 1;
      while (first > 0 && definitely_less(Scalar(abs(Rational(samples[first - 1].y - last))), eps)) --first;
      Rational x = first == 0 ? tail : std::max(tail, samples[first - 1].x);
      return Scalar(x);
    }
    case Kind::Sum: {
      if (e.lhs().kind() == Kind::Const) return bm_threshold(e.rhs(), eps, tail);
      if (e.rhs().kind() == Kind::Const) return bm_threshold(e.lhs(), eps, tail);
      Scalar half = eps / Scalar(Rational(2));
      return max_value(bm_threshold(e.lhs(), half, tail), bm_threshold(e.rhs(), half, tail));
    }
    case Kind::Scale:
      if (e.coeff() == 0) return Scalar(tail);
      return bm_threshold(e.inner(), eps / Scalar(abs(e.coeff())), tail);
    default:
      throw Error(ErrorCode::InvalidArgument, print(e) + " is not a structural monotone form");
  }
}

Classification bm_classification(const MonotoneWitness& w) {
  Classification c;
  c.verdict = (w.tends_to_zero && w.direction != Direction::Increasing) ? Verdict::Null : Verdict::BM;
  c.rule = w.rule;
  c.monotone = w;
  return c;
}

Rational max_tail(std::initializer_list<Rational> tails) { return std::max(tails); }

}  // namespace

LimitCertificate LimitEngine::limit_bm(const Expr& e, const MonotoneWitness& w) const {
  LimitCertificate cert = certify(e, bm_classification(w));
  fill_eps_table(cert);
  return cert;
}

LimitCertificate LimitEngine::limit(const Expr& e) const {
  LimitCertificate cert = certify(e, classify(e));
  fill_eps_table(cert);
  return cert;
}

LimitCertificate LimitEngine::certify(const Expr& e, const Classification& c) const {
  LimitCertificate cert{e};
  cert.eta_lim = config_.tolerances.eta_lim;
  cert.witnesses = c;
  cert.tail_start = e.tail_start();
  const LimitLaws& laws = config_.laws;

  switch (c.verdict) {
    case Verdict::BM:
    case Verdict::Null: {
      const MonotoneWitness& w = *c.monotone;
      cert.limit = Scalar(bm_value(e));
      cert.path = Path::SupInf;
      cert.tail_start = std::max(w.tail_start, e.tail_start());
      cert.bound = w.bound;
      cert.gap = Scalar();
      return cert;
    }
    case Verdict::Sandwich: {
      LimitCertificate lo = certify(*c.lower, c.children.at(0));
      LimitCertificate up = certify(*c.upper, c.children.at(1));
      Scalar gap = (up.limit - lo.limit).abs();
      if (definitely_less(tol(config_.tolerances.eta_lim), gap)) {
        throw SandwichGap(gap.to_double(), "envelopes of " + print(e) + " have limits " + format_decimal(lo.limit) +
                                               " and " + format_decimal(up.limit));
      }
      cert.limit = (lo.limit + up.limit) / Scalar(Rational(2));
      cert.path = Path::Sandwich;
      cert.tail_start = max_tail({e.tail_start(), lo.tail_start, up.tail_start});
      cert.bound = max_value(lo.bound, up.bound);
      cert.gap = gap;
      cert.children = {std::move(lo), std::move(up)};
      return cert;
    }
    case Verdict::LawDerived: {
      switch (c.law) {
        case Law::Sum: {
          LimitCertificate a = certify(e.lhs(), c.children.at(0));
          LimitCertificate b = certify(e.rhs(), c.children.at(1));
          cert.limit = laws.sum(a.limit, b.limit);
          cert.path = Path::LawSum;
          cert.tail_start = max_tail({e.tail_start(), a.tail_start, b.tail_start});
          cert.bound = a.bound + b.bound;
          cert.gap = a.gap + b.gap;
          cert.children = {std::move(a), std::move(b)};
          break;
        }
        case Law::Prod: {
          LimitCertificate a = certify(e.lhs(), c.children.at(0));
          LimitCertificate b = certify(e.rhs(), c.children.at(1));
          cert.limit = laws.prod(a.limit, b.limit);
          cert.path = Path::LawProd;
          cert.tail_start = max_tail({e.tail_start(), a.tail_start, b.tail_start});
          cert.bound = a.bound * b.bound;
          cert.gap = a.gap * b.bound + b.gap * a.bound;
          cert.children = {std::move(a), std::move(b)};
          break;
        }
        case Law::Scale: {
          LimitCertificate a = certify(e.inner(), c.children.at(0));
          Scalar k(e.coeff());
          cert.limit = laws.prod(k, a.limit);
          cert.path = Path::LawProd;
          cert.tail_start = max_tail({e.tail_start(), a.tail_start});
          cert.bound = k.abs() * a.bound;
          cert.gap = k.abs() * a.gap;
          cert.children = {std::move(a)};
          break;
        }
        case Law::Recip: {
          LimitCertificate a = certify(e.inner(), c.children.at(0));
          const Scalar& beta = a.limit;
          if (compare(beta, Scalar(), config_.tolerances.eta_lim) == Ordering::Equal)
            throw Error(ErrorCode::ReciprocalOfNull, "inv(" + print(e.inner()) + "): operand tends to 0");
          Scalar half = beta.abs() / Scalar(Rational(2));
          // Beyond this point |g| > |beta|/2, so 1/g is defined and bounded.
          Rational guarded = rational_upper(compose_threshold(a, half));
          cert.limit = laws.recip(beta);
          cert.path = Path::LawRecip;
          cert.tail_start = max_tail({e.tail_start(), a.tail_start, guarded});
          cert.bound = Scalar(Rational(2)) / beta.abs();
          cert.gap = Scalar(Rational(2)) * a.gap / (beta * beta);
          cert.children = {std::move(a)};
          break;
        }
      }
      cert.law = c.law;
      return cert;
    }
    case Verdict::Unknown:
      break;
  }
  throw Error(ErrorCode::NotConvergent, "no rule classifies " + c.reason);
}

void LimitEngine::fill_eps_table(LimitCertificate& cert) const {
  cert.eps_table.clear();
  for (const Rational& e : config_.eps_schedule) {
    Scalar eps(e);
    // Envelope evidence cannot resolve eps below its own gap.
    if (cert.envelope && !definitely_less(cert.gap, eps)) continue;
    if (cert.path == Path::Sandwich && !cert.envelope &&
        !definitely_less(cert.gap / Scalar(Rational(2)), eps))
      continue;
    Threshold t = eps_witness(cert, eps);
    cert.eps_table.push_back({eps, t.value});
  }
}

Scalar LimitEngine::compose_threshold(const LimitCertificate& cert, const Scalar& eps) const {
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  Scalar tail(cert.tail_start);
  const Scalar two(Rational(2));

  switch (cert.path) {
    case Path::SupInf:
      return max_value(bm_threshold(cert.expr, eps, cert.tail_start), tail);
    case Path::Sandwich: {
      if (cert.envelope) {
        const EnvelopePair& p = *cert.envelope;
        for (std::size_t i = 0; i < p.grid.size(); ++i) {
          if (definitely_less(cert.limit - eps, p.lower[i]) && definitely_less(p.upper[i], cert.limit + eps))
            return max_value(Scalar(p.grid[i]), tail);
        }
        throw Error(ErrorCode::InvalidArgument,
                    "eps " + format_decimal(eps) + " is finer than the envelope of " + print(cert.expr));
      }
      Scalar inner = eps - cert.gap / two;
      if (inner.sign() <= 0)
        throw Error(ErrorCode::InvalidArgument, "eps " + format_decimal(eps) + " is below half the sandwich gap");
      Scalar x = max_value(compose_threshold(cert.children.at(0), inner), compose_threshold(cert.children.at(1), inner));
      return max_value(x, tail);
    }
    case Path::LawSum: {
      Scalar half = eps / two;
      Scalar x = max_value(compose_threshold(cert.children.at(0), half), compose_threshold(cert.children.at(1), half));
      return max_value(x, tail);
    }
    case Path::LawProd: {
      if (cert.law == Law::Scale) {
        const Rational& k = cert.expr.coeff();
        if (k == 0) return tail;
        return max_value(compose_threshold(cert.children.at(0), eps / Scalar(abs(k))), tail);
      }
      // |fg - ab| <= |f-a||g| + |a||g-b| with |g| <= Bg and |a| <= Bf.
      const auto& f = cert.children.at(0);
      const auto& g = cert.children.at(1);
      Scalar bf(std::max(rational_upper(f.bound), Rational(1)));
      Scalar bg(std::max(rational_upper(g.bound), Rational(1)));
      Scalar x = max_value(compose_threshold(f, eps / (two * bg)), compose_threshold(g, eps / (two * bf)));
      return max_value(x, tail);
    }
    case Path::LawRecip: {
      // |1/g - 1/b| <= 2|g-b|/b^2 once |g| > |b|/2 (built into tail_start).
      const auto& g = cert.children.at(0);
      const Scalar& beta = g.limit;
      Scalar x = compose_threshold(g, eps * beta * beta / two);
      return max_value(x, tail);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown certificate path");
}

std::vector<Rational> LimitEngine::verification_points(const Scalar& a) const {
  const int n = config_.verify.samples;
  const int decades = config_.verify.decades;
  std::vector<Rational> out;
  out.reserve(n);
  Real base = a.upper();
  bool positive = a.sign() > 0;
  for (int k = 1; k <= n; ++k) {
    Real factor = boost::multiprecision::pow(Real(10), Real(decades) * k / n);
    Real x = positive ? Real(base * factor) : Real(base + factor - 1);
    double d = static_cast<double>(x);
    Rational r = (std::isfinite(d) && std::abs(d) < 1e300) ? Rational(d) : to_rational(x);
    if (Scalar(r).real() <= base) r = to_rational(x);
    out.push_back(std::move(r));
  }
  return out;
}

Threshold LimitEngine::eps_witness(const LimitCertificate& cert, const Scalar& eps) const {
  Scalar x = compose_threshold(cert, eps);
  auto points = verification_points(x);
  const EvalOptions opts = config_.eval();
  for (const Rational& p : points) {
    Scalar v = evaluate(cert.expr, p, opts);
    Scalar dev = (v - cert.limit).abs();
    if (!definitely_less(dev, eps)) {
      throw VerificationFailed(format_decimal(Scalar(p)), format_decimal(v),
                               "|f(x) - " + format_decimal(cert.limit) + "| >= " + format_decimal(eps) + " at x = " +
                                   format_decimal(Scalar(p)) + " (f = " + print(cert.expr) + ", X = " +
                                   format_decimal(x) + ")");
    }
  }
  return Threshold{x, "|f(x) - L| < " + format_decimal(eps) + " for x > X", static_cast<int>(points.size())};
}

Threshold LimitEngine::separation(const LimitCertificate& f, const LimitCertificate& g) const {
  Scalar diff = g.limit - f.limit;
  Scalar margin = Scalar(Rational(2)) * tol(config_.tolerances.eta_lim);
  if (!definitely_less(margin, diff)) {
    throw Error(ErrorCode::NotSeparated, "L(f) = " + format_decimal(f.limit) + " is not below L(g) = " +
                                             format_decimal(g.limit) + " by more than 2 eta_lim");
  }
  Scalar delta = diff / Scalar(Rational(2));
  Threshold tf = eps_witness(f, delta);
  Threshold tg = eps_witness(g, delta);
  Scalar a = max_value(tf.value, tg.value);

  auto points = verification_points(a);
  const EvalOptions opts = config_.eval();
  for (const Rational& p : points) {
    Scalar vf = evaluate(f.expr, p, opts);
    Scalar vg = evaluate(g.expr, p, opts);
    if (!definitely_less(vf, vg)) {
      throw VerificationFailed(format_decimal(Scalar(p)), format_decimal(vf - vg),
                               "f(x) >= g(x) at x = " + format_decimal(Scalar(p)));
    }
  }
  return Threshold{a, "f(x) < g(x) for x > a", static_cast<int>(points.size())};
}

}  // namespace sandwich
