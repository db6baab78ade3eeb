#include "sandwich/monotone.hpp"

#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"
#include "sandwich/table.hpp"

#include <cmath>

namespace sandwich {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::BM: return "bm";
    case Verdict::Null: return "null";
    case Verdict::Sandwich: return "sandwich";
    case Verdict::LawDerived: return "law";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view law_name(Law l) noexcept {
  switch (l) {
    case Law::Sum: return "sum";
    case Law::Prod: return "prod";
    case Law::Recip: return "recip";
    case Law::Scale: return "scale";
  }
  return "sum";
}

std::vector<std::string> MonotoneWitness::trace() const {
  std::vector<std::string> out{rule};
  for (const auto& p : premises) {
    auto t = p.trace();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

std::vector<std::string> Classification::trace() const {
  if ((verdict == Verdict::BM || verdict == Verdict::Null) && monotone) return monotone->trace();
  std::vector<std::string> out{rule};
  for (const auto& c : children) {
    auto t = c.trace();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

namespace {

Rational positive_tail(const Rational& a) { return a > 0 ? a : Rational(1); }

Scalar powtail_bound(const Rational& k, const Rational& c, const Rational& tail) {
  return Scalar(abs(k)) * power(Scalar(tail), Rational(-c));
}

Direction flip(Direction d) {
  switch (d) {
    case Direction::Increasing: return Direction::Decreasing;
    case Direction::Decreasing: return Direction::Increasing;
    case Direction::Constant: return Direction::Constant;
  }
  return d;
}

// Direction of a sum of two functions monotone in directions a and b, when
// it is determined.
std::optional<Direction> combine(Direction a, Direction b) {
  if (a == Direction::Constant) return b;
  if (b == Direction::Constant || a == b) return a;
  return std::nullopt;
}

Classification from_witness(MonotoneWitness w) {
  Classification c;
  bool null_verdict = w.tends_to_zero && w.direction != Direction::Increasing;
  c.verdict = null_verdict ? Verdict::Null : Verdict::BM;
  c.rule = w.rule;
  c.monotone = std::move(w);
  return c;
}

Classification unknown(std::string subterm) {
  Classification c;
  c.verdict = Verdict::Unknown;
  c.rule = "R9:unknown";
  c.reason = std::move(subterm);
  return c;
}

Classification law(Law l, std::string rule, std::vector<Classification> children) {
  Classification c;
  c.verdict = Verdict::LawDerived;
  c.law = l;
  c.rule = std::move(rule);
  c.children = std::move(children);
  return c;
}

const std::string& first_unknown(const Classification& a, const Classification& b) {
  return a.verdict == Verdict::Unknown ? a.reason : b.reason;
}

Classification classify_node(const Expr& e);

std::optional<Classification> try_sandwich(const Expr& e, const Expr& bounded, const Expr& null,
                                           const Classification& null_class) {
  if (!null_class.null_form()) return std::nullopt;
  auto tb = structural_bound(bounded);
  if (!tb) return std::nullopt;
  const MonotoneWitness& nw = *null_class.monotone;
  Expr magnitude = nw.direction == Direction::Increasing ? Expr::scale(-1, null) : null;
  Rational b = rational_upper(tb->bound);
  Rational tail = std::max({e.tail_start(), tb->tail, nw.tail_start});
  Expr lower = Expr::scale(-b, magnitude).lifted(tail);
  Expr upper = Expr::scale(b, magnitude).lifted(tail);

  Classification c;
  c.verdict = Verdict::Sandwich;
  c.rule = "R7:bounded-times-null";
  c.children = {classify_node(lower), classify_node(upper)};
  c.lower = std::move(lower);
  c.upper = std::move(upper);
  return c;
}

Classification classify_node(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const: {
      MonotoneWitness w;
      w.direction = Direction::Constant;
      w.bound = Scalar(abs(e.coeff()));
      w.tail_start = e.tail_start();
      w.tends_to_zero = e.coeff() == 0;
      w.rule = "R1:const";
      return from_witness(std::move(w));
    }
    case Kind::PowTail: {
      MonotoneWitness w;
      bool positive = e.coeff() > 0;
      w.direction = positive ? Direction::Decreasing : Direction::Increasing;
      w.tail_start = positive_tail(e.tail_start());
      w.bound = powtail_bound(e.coeff(), e.exponent(), w.tail_start);
      w.tends_to_zero = true;
      w.rule = positive ? "R2:powtail-null" : "R2:powtail-negnull";
      return from_witness(std::move(w));
    }
    case Kind::Table: {
      const auto& t = e.table_function();
      MonotoneWitness w;
      w.direction = t.direction();
      w.bound = Scalar(t.bound());
      w.tail_start = e.tail_start();
      w.rule = "R3:table";
      return from_witness(std::move(w));
    }
    case Kind::Alt:
      return unknown(print(e));
    case Kind::Sum: {
      Classification cl = classify_node(e.lhs());
      Classification cr = classify_node(e.rhs());
      if (cl.null_form() && cr.null_form()) {
        if (auto d = combine(cl.monotone->direction, cr.monotone->direction)) {
          MonotoneWitness w;
          w.direction = *d;
          w.bound = cl.monotone->bound + cr.monotone->bound;
          w.tail_start = std::max({e.tail_start(), cl.monotone->tail_start, cr.monotone->tail_start});
          w.tends_to_zero = true;
          w.rule = "R4:null-sum";
          w.premises = {*cl.monotone, *cr.monotone};
          return from_witness(std::move(w));
        }
      }
      if (e.lhs().kind() == Kind::Const && cr.null_form()) {
        MonotoneWitness w;
        w.direction = cr.monotone->direction;
        w.bound = Scalar(abs(e.lhs().coeff())) + cr.monotone->bound;
        w.tail_start = std::max({e.tail_start(), cr.monotone->tail_start});
        w.tends_to_zero = e.lhs().coeff() == 0;
        w.rule = "R6:const-plus-null";
        w.premises = {*cl.monotone, *cr.monotone};
        return from_witness(std::move(w));
      }
      if (cl.convergent() && cr.convergent()) return law(Law::Sum, "R8:law-sum", {std::move(cl), std::move(cr)});
      return unknown(first_unknown(cl, cr));
    }
    case Kind::Scale: {
      Classification ci = classify_node(e.inner());
      const Rational& k = e.coeff();
      if (ci.monotone) {
        MonotoneWitness w;
        w.direction = k == 0 ? Direction::Constant : (k < 0 ? flip(ci.monotone->direction) : ci.monotone->direction);
        w.bound = Scalar(abs(k)) * ci.monotone->bound;
        w.tail_start = std::max(e.tail_start(), ci.monotone->tail_start);
        w.tends_to_zero = k == 0 || ci.monotone->tends_to_zero;
        w.rule = ci.null_form() || k == 0 ? "R5:scale-null" : "R5:scale-bm";
        w.premises = {*ci.monotone};
        return from_witness(std::move(w));
      }
      if (ci.convergent()) return law(Law::Scale, "R8:law-scale", {std::move(ci)});
      return unknown(ci.reason);
    }
    case Kind::Prod: {
      Classification cl = classify_node(e.lhs());
      Classification cr = classify_node(e.rhs());
      if (auto s = try_sandwich(e, e.lhs(), e.rhs(), cr)) return std::move(*s);
      if (auto s = try_sandwich(e, e.rhs(), e.lhs(), cl)) return std::move(*s);
      if (cl.convergent() && cr.convergent()) return law(Law::Prod, "R8:law-prod", {std::move(cl), std::move(cr)});
      return unknown(first_unknown(cl, cr));
    }
    case Kind::Recip: {
      Classification ci = classify_node(e.inner());
      if (ci.convergent()) return law(Law::Recip, "R8:law-recip", {std::move(ci)});
      return unknown(ci.reason);
    }
  }
  return unknown(print(e));
}

Rational sample_point(double v) { return Rational(v); }

}  // namespace

std::optional<TailBound> structural_bound(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const:
      return TailBound{Scalar(abs(e.coeff())), e.tail_start()};
    case Kind::PowTail: {
      Rational t = positive_tail(e.tail_start());
      return TailBound{powtail_bound(e.coeff(), e.exponent(), t), t};
    }
    case Kind::Alt:
      return TailBound{Scalar(Rational(1)), e.tail_start()};
    case Kind::Table:
      return TailBound{Scalar(e.table_function().bound()), e.tail_start()};
    case Kind::Sum:
    case Kind::Prod: {
      auto a = structural_bound(e.lhs());
      auto b = structural_bound(e.rhs());
      if (!a || !b) return std::nullopt;
      Scalar bound = e.kind() == Kind::Sum ? a->bound + b->bound : a->bound * b->bound;
      return TailBound{bound, std::max({a->tail, b->tail, e.tail_start()})};
    }
    case Kind::Scale: {
      auto a = structural_bound(e.inner());
      if (!a) return std::nullopt;
      return TailBound{Scalar(abs(e.coeff())) * a->bound, std::max(a->tail, e.tail_start())};
    }
    case Kind::Recip:
      return std::nullopt;
  }
  return std::nullopt;
}

Classification classify(const Expr& e) { return classify_node(e); }

std::optional<std::pair<Rational, Rational>> falsify_monotone(const Expr& e, const MonotoneWitness& w,
                                                              int samples, const EvalOptions& options) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "falsify_monotone needs at least 2 samples");
  Rational base = std::max(w.tail_start, e.tail_start());
  std::vector<Rational> grid;
  grid.reserve(samples);
  double b = base.convert_to<double>();
  for (int j = 1; j <= samples; ++j) {
    double factor = std::pow(10.0, 6.0 * j / samples);
    Rational x = base > 0 ? sample_point(b * factor) : Rational(base + sample_point(factor));
    if (x <= base) continue;
    grid.push_back(std::move(x));
  }
  Scalar slack(Rational(2) * Rational(options.eta_eval));
  std::optional<Scalar> prev;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    Scalar v = evaluate(e, grid[j], options);
    if (prev) {
      Scalar rise = v - *prev;
      bool violated = false;
      switch (w.direction) {
        case Direction::Decreasing: violated = definitely_less(slack, rise); break;
        case Direction::Increasing: violated = definitely_less(slack, -rise); break;
        case Direction::Constant: violated = definitely_less(slack, rise.abs()); break;
      }
      if (violated) return std::make_pair(grid[j - 1], grid[j]);
    }
    prev = std::move(v);
  }
  return std::nullopt;
}

NullWitness null_from_indices(const Expr& e, long n_max, const EvalOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  Classification c = classify(e);
  if (!c.monotone || c.monotone->direction == Direction::Increasing)
    throw Error(ErrorCode::NotDecreasing, print(e) + " is not classified as a decreasing bounded function");

  NullWitness out;
  out.monotone = *c.monotone;
  Rational base = positive_tail(std::max(c.monotone->tail_start, e.tail_start()));
  constexpr int kMaxDoublings = 64;
  for (long n = 1; n <= n_max; ++n) {
    Scalar target(Rational(1, n));
    std::optional<Rational> found;
    Rational x = base;
    for (int k = 1; k <= kMaxDoublings && !found; ++k) {
      x *= 2;
      if (definitely_less(evaluate(e, x, options), target)) found = x;
    }
    if (!found) {
      throw SearchExhausted(n, "no x <= " + rational_literal(base) + "*2^64 with " + print(e) +
                                   " < 1/" + std::to_string(n));
    }
    out.indices.emplace_back(n, std::move(*found));
  }
  return out;
}

}  // namespace sandwich
