#include "sandwich/limit.hpp"

#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"

#include <algorithm>
#include <cmath>

namespace sandwich {

namespace {

struct Sample {
  Rational x;
  long grid_index;  // -1 for probes
};

Rational probe_point(const Rational& base, double factor) {
  double d = base.convert_to<double>() * factor;
  if (std::isfinite(d)) return Rational(d);
  return to_rational(Real(base) * Real(factor));
}

}  // namespace

std::pair<std::vector<Scalar>, std::vector<Scalar>> suffix_extrema(const std::vector<Scalar>& values) {
  std::vector<Scalar> hi(values.size()), lo(values.size());
  for (std::size_t k = values.size(); k-- > 0;) {
    bool last = k + 1 == values.size();
    hi[k] = (last || value_less(hi[k + 1], values[k])) ? values[k] : hi[k + 1];
    lo[k] = (last || value_less(values[k], lo[k + 1])) ? values[k] : lo[k + 1];
  }
  return {std::move(hi), std::move(lo)};
}

EnvelopePair LimitEngine::envelope(const Expr& e, const GridSpec& spec) const {
  if (spec.count < 2) throw Error(ErrorCode::InvalidArgument, "envelope grid needs at least 2 points");
  if (spec.ratio <= 1) throw Error(ErrorCode::InvalidArgument, "envelope grid ratio must exceed 1");
  if (spec.start <= e.tail_start())
    throw Error(ErrorCode::DomainError, "grid start " + rational_literal(spec.start) + " is not above tail_start " +
                                            rational_literal(e.tail_start()));

  EnvelopePair out{e, {}, {}, {}, {}};
  out.grid.reserve(spec.count);
  Rational x = spec.start;
  for (int i = 0; i < spec.count; ++i) {
    out.grid.push_back(x);
    x *= spec.ratio;
  }

  const EnvelopeProbes& probes = config_.probes;
  std::vector<Sample> samples;
  for (long i = 0; i < spec.count; ++i) {
    samples.push_back({out.grid[i], i});
    if (probes.unit_companions) samples.push_back({out.grid[i] + 1, -1});
  }
  const Rational& last = out.grid.back();
  for (int j = 1; j <= probes.tail_points; ++j) {
    double factor = std::pow(10.0, double(probes.tail_decades) * j / probes.tail_points);
    Rational p = probe_point(last, factor);
    if (p <= last) continue;
    samples.push_back({p, -1});
    if (probes.unit_companions) samples.push_back({p + 1, -1});
  }
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.x < b.x; });

  const EvalOptions opts = config_.eval();
  std::vector<Scalar> sampled;
  sampled.reserve(samples.size());
  for (const Sample& s : samples) sampled.push_back(evaluate(e, s.x, opts));
  auto [hi, lo] = suffix_extrema(sampled);

  out.values.resize(spec.count);
  out.upper.resize(spec.count);
  out.lower.resize(spec.count);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    long i = samples[j].grid_index;
    if (i < 0) continue;
    out.values[i] = sampled[j];
    out.upper[i] = hi[j];
    out.lower[i] = lo[j];
  }
  return out;
}

LimitCertificate LimitEngine::limit_from_envelope(const EnvelopePair& p) const {
  if (p.grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty envelope");
  Scalar gap = p.final_gap();
  if (definitely_less(Scalar(Rational(config_.tolerances.eta_env)), gap)) {
    throw SandwichGap(gap.to_double(), "envelope gap " + format_decimal(gap) + " at x = " +
                                           format_decimal(Scalar(p.grid.back())) + " exceeds eta_env");
  }
  LimitCertificate cert{p.source};
  cert.limit = (p.upper.back() + p.lower.back()) / Scalar(Rational(2));
  cert.path = Path::Sandwich;
  cert.eta_lim = config_.tolerances.eta_lim;
  cert.witnesses.verdict = Verdict::Sandwich;
  cert.witnesses.rule = "envelope";
  cert.tail_start = std::max(p.grid.front(), p.source.tail_start());
  cert.gap = gap;
  cert.bound = max_value(p.upper.front().abs(), p.lower.front().abs());
  cert.envelope = std::make_shared<const EnvelopePair>(p);
  fill_eps_table(cert);
  return cert;
}

}  // namespace sandwich
