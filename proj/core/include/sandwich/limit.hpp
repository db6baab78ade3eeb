#pragma once

#include "sandwich/evaluate.hpp"
#include "sandwich/expr.hpp"
#include "sandwich/monotone.hpp"
#include "sandwich/scalar.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sandwich {

struct Tolerances {
  double eta_eval = 1e-12;  ///< evaluation / reciprocal guard
  double eta_lim = 1e-9;    ///< limit equality
  double eta_env = 1e-3;    ///< acceptable final envelope gap
};

/// How thresholds are spot-checked: `samples` geometric points spanning
/// `decades` powers of ten above the threshold.
struct VerifyPlan {
  int decades = 3;
  int samples = 64;
};

/// Geometric grid x_i = start * ratio^i, i = 0..count-1.
struct GridSpec {
  Rational start{3, 2};
  Rational ratio{2};
  int count = 20;
};

/// Extra sampling used to approximate sup/inf over [x_i, inf): every sample
/// t is paired with t + 1 so unit-period oscillation is always seen, and the
/// grid is followed by probes spanning `tail_decades` beyond its last point.
struct EnvelopeProbes {
  int tail_decades = 3;
  int tail_points = 32;
  bool unit_companions = true;
};

/// Suffix envelopes of f on a grid: upper[i] is the largest and lower[i]
/// the smallest sampled value at points >= grid[i].
struct EnvelopePair {
  Expr source;
  std::vector<Rational> grid;
  std::vector<Scalar> values;
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;

  Scalar final_gap() const { return upper.back() - lower.back(); }
};

/// {suffix maxima, suffix minima} of a sample sequence, one right-to-left pass.
std::pair<std::vector<Scalar>, std::vector<Scalar>> suffix_extrema(const std::vector<Scalar>& values);

enum class Path { SupInf, Sandwich, LawSum, LawProd, LawRecip };
std::string_view path_name(Path p) noexcept;

struct EpsEntry {
  Scalar eps;
  Scalar x;
};

struct LimitCertificate {
  explicit LimitCertificate(Expr e) : expr(std::move(e)) {}

  Expr expr;
  Scalar limit;
  Path path = Path::SupInf;
  Classification witnesses;
  std::vector<EpsEntry> eps_table;
  double eta_lim = 1e-9;

  /// Tail on which `bound` and the sandwich inequalities hold.
  Rational tail_start{1};
  /// |L(upper) - L(lower)| for sandwich paths, propagated through laws.
  Scalar gap;
  /// |f| <= bound on (tail_start, inf).
  Scalar bound;
  /// Law operands, or {lower, upper} for symbolic sandwiches.
  std::vector<LimitCertificate> children;
  /// Set for law paths; Scale reports as law:prod.
  std::optional<Law> law;
  /// Set for envelope-derived certificates.
  std::shared_ptr<const EnvelopePair> envelope;
};

/// A tail start a with the quantified claim it witnesses.
struct Threshold {
  Scalar value;
  std::string statement;
  int verified_samples = 0;
};

/// The combination rules used by laws paths. Replaceable so the property
/// battery can demonstrate that it notices a broken law.
struct LimitLaws {
  std::function<Scalar(const Scalar&, const Scalar&)> sum;
  std::function<Scalar(const Scalar&, const Scalar&)> prod;
  std::function<Scalar(const Scalar&)> recip;

  static LimitLaws standard();
};

struct EngineConfig {
  Tolerances tolerances;
  VerifyPlan verify;
  EnvelopeProbes probes;
  /// eps values recorded in every certificate's eps_table.
  std::vector<Rational> eps_schedule{Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  LimitLaws laws = LimitLaws::standard();

  EvalOptions eval() const { return EvalOptions{tolerances.eta_eval}; }
};

class LimitEngine {
 public:
  explicit LimitEngine(EngineConfig config = {});

  const EngineConfig& config() const noexcept { return config_; }

  /// Base case: analytic value for structural BM forms (Const -> c,
  /// PowTail -> 0, Const + null -> c), last sample for tables.
  LimitCertificate limit_bm(const Expr& e, const MonotoneWitness& w) const;

  /// Dispatch on classify(e). Errors: NotConvergent, SandwichGap,
  /// ReciprocalOfNull, VerificationFailed (a broken eps_table entry).
  LimitCertificate limit(const Expr& e) const;

  /// Evaluates f on the grid (plus probes), then suffix maxima and minima
  /// in one right-to-left pass.
  EnvelopePair envelope(const Expr& e, const GridSpec& grid) const;

  /// Midpoint of the last envelope values; SandwichGap if the last gap
  /// exceeds eta_env.
  LimitCertificate limit_from_envelope(const EnvelopePair& p) const;

  /// X(eps) composed from the evidence chain and spot-checked on
  /// (X, 10^decades X]. Throws VerificationFailed on a violated sample.
  Threshold eps_witness(const LimitCertificate& cert, const Scalar& eps) const;

  /// a such that f(x) < g(x) for x > a, via gamma = midpoint of the limits.
  /// Requires L(f) < L(g) - 2 eta_lim (NotSeparated otherwise).
  Threshold separation(const LimitCertificate& f, const LimitCertificate& g) const;

  /// The unverified threshold composition behind eps_witness.
  Scalar compose_threshold(const LimitCertificate& cert, const Scalar& eps) const;

  /// Verification sample points in (a, 10^decades a].
  std::vector<Rational> verification_points(const Scalar& a) const;

 private:
  LimitCertificate certify(const Expr& e, const Classification& c) const;
  void fill_eps_table(LimitCertificate& cert) const;

  EngineConfig config_;
};

}  // namespace sandwich
