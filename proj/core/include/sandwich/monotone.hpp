#pragma once

#include "sandwich/evaluate.hpp"
#include "sandwich/expr.hpp"
#include "sandwich/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sandwich {

/// Claim that a function is bounded and monotone on (tail_start, inf),
/// together with the rule that established it and the premises it used.
struct MonotoneWitness {
  Direction direction = Direction::Constant;
  Scalar bound;
  Rational tail_start{1};
  /// The function tends to 0 (a null form: >= 0 decreasing, <= 0 increasing,
  /// or identically 0).
  bool tends_to_zero = false;
  std::string rule;
  std::vector<MonotoneWitness> premises;

  std::vector<std::string> trace() const;
};

/// Null witness: x_n with N(x_n) < 1/n for n = 1..n_max.
struct NullWitness {
  MonotoneWitness monotone;
  std::vector<std::pair<long, Rational>> indices;
};

enum class Verdict { BM, Null, Sandwich, LawDerived, Unknown };
enum class Law { Sum, Prod, Recip, Scale };

std::string_view verdict_name(Verdict v) noexcept;
std::string_view law_name(Law l) noexcept;

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  /// BM and Null verdicts.
  std::optional<MonotoneWitness> monotone;
  /// Sandwich verdict: lower <= f <= upper on the tail.
  std::optional<Expr> lower;
  std::optional<Expr> upper;
  /// Sandwich: classifications of lower and upper. LawDerived: operands.
  std::vector<Classification> children;
  Law law = Law::Sum;
  /// Unknown verdict: names the first unclassifiable subterm.
  std::string reason;

  bool convergent() const noexcept { return verdict != Verdict::Unknown; }
  bool null_form() const noexcept { return monotone && monotone->tends_to_zero; }
  std::vector<std::string> trace() const;
};

/// Structural classification into BM / Null / Sandwich / LawDerived, by
/// the priority-ordered rules:
///   R1 Const                      -> BM constant
///   R2 PowTail K>0 / K<0          -> Null / negated null (increasing to 0)
///   R3 Table                      -> BM by declaration
///   R4 null + null                -> null (same sign)
///   R5 Scale(C, null)             -> null, negated null or zero;
///      Scale(C, BM)               -> BM with direction flipped for C<0
///   R6 Const(l) + null form       -> BM monotone to l
///   R7 bounded * null form        -> Sandwich(-B|N|, +B|N|)
///   R8 Sum/Prod/Recip/Scale of convergent operands -> LawDerived
///   R9 anything else              -> Unknown
/// Never throws for well-formed input; Unknown is a verdict.
Classification classify(const Expr& e);

/// |e| <= bound on (tail, inf), derived structurally for reciprocal-free
/// expressions.
struct TailBound {
  Scalar bound;
  Rational tail;
};
std::optional<TailBound> structural_bound(const Expr& e);

/// Looks for an adjacent pair on a geometric grid over
/// (tail_start, tail_start * 1e6] that violates the claimed direction by
/// more than 2 * eta_eval. An empty result is absence of refutation only.
std::optional<std::pair<Rational, Rational>> falsify_monotone(const Expr& e, const MonotoneWitness& w,
                                                              int samples, const EvalOptions& options = {});

/// For n = 1..n_max finds the first doubling-grid point x_n = a * 2^k
/// (k >= 1, a = witness tail) with e(x_n) < 1/n. Throws SearchExhausted(n)
/// for the first n without such a point below a * 2^64, NotDecreasing if
/// e is not classified as a decreasing or constant BM function.
NullWitness null_from_indices(const Expr& e, long n_max, const EvalOptions& options = {});

}  // namespace sandwich
