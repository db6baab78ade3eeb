#pragma once

#include "sandwich/expr.hpp"

#include <cstdint>
#include <random>

namespace sandwich {

enum class ClassHint { Any, BM, Null, Convergent };

/// Seeded random expressions. Every draw goes through uniform_below (plain
/// modulo on mt19937_64 output) so streams are identical across standard
/// libraries.
class ExprGenerator {
 public:
  static constexpr int kMaxDepth = 6;

  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Throws InvalidArgument unless 1 <= depth <= kMaxDepth.
  Expr generate(int depth, ClassHint hint);

  Expr null(int depth);
  Expr bm(int depth);
  Expr convergent(int depth);
  Expr any(int depth);
  /// Convergent with |limit| >= 1 and values bounded away from 0.
  Expr away_from_zero(int depth);

  /// p/q with p in [-9, 9], q in {1, 2, 3, 4, 5, 8, 10}.
  Rational constant();
  Rational positive_constant();
  /// c in {1/2, 1, 3/2, 2, 5/2, 3}.
  Rational exponent();
  /// A rational point in (above, above + 10^6].
  Rational point_above(const Rational& above);

  std::uint64_t uniform_below(std::uint64_t n);
  bool coin() { return uniform_below(2) == 1; }

 private:
  std::mt19937_64 rng_;
};

Expr generate_expr(std::uint64_t seed, int depth, ClassHint hint);

}  // namespace sandwich
