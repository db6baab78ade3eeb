#pragma once

#include "sandwich/expr.hpp"
#include "sandwich/scalar.hpp"

namespace sandwich {

struct EvalOptions {
  /// Reciprocal operands below this magnitude are rejected.
  double eta_eval = 1e-12;
};

/// Point evaluation on the tail. Exact arguments stay exact through every
/// node except non-integer powers that are not perfect powers.
///
/// Errors: DomainError when x <= tail_start; DivisionNearZero when a
/// reciprocal operand is (numerically) zero.
Scalar evaluate(const Expr& e, const Scalar& x, const EvalOptions& options = {});

inline Scalar evaluate(const Expr& e, const Rational& x, const EvalOptions& options = {}) {
  return evaluate(e, Scalar(x), options);
}

/// +1 if floor(x) is even, -1 otherwise.
int alt_sign(const Scalar& x);

}  // namespace sandwich
