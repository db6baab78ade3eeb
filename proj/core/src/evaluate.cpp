#include "sandwich/evaluate.hpp"

#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"
#include "sandwich/table.hpp"

namespace sandwich {

int alt_sign(const Scalar& x) {
  Integer f;
  if (x.is_exact()) {
    f = floor_of(x.rational());
  } else {
    Real lo = boost::multiprecision::floor(x.lower());
    Real hi = boost::multiprecision::floor(x.upper());
    if (lo != hi)
      throw Error(ErrorCode::DomainError, "alt(x) undetermined: x within error of an integer");
    f = Integer(lo.str(0, std::ios_base::fixed));
  }
  return (f % 2 == 0) ? 1 : -1;
}

namespace {

Scalar eval_node(const Expr& e, const Scalar& x, const EvalOptions& options) {
  switch (e.kind()) {
    case Kind::Const:
      return Scalar(e.coeff());
    case Kind::PowTail:
      return Scalar(e.coeff()) * power(x, Rational(-e.exponent()));
    case Kind::Alt:
      return Scalar(Rational(alt_sign(x)));
    case Kind::Table:
      return e.table_function().at(x);
    case Kind::Sum:
      return eval_node(e.lhs(), x, options) + eval_node(e.rhs(), x, options);
    case Kind::Prod:
      return eval_node(e.lhs(), x, options) * eval_node(e.rhs(), x, options);
    case Kind::Scale:
      return Scalar(e.coeff()) * eval_node(e.inner(), x, options);
    case Kind::Recip: {
      Scalar v = eval_node(e.inner(), x, options);
      if (v.is_zero() || v.abs().lower() < Real(options.eta_eval)) {
        throw Error(ErrorCode::DivisionNearZero,
                    "inv(" + print(e.inner()) + ") at x = " + format_decimal(x) + ": operand " + format_decimal(v));
      }
      return Scalar(Rational(1)) / v;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown node kind");
}

}  // namespace

Scalar evaluate(const Expr& e, const Scalar& x, const EvalOptions& options) {
  if (!definitely_less(Scalar(e.tail_start()), x)) {
    throw Error(ErrorCode::DomainError,
                "x = " + format_decimal(x) + " is not above the tail start " + rational_literal(e.tail_start()));
  }
  return eval_node(e, x, options);
}

}  // namespace sandwich
