#pragma once

#include "sandwich/expr.hpp"

#include <string>
#include <string_view>

namespace sandwich {

struct TailTarget {
  enum class Kind { CPlus, CMinus, MinusInfinity };
  Kind kind = Kind::MinusInfinity;
  Rational point{0};

  static TailTarget c_plus(Rational c) { return {Kind::CPlus, std::move(c)}; }
  static TailTarget c_minus(Rational c) { return {Kind::CMinus, std::move(c)}; }
  static TailTarget minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }

  /// "c_plus:2", "c_minus:-1/2", "minus_infinity".
  static TailTarget parse(std::string_view text);
  std::string str() const;
};

/// Rewrites e(x) into an expression in t on a tail t > 1 whose limit as
/// t -> inf is the requested one: x = c + 1/t, x = c - 1/t or x = -t.
/// Only constant folding is applied to the result, so any subterm that the
/// substitution pushes outside the grammar raises UnsupportedComposition.
Expr transform_tail(const Expr& e, const TailTarget& target);

/// The x that corresponds to t under the target's substitution.
Rational substitute(const TailTarget& target, const Rational& t);

}  // namespace sandwich
