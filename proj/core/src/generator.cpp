#include "sandwich/generator.hpp"

#include "sandwich/error.hpp"

#include <array>

namespace sandwich {

std::uint64_t ExprGenerator::uniform_below(std::uint64_t n) { return rng_() % n; }

Rational ExprGenerator::constant() {
  static constexpr std::array<long, 7> dens{1, 2, 3, 4, 5, 8, 10};
  long p = static_cast<long>(uniform_below(19)) - 9;
  return Rational(p, dens[uniform_below(dens.size())]);
}

Rational ExprGenerator::positive_constant() {
  static constexpr std::array<long, 7> dens{1, 2, 3, 4, 5, 8, 10};
  long p = static_cast<long>(uniform_below(9)) + 1;
  return Rational(p, dens[uniform_below(dens.size())]);
}

Rational ExprGenerator::exponent() { return Rational(static_cast<long>(uniform_below(6)) + 1, 2); }

Rational ExprGenerator::point_above(const Rational& above) {
  long num = static_cast<long>(uniform_below(1000000)) + 1;
  long den = static_cast<long>(uniform_below(100)) + 1;
  Rational step(num, den);
  if (step > 1000000) step = 1000000;
  return above + step;
}

Expr ExprGenerator::null(int depth) {
  if (depth <= 1 || uniform_below(3) == 0) return Expr::pow_tail(positive_constant(), exponent());
  if (depth >= 3 && coin()) return Expr::sum(null(depth - 1), null(depth - 1));
  if (coin()) return Expr::scale(positive_constant(), null(depth - 1));
  return Expr::sum(null(depth - 1), null(depth - 1));
}

Expr ExprGenerator::bm(int depth) {
  if (depth <= 1) return coin() ? Expr::constant(constant()) : Expr::pow_tail(positive_constant(), exponent());
  switch (uniform_below(4)) {
    case 0: return Expr::constant(constant());
    case 1: return Expr::sum(Expr::constant(constant()), null(depth - 1));
    case 2: return Expr::scale(-positive_constant(), null(depth - 1));
    default:
      if (depth < 3) return Expr::sum(Expr::constant(constant()), Expr::pow_tail(-positive_constant(), exponent()));
      return Expr::sum(Expr::constant(constant()), Expr::scale(-positive_constant(), null(depth - 2)));
  }
}

Expr ExprGenerator::away_from_zero(int depth) {
  Rational level = positive_constant() + 1;
  bool negate = coin();
  if (depth <= 1) return Expr::constant(negate ? Rational(-level) : level);
  if (!negate) return Expr::sum(Expr::constant(level), null(depth - 1));
  if (depth == 2) return Expr::sum(Expr::constant(-level), Expr::pow_tail(-positive_constant(), exponent()));
  return Expr::sum(Expr::constant(-level), Expr::scale(-1, null(depth - 2)));
}

Expr ExprGenerator::convergent(int depth) {
  if (depth <= 2) return bm(depth);
  switch (uniform_below(7)) {
    case 0: return bm(depth);
    case 1: return Expr::sum(convergent(depth - 1), convergent(depth - 1));
    case 2: return Expr::prod(convergent(depth - 1), convergent(depth - 1));
    case 3: return Expr::scale(constant(), convergent(depth - 1));
    case 4: return Expr::prod(Expr::alt(), null(depth - 1));
    case 5: return Expr::recip(away_from_zero(depth - 1));
    default: return Expr::sum(Expr::prod(Expr::alt(), null(depth - 2)), convergent(depth - 1));
  }
}

Expr ExprGenerator::any(int depth) {
  if (depth <= 1) return coin() ? Expr::alt() : Expr::pow_tail(positive_constant(), exponent());
  switch (uniform_below(4)) {
    case 0: return Expr::alt();
    case 1: return Expr::sum(Expr::alt(), convergent(depth - 1));
    case 2:
      if (depth < 3) return Expr::alt();
      return Expr::prod(Expr::alt(), Expr::sum(Expr::constant(positive_constant()), null(depth - 2)));
    default: return convergent(depth);
  }
}

Expr ExprGenerator::generate(int depth, ClassHint hint) {
  if (depth < 1 || depth > kMaxDepth)
    throw Error(ErrorCode::InvalidArgument, "generator depth must be in [1, " + std::to_string(kMaxDepth) + "]");
  switch (hint) {
    case ClassHint::Null: return null(depth);
    case ClassHint::BM: return bm(depth);
    case ClassHint::Convergent: return convergent(depth);
    case ClassHint::Any: return any(depth);
  }
  return any(depth);
}

Expr generate_expr(std::uint64_t seed, int depth, ClassHint hint) {
  ExprGenerator g(seed);
  return g.generate(depth, hint);
}

}  // namespace sandwich
