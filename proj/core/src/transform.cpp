#include "sandwich/transform.hpp"

#include "sandwich/error.hpp"

namespace sandwich {

TailTarget TailTarget::parse(std::string_view text) {
  if (text == "minus_infinity" || text == "-inf") return minus_infinity();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view kind = text.substr(0, colon);
    auto point = Scalar::parse_rational(text.substr(colon + 1));
    if (point) {
      if (kind == "c_plus") return c_plus(*point);
      if (kind == "c_minus") return c_minus(*point);
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              "target must be c_plus:<c>, c_minus:<c> or minus_infinity, got '" + std::string(text) + "'");
}

std::string TailTarget::str() const {
  switch (kind) {
    case Kind::CPlus: return "c_plus:" + rational_literal(point);
    case Kind::CMinus: return "c_minus:" + rational_literal(point);
    case Kind::MinusInfinity: return "minus_infinity";
  }
  return "minus_infinity";
}

Rational substitute(const TailTarget& target, const Rational& t) {
  switch (target.kind) {
    case TailTarget::Kind::CPlus: return target.point + 1 / t;
    case TailTarget::Kind::CMinus: return target.point - 1 / t;
    case TailTarget::Kind::MinusInfinity: return -t;
  }
  return t;
}

namespace {

[[noreturn]] void unsupported(const Expr& e, const TailTarget& target, const std::string& why) {
  throw Error(ErrorCode::UnsupportedComposition,
              print(e) + " under " + target.str() + ": " + why);
}

Expr rewrite(const Expr& e, const TailTarget& target) {
  const Rational tail = 1;
  switch (e.kind()) {
    case Kind::Const:
      return Expr::constant(e.coeff(), tail);
    case Kind::PowTail: {
      if (target.kind != TailTarget::Kind::MinusInfinity)
        unsupported(e, target, "x^-c of a shifted reciprocal argument is outside the grammar");
      // K (-t)^(-p/q) is real only for odd q, where it equals (-1)^p K t^(-p/q).
      const Rational& c = e.exponent();
      if (denominator(c) % 2 == 0) unsupported(e, target, "even root of a negative argument");
      Rational k = e.coeff();
      if (numerator(c) % 2 != 0) k = -k;
      return Expr::pow_tail(k, c, tail);
    }
    case Kind::Alt:
      unsupported(e, target, "alt(x) does not commute with the substitution");
    case Kind::Table:
      unsupported(e, target, "tables are declared only on tails toward +inf");
    case Kind::Sum:
      return Expr::sum(rewrite(e.lhs(), target), rewrite(e.rhs(), target));
    case Kind::Prod:
      return Expr::prod(rewrite(e.lhs(), target), rewrite(e.rhs(), target));
    case Kind::Recip:
      return Expr::recip(rewrite(e.inner(), target));
    case Kind::Scale:
      return Expr::scale(e.coeff(), rewrite(e.inner(), target));
  }
  unsupported(e, target, "unknown node");
}

}  // namespace

Expr transform_tail(const Expr& e, const TailTarget& target) { return rewrite(e, target); }

}  // namespace sandwich
