#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sandwich {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float_50;

enum class Ordering { Less, Equal, Greater };

/// A real number that is either an exact rational or a high-precision
/// approximation carrying an absolute error bound. Arithmetic stays exact
/// while both operands are exact; once an approximation enters, the error
/// bound is propagated conservatively.
class Scalar {
 public:
  Scalar() : repr_(Rational(0)) {}
  Scalar(Rational value) : repr_(std::move(value)) {}  // NOLINT: implicit by design of literals
  Scalar(long value) : repr_(Rational(value)) {}       // NOLINT

  static Scalar approx(Real value, double error);
  /// Decimal ("12.5", "3e-4") or rational ("7/2") literal, optional sign.
  static Scalar parse(std::string_view literal);
  static std::optional<Rational> parse_rational(std::string_view literal);

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(repr_); }
  /// Requires is_exact().
  const Rational& rational() const;
  Real real() const;
  double to_double() const;
  /// Absolute error bound; 0 for exact values.
  double error() const noexcept;
  Real upper() const;
  Real lower() const;
  bool is_zero() const;
  /// -1, 0, +1 for exact values; for approximations 0 when the sign is not
  /// determined by the error bound.
  int sign() const;

  Scalar abs() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws DivisionNearZero when the divisor is zero or not bounded away from it.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Same representation, same value and same error bound.
  friend bool identical(const Scalar& a, const Scalar& b);

 private:
  struct Approx {
    Real value;
    double error;
  };
  explicit Scalar(Approx a) : repr_(std::move(a)) {}

  std::variant<Rational, Approx> repr_;
};

/// Three-way comparison at tolerance eta: Equal iff |a-b| <= eta + combined
/// error bound. Exact operands with eta == 0 compare exactly.
Ordering compare(const Scalar& a, const Scalar& b, double eta = 0.0);

/// a < b beyond any error bounds.
bool definitely_less(const Scalar& a, const Scalar& b);
/// Order by best value estimate (exact comparison when both exact).
bool value_less(const Scalar& a, const Scalar& b);
const Scalar& max_value(const Scalar& a, const Scalar& b);
const Scalar& min_value(const Scalar& a, const Scalar& b);

/// base^exponent. Integer exponents on exact bases stay exact; rational
/// exponents stay exact when the result is a perfect power, otherwise the
/// result is approximated. Non-integer exponents require base > 0.
Scalar power(const Scalar& base, const Rational& exponent);

/// A rational that is >= s (equal to s when s is exact).
Rational rational_upper(const Scalar& s);
/// Exact rational for a Real value.
Rational to_rational(const Real& value);

std::string rational_literal(const Rational& r);
Rational abs(const Rational& r);
Integer floor_of(const Rational& r);

}  // namespace sandwich
