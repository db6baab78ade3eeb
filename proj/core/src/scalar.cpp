#include "sandwich/scalar.hpp"

#include "sandwich/error.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace sandwich {

namespace {

// Relative rounding allowance per approximate operation. Real carries 50
// decimal digits, so this leaves a wide margin.
const Real kRounding("1e-46");

double err_up(const Real& e) {
  if (e <= 0) return 0.0;
  double d = static_cast<double>(e);
  if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
  return std::nextafter(d * (1.0 + 4 * std::numeric_limits<double>::epsilon()),
                        std::numeric_limits<double>::infinity());
}

Real to_real(const Rational& r) { return Real(r); }

Scalar make_approx(const Real& value, const Real& error) {
  Real rounding = abs(value) * kRounding;
  return Scalar::approx(value, err_up(error + rounding));
}

bool parse_unsigned(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  // A leading 0 would make the string constructor read octal.
  auto first = s.find_first_not_of('0');
  out = first == std::string_view::npos ? Integer(0) : Integer(std::string(s.substr(first)));
  return true;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
  if (k == 1) return n;
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_root(-n, k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer root;
  int exact = mpz_root(root.backend().data(), n.backend().data(), k);
  if (!exact) return std::nullopt;
  return root;
}

Rational int_power(const Rational& base, unsigned long e) {
  using boost::multiprecision::pow;
  Integer num = pow(Integer(numerator(base)), static_cast<unsigned>(e));
  Integer den = pow(Integer(denominator(base)), static_cast<unsigned>(e));
  return Rational(num, den);
}

}  // namespace

Scalar Scalar::approx(Real value, double error) {
  if (!(error >= 0)) throw Error(ErrorCode::InvalidArgument, "negative error bound");
  return Scalar(Approx{std::move(value), error});
}

std::optional<Rational> Scalar::parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p, q;
    if (!parse_unsigned(text.substr(0, slash), p) ||
        !parse_unsigned(text.substr(slash + 1), q) || q == 0)
      return std::nullopt;
    value = Rational(p, q);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      Integer ev;
      if (!parse_unsigned(exp_text, ev) || ev > 4000) return std::nullopt;
      exponent = ev.convert_to<long>();
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char ch : mantissa) {
      if (ch == '.') {
        if (seen_point) return std::nullopt;
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits.push_back(ch);
        if (seen_point) ++frac_digits;
      } else {
        return std::nullopt;
      }
    }
    Integer num;
    if (!parse_unsigned(digits, num)) return std::nullopt;
    long scale = exponent - frac_digits;
    using boost::multiprecision::pow;
    if (scale >= 0)
      value = Rational(num * pow(Integer(10), static_cast<unsigned>(scale)));
    else
      value = Rational(num, pow(Integer(10), static_cast<unsigned>(-scale)));
  }
  return negative ? Rational(-value) : value;
}

Scalar Scalar::parse(std::string_view literal) {
  auto r = parse_rational(literal);
  if (!r) throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(literal) + "'");
  return Scalar(std::move(*r));
}

const Rational& Scalar::rational() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return *r;
  throw Error(ErrorCode::InvalidArgument, "scalar is not exact");
}

Real Scalar::real() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return to_real(*r);
  return std::get<Approx>(repr_).value;
}

double Scalar::to_double() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return r->convert_to<double>();
  return static_cast<double>(std::get<Approx>(repr_).value);
}

double Scalar::error() const noexcept {
  if (auto* a = std::get_if<Approx>(&repr_)) return a->error;
  return 0.0;
}

Real Scalar::upper() const { return real() + Real(error()); }
Real Scalar::lower() const { return real() - Real(error()); }

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return *r == 0;
  return false;
}

int Scalar::sign() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return r->sign();
  const auto& a = std::get<Approx>(repr_);
  if (a.value > Real(a.error)) return 1;
  if (a.value < -Real(a.error)) return -1;
  return 0;
}

Scalar Scalar::abs() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return Scalar(sandwich::abs(*r));
  const auto& a = std::get<Approx>(repr_);
  return Scalar(Approx{boost::multiprecision::abs(a.value), a.error});
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Rational>(&repr_)) return Scalar(Rational(-*r));
  const auto& a = std::get<Approx>(repr_);
  return Scalar(Approx{Real(-a.value), a.error});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() + b.rational()));
  Real v = a.real() + b.real();
  return make_approx(v, Real(a.error()) + Real(b.error()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() * b.rational()));
  Real av = a.real(), bv = b.real();
  Real ea(a.error()), eb(b.error());
  Real err = boost::multiprecision::abs(av) * eb + boost::multiprecision::abs(bv) * ea + ea * eb;
  return make_approx(av * bv, err);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionNearZero, "division by exact zero");
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() / b.rational()));
  Real av = a.real(), bv = b.real();
  Real ea(a.error()), eb(b.error());
  Real mag = boost::multiprecision::abs(bv);
  if (mag <= eb) throw Error(ErrorCode::DivisionNearZero, "divisor not bounded away from zero");
  Real err = (boost::multiprecision::abs(av) * eb + mag * ea) / (mag * (mag - eb));
  return make_approx(av / bv, err);
}

bool identical(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.rational() == b.rational();
  return a.real() == b.real() && a.error() == b.error();
}

Ordering compare(const Scalar& a, const Scalar& b, double eta) {
  if (a.is_exact() && b.is_exact() && eta == 0.0) {
    int c = a.rational().compare(b.rational());
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  }
  Scalar d = a - b;
  Real mag = boost::multiprecision::abs(d.real());
  if (mag <= Real(eta) + Real(d.error())) return Ordering::Equal;
  return d.real() < 0 ? Ordering::Less : Ordering::Greater;
}

bool definitely_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  Scalar d = a - b;
  return d.upper() < 0;
}

bool value_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.real() < b.real();
}

const Scalar& max_value(const Scalar& a, const Scalar& b) { return value_less(a, b) ? b : a; }
const Scalar& min_value(const Scalar& a, const Scalar& b) { return value_less(b, a) ? b : a; }

Scalar power(const Scalar& base, const Rational& exponent) {
  Integer p = numerator(exponent);
  Integer q = denominator(exponent);
  bool negative = p < 0;
  Integer pa = negative ? Integer(-p) : p;

  if (q != 1 && base.sign() <= 0)
    throw Error(ErrorCode::DomainError, "non-integer power of a non-positive base");

  if (base.is_exact()) {
    const Rational& b = base.rational();
    if (b == 0) {
      if (negative) throw Error(ErrorCode::DivisionNearZero, "negative power of zero");
      return Scalar(Rational(pa == 0 ? 1 : 0));
    }
    constexpr long kExactExponentLimit = 4096;
    if (pa <= kExactExponentLimit && q <= kExactExponentLimit) {
      unsigned long qk = q.convert_to<unsigned long>();
      auto rn = exact_root(Integer(numerator(b)), qk);
      auto rd = rn ? exact_root(Integer(denominator(b)), qk) : std::nullopt;
      if (rn && rd) {
        Rational r = int_power(Rational(*rn, *rd), pa.convert_to<unsigned long>());
        return Scalar(negative ? Rational(1 / r) : r);
      }
    }
  }

  // Approximate path: x^e = exp(e ln x) for x > 0; odd-sign handling only
  // reaches here for integer exponents of negative approximate bases.
  Real x = base.real();
  Real ex(base.error());
  Real e = Real(exponent);
  Real magnitude = boost::multiprecision::abs(x);
  if (magnitude <= ex) throw Error(ErrorCode::DomainError, "power of a base not bounded away from zero");
  Real v = boost::multiprecision::pow(magnitude, e);
  if (x < 0 && q == 1 && (pa % 2) == 1) v = -v;
  Real ae = boost::multiprecision::abs(e);
  // Input error via the derivative bound on [|x|-ex, |x|+ex], plus the
  // representation error of e scaled by |ln x|.
  Real lo = magnitude - ex;
  Real at = e - 1 < 0 ? lo : Real(magnitude + ex);
  Real deriv = ex > 0 ? Real(ae * boost::multiprecision::pow(at, e - 1)) : Real(0);
  Real err = deriv * ex + boost::multiprecision::abs(v) * kRounding *
                             (4 + boost::multiprecision::abs(boost::multiprecision::log(magnitude)) * (1 + ae));
  return make_approx(v, err);
}

Rational to_rational(const Real& value) { return Rational(value); }

Rational rational_upper(const Scalar& s) {
  if (s.is_exact()) return s.rational();
  Real u = s.upper();
  u += boost::multiprecision::abs(u) * kRounding + Real(std::numeric_limits<double>::denorm_min());
  return to_rational(u);
}

std::string rational_literal(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Integer floor_of(const Rational& r) {
  Integer q;
  Integer num = numerator(r);
  Integer den = denominator(r);
  mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  return q;
}

}  // namespace sandwich
