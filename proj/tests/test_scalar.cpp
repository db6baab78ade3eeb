#include <doctest.h>

#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"
#include "sandwich/scalar.hpp"

#include <cmath>
#include <random>

using namespace sandwich;

TEST_CASE("literals parse to exact rationals") {
  CHECK(Scalar::parse("0.05").rational() == Rational(1, 20));
  CHECK(Scalar::parse("7/2").rational() == Rational(7, 2));
  CHECK(Scalar::parse("-3e-4").rational() == Rational(-3, 10000));
  CHECK(Scalar::parse("+12.5").rational() == Rational(25, 2));
  CHECK(Scalar::parse("0.25").rational() == Rational(1, 4));
  CHECK(Scalar::parse("007").rational() == 7);
  CHECK(Scalar::parse("010/08").rational() == Rational(5, 4));
  CHECK_FALSE(Scalar::parse_rational("1/0"));
  CHECK_FALSE(Scalar::parse_rational("abc"));
  CHECK_FALSE(Scalar::parse_rational(""));
}

TEST_CASE("exact arithmetic stays exact") {
  Scalar a(Rational(1, 3)), b(Rational(1, 6));
  Scalar s = a + b;
  REQUIRE(s.is_exact());
  CHECK(s.rational() == Rational(1, 2));
  CHECK((a * b).rational() == Rational(1, 18));
  CHECK((a / b).rational() == 2);
  CHECK_THROWS_AS(a / Scalar(), Error);
}

TEST_CASE("power keeps perfect roots exact") {
  Scalar r = power(Scalar(Rational(100)), Rational(1, 2));
  REQUIRE(r.is_exact());
  CHECK(r.rational() == 10);
  CHECK(power(Scalar(Rational(8, 27)), Rational(-2, 3)).rational() == Rational(9, 4));
  Scalar irr = power(Scalar(Rational(2)), Rational(1, 2));
  CHECK_FALSE(irr.is_exact());
  CHECK(irr.error() < 1e-40);
  CHECK(std::abs(irr.to_double() - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("error bounds enclose the true value") {
  // Oracle: long double evaluation of sqrt(x) * sqrt(x) = x.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    long n = 2 + static_cast<long>(rng() % 1000);
    Scalar r = power(Scalar(Rational(n)), Rational(1, 2));
    Scalar sq = r * r;
    CHECK(compare(sq, Scalar(Rational(n)), 0.0) == Ordering::Equal);
    CHECK(std::abs(r.to_double() - std::sqrt(static_cast<double>(n))) < 1e-12);
  }
}

TEST_CASE("comparisons at tolerance are mutually exclusive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar a(Rational(static_cast<long>(rng() % 2001) - 1000, 1000));
    Scalar b(Rational(static_cast<long>(rng() % 2001) - 1000, 1000));
    double eta = (rng() % 3) * 0.01;
    Ordering o = compare(a, b, eta);
    Ordering r = compare(b, a, eta);
    if (o == Ordering::Less) CHECK(r == Ordering::Greater);
    if (o == Ordering::Equal) CHECK(r == Ordering::Equal);
    if (o == Ordering::Greater) CHECK(r == Ordering::Less);
    CHECK((o == Ordering::Equal) == (std::abs(a.to_double() - b.to_double()) <= eta + 1e-15));
  }
}

TEST_CASE("approximate scalars compare by their enclosures") {
  Scalar x = Scalar::approx(Real(1), 1e-6);
  CHECK_FALSE(definitely_less(x, Scalar(Rational(1))));
  CHECK(definitely_less(x, Scalar(Rational(2))));
  CHECK(x.sign() == 1);
  CHECK(Scalar::approx(Real(0), 1e-6).sign() == 0);
  CHECK_THROWS_AS(Scalar::approx(Real(0), -1.0), Error);
}

TEST_CASE("decimal rendering") {
  CHECK(format_decimal(Scalar(Rational(3))) == "+3");
  CHECK(format_decimal(Scalar()) == "+0");
  CHECK(format_decimal(Scalar(Rational(-1, 20))) == "-0.05");
  CHECK(format_decimal(Scalar(Rational(1, 1000))) == "+0.001");
  CHECK(format_decimal(Scalar(Rational(999999))) == "+999999");
  std::string big = format_decimal(Scalar(Rational(1000000)));
  CHECK(big.find('e') != std::string::npos);
  std::string tiny = format_decimal(Scalar(Rational(1, 10000)));
  CHECK(tiny.find('e') != std::string::npos);
  CHECK(format_significant(Scalar(Rational(2, 3)), 12) == "0.666666666667");
}
