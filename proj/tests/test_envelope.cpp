#include <doctest.h>

#include "sandwich/error.hpp"
#include "sandwich/generator.hpp"
#include "sandwich/limit.hpp"
#include "sandwich/parser.hpp"

using namespace sandwich;

namespace {

const LimitEngine& engine() {
  static const LimitEngine e;
  return e;
}

std::vector<Rational> exact(const std::vector<Scalar>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(s.rational());
  return out;
}

}  // namespace

TEST_CASE("suffix extrema of a sample sequence") {
  std::vector<Scalar> samples{Scalar(Rational(3)), Scalar(Rational(1)), Scalar(Rational(2)), Scalar(Rational(1, 2))};
  auto [hi, lo] = suffix_extrema(samples);
  CHECK(exact(hi) == std::vector<Rational>{3, 2, 2, Rational(1, 2)});
  CHECK(exact(lo) == std::vector<Rational>(4, Rational(1, 2)));
  CHECK(suffix_extrema({}).first.empty());
}

TEST_CASE("constant envelopes") {
  EnvelopePair p = engine().envelope(Expr::constant(4), GridSpec{Rational(3, 2), Rational(2), 3});
  CHECK(exact(p.upper) == std::vector<Rational>(3, 4));
  CHECK(exact(p.lower) == std::vector<Rational>(3, 4));
  LimitCertificate c = engine().limit_from_envelope(p);
  CHECK(c.limit.rational() == 4);
  CHECK(c.gap.is_zero());
  CHECK(c.path == Path::Sandwich);
}

TEST_CASE("alt(x)/x envelopes stay inside +-1/x") {
  EnvelopePair p = engine().envelope(parse("alt(x)*x^-1"), GridSpec{Rational(3, 2), Rational(2), 12});
  REQUIRE(p.grid.size() == 12);
  CHECK(p.grid.back() == 3072);
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    Rational bound = 1 / p.grid[i];
    CHECK(p.upper[i].rational() > 0);
    CHECK(p.lower[i].rational() < 0);
    CHECK(p.upper[i].rational() <= bound);
    CHECK(p.lower[i].rational() >= -bound);
    CHECK(p.lower[i].rational() <= p.values[i].rational());
    CHECK(p.values[i].rational() <= p.upper[i].rational());
    if (i > 0) {
      CHECK(p.upper[i].rational() <= p.upper[i - 1].rational());
      CHECK(p.lower[i].rational() >= p.lower[i - 1].rational());
    }
  }
  LimitCertificate c = engine().limit_from_envelope(p);
  CHECK(abs(c.limit.rational()) <= Rational(1, 3072));
  CHECK(c.gap.rational() <= Rational(2, 3072));
  CHECK(c.envelope);
  for (const auto& row : c.eps_table) CHECK(definitely_less(c.gap, row.eps));
}

TEST_CASE("alt alone has envelope gap 2") {
  EnvelopePair p = engine().envelope(Expr::alt(), GridSpec{});
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    CHECK(p.upper[i].rational() == 1);
    CHECK(p.lower[i].rational() == -1);
  }
  try {
    engine().limit_from_envelope(p);
    FAIL("expected SandwichGap");
  } catch (const SandwichGap& ex) {
    CHECK(ex.gap() == 2);
  }
}

TEST_CASE("grid preconditions") {
  CHECK_THROWS_AS(engine().envelope(Expr::constant(1), GridSpec{Rational(3, 2), Rational(1), 4}), Error);
  CHECK_THROWS_AS(engine().envelope(Expr::constant(1), GridSpec{Rational(3, 2), Rational(2), 1}), Error);
  try {
    engine().envelope(Expr::constant(1), GridSpec{Rational(1), Rational(2), 4});
    FAIL("expected DomainError");
  } catch (const Error& ex) {
    CHECK(ex.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("envelope invariants on generated expressions") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Expr e = generate_expr(seed, 1 + static_cast<int>(seed % 6), ClassHint::Any);
    INFO(print(e));
    EnvelopePair p = engine().envelope(e, GridSpec{Rational(5, 4), Rational(3), 16});
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
      CHECK_FALSE(value_less(p.values[i], p.lower[i]));
      CHECK_FALSE(value_less(p.upper[i], p.values[i]));
      if (i > 0) {
        CHECK_FALSE(value_less(p.upper[i - 1], p.upper[i]));
        CHECK_FALSE(value_less(p.lower[i], p.lower[i - 1]));
      }
    }
  }
}

TEST_CASE("envelope limit agrees with the structural limit") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Expr e = generate_expr(seed, 1 + static_cast<int>(seed % 5), ClassHint::Convergent);
    INFO(print(e));
    LimitCertificate s = engine().limit(e);
    LimitCertificate v = engine().limit_from_envelope(engine().envelope(e, GridSpec{Rational(3, 2), Rational(2), 64}));
    CHECK_FALSE(definitely_less(v.gap + Scalar(Rational(1e-9)), (s.limit - v.limit).abs()));
  }
}
