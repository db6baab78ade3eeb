#include <doctest.h>

#include "sandwich/error.hpp"
#include "sandwich/evaluate.hpp"
#include "sandwich/generator.hpp"
#include "sandwich/monotone.hpp"
#include "sandwich/parser.hpp"

#include <cmath>

using namespace sandwich;

namespace {

MonotoneWitness claim(Direction d, Rational tail = 1) {
  MonotoneWitness w;
  w.direction = d;
  w.tail_start = tail;
  w.bound = Scalar(Rational(100));
  return w;
}

}  // namespace

TEST_CASE("constants are BM with their magnitude as bound") {
  Classification c = classify(Expr::constant(7));
  CHECK(c.verdict == Verdict::BM);
  CHECK(c.rule == "R1:const");
  REQUIRE(c.monotone);
  CHECK(c.monotone->direction == Direction::Constant);
  CHECK(c.monotone->bound.rational() == 7);
}

TEST_CASE("positive power tails are null, negative ones increase to 0") {
  Classification c = classify(Expr::pow_tail(5, 2));
  CHECK(c.verdict == Verdict::Null);
  CHECK(c.rule == "R2:powtail-null");
  Classification n = classify(Expr::pow_tail(-5, 2));
  CHECK(n.verdict == Verdict::BM);
  CHECK(n.monotone->direction == Direction::Increasing);
  CHECK(n.monotone->tends_to_zero);
}

TEST_CASE("alt(x)*x^-1 is sandwiched by -1/x and 1/x") {
  Expr f = parse("alt(x)*x^-1");
  Classification c = classify(f);
  REQUIRE(c.verdict == Verdict::Sandwich);
  CHECK(c.rule == "R7:bounded-times-null");
  CHECK(*c.lower == Expr::pow_tail(-1, 1));
  CHECK(*c.upper == Expr::pow_tail(1, 1));
  // Oracle: |alt(x)/x| <= 1/x at 1000 points.
  for (long i = 1; i <= 1000; ++i) {
    Rational x = 1 + Rational(i, 7);
    Rational v = evaluate(f, x).rational();
    CHECK(evaluate(*c.lower, x).rational() <= v);
    CHECK(v <= evaluate(*c.upper, x).rational());
    CHECK(abs(v) <= 1 / x);
  }
}

TEST_CASE("closure rules") {
  CHECK(classify(parse("x^-1 + 2*x^-1/2")).rule == "R4:null-sum");
  CHECK(classify(parse("x^-1 + 2*x^-1/2")).verdict == Verdict::Null);
  CHECK(classify(parse("3*(x^-1 + x^-2)")).rule == "R5:scale-null");
  CHECK(classify(parse("-3*(x^-1 + x^-2)")).monotone->direction == Direction::Increasing);
  CHECK(classify(parse("0*(x^-1 + x^-2)")).monotone->direction == Direction::Constant);
  Classification shifted = classify(parse("3 + 5*x^-2"));
  CHECK(shifted.rule == "R6:const-plus-null");
  CHECK(shifted.monotone->direction == Direction::Decreasing);
  // Only a leading constant triggers the shift rule; the mirrored sum goes through the law.
  Classification mirrored = classify(parse("5*x^-2 + 3"));
  CHECK(mirrored.verdict == Verdict::LawDerived);
  CHECK(mirrored.rule == "R8:law-sum");
  CHECK(classify(parse("inv(2 + x^-1)")).rule == "R8:law-recip");
  CHECK(classify(parse("(1 + x^-1)*(2 + x^-2)")).rule == "R8:law-prod");
  CHECK(classify(parse("(3 + alt(x)*x^-1)*(2 + x^-1)")).rule == "R8:law-prod");
  CHECK(classify(parse("-(3 + alt(x)*x^-1)")).rule == "R8:law-scale");
}

TEST_CASE("mixed null directions are not a null sum") {
  Classification c = classify(parse("x^-1 - x^-2"));
  CHECK(c.verdict == Verdict::LawDerived);
}

TEST_CASE("unknown verdict names the first unclassifiable subterm") {
  Classification c = classify(parse("1 + x^-1 + alt(x)"));
  CHECK(c.verdict == Verdict::Unknown);
  CHECK(c.rule == "R9:unknown");
  CHECK(c.reason == "alt(x)");
  CHECK(classify(parse("inv(alt(x) + 3)")).reason == "alt(x)");
}

TEST_CASE("falsify_monotone") {
  Expr inv_x = Expr::pow_tail(1, 1);
  CHECK_FALSE(falsify_monotone(inv_x, claim(Direction::Decreasing), 64));

  Expr shifted = Expr::sum(inv_x, Expr::constant(0));
  auto ce = falsify_monotone(shifted, claim(Direction::Increasing), 64);
  REQUIRE(ce);
  // Oracle: the first two grid points tail * 10^(6j/64), j = 1, 2.
  CHECK(ce->first == Rational(std::pow(10.0, 6.0 / 64)));
  CHECK(ce->second == Rational(std::pow(10.0, 12.0 / 64)));

  CHECK_FALSE(falsify_monotone(Expr::constant(3), claim(Direction::Constant), 64));
  CHECK(falsify_monotone(Expr::alt(), claim(Direction::Decreasing), 64));
  CHECK_THROWS_AS(falsify_monotone(inv_x, claim(Direction::Decreasing), 1), Error);
}

TEST_CASE("falsify_monotone never contradicts derived witnesses") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Expr e = generate_expr(seed, 1 + static_cast<int>(seed % 6), seed % 2 ? ClassHint::BM : ClassHint::Any);
    Classification c = classify(e);
    if (!c.monotone) continue;
    INFO(print(e));
    CHECK_FALSE(falsify_monotone(e, *c.monotone, 64));
  }
}

TEST_CASE("null_from_indices on the doubling grid") {
  NullWitness w = null_from_indices(Expr::pow_tail(1, 1), 3);
  REQUIRE(w.indices.size() == 3);
  // Oracle: 1/x < 1/n iff x > n; first point of 2, 4, 8, ...
  CHECK(w.indices[0] == std::make_pair(1L, Rational(2)));
  CHECK(w.indices[1] == std::make_pair(2L, Rational(4)));
  CHECK(w.indices[2] == std::make_pair(3L, Rational(4)));

  NullWitness w5 = null_from_indices(Expr::pow_tail(5, 2), 2);
  // Oracle: x > sqrt(5n).
  CHECK(w5.indices[0].second == 4);
  CHECK(w5.indices[1].second == 4);
}

TEST_CASE("constants are not null") {
  try {
    null_from_indices(Expr::constant(Rational(1, 2)), 3);
    FAIL("expected SearchExhausted");
  } catch (const SearchExhausted& ex) {
    // 1/2 < 1/1 holds; n = 2 is the first index without a witness point.
    CHECK(ex.n() == 2);
  }
  for (long q = 1; q <= 100; ++q) {
    Rational c(1, q);
    long n_max = std::max(10L, q);
    CHECK_THROWS_AS(null_from_indices(Expr::constant(c), n_max), SearchExhausted);
  }
  try {
    null_from_indices(Expr::pow_tail(-1, 1), 3);
    FAIL("expected NotDecreasing");
  } catch (const Error& ex) {
    CHECK(ex.code() == ErrorCode::NotDecreasing);
  }
  CHECK_THROWS_AS(null_from_indices(Expr::pow_tail(1, 1), 0), Error);
}

TEST_CASE("every generated null passes the index test with n_max = 10") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Expr n = generate_expr(seed, 1 + static_cast<int>(seed % 6), ClassHint::Null);
    INFO(print(n));
    REQUIRE(classify(n).verdict == Verdict::Null);
    NullWitness w = null_from_indices(n, 10);
    REQUIRE(w.indices.size() == 10);
    for (const auto& [k, x] : w.indices) CHECK(definitely_less(evaluate(n, x), Scalar(Rational(1, k))));
  }
}

TEST_CASE("null sums stay non-negative and non-increasing") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Expr a = generate_expr(seed, 3, ClassHint::Null);
    Expr b = generate_expr(seed + 1000, 3, ClassHint::Null);
    Expr s = Expr::sum(a, b);
    REQUIRE(classify(s).verdict == Verdict::Null);
    Scalar slack(Rational(2e-12));
    std::optional<Scalar> prev;
    for (long i = 1; i < 40; ++i) {
      Scalar v = evaluate(s, Rational(i * i + 1, 1) + Rational(1, 3));
      CHECK_FALSE(definitely_less(v, Scalar()));
      if (prev) CHECK_FALSE(definitely_less(*prev + slack, v));
      prev = v;
    }
  }
}

TEST_CASE("sandwich bounds hold pointwise on generated products") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Expr n = generate_expr(seed, 4, ClassHint::Null);
    Expr f = Expr::prod(Expr::scale(Rational(static_cast<long>(seed % 5) + 1, 2), Expr::alt()), n);
    Classification c = classify(f);
    REQUIRE(c.verdict == Verdict::Sandwich);
    Scalar slack(Rational(2e-12));
    for (long i = 1; i < 30; ++i) {
      Rational x = Rational(3 * i + 1, 2);
      Scalar v = evaluate(f, x);
      CHECK_FALSE(definitely_less(v + slack, evaluate(*c.lower, x)));
      CHECK_FALSE(definitely_less(evaluate(*c.upper, x) + slack, v));
    }
  }
}

TEST_CASE("witness traces list the rules used") {
  auto trace = classify(parse("3 + 5*x^-2")).trace();
  REQUIRE(trace.size() == 3);
  CHECK(trace[0] == "R6:const-plus-null");
  CHECK(trace[1] == "R1:const");
  CHECK(trace[2] == "R2:powtail-null");
}
