// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "sandwich/axiom_suite.hpp"
#include "sandwich/cli.hpp"
#include "sandwich/decimal.hpp"
#include "sandwich/error.hpp"
#include "sandwich/generator.hpp"
#include "sandwich/limit.hpp"
#include "sandwich/parser.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace sandwich;

namespace {

// Pinned tolerances.
constexpr double kRelWitness = 1e-9;   // criterion 3
constexpr double kLawTol = 4e-9;       // criterion 5
constexpr double kAgreeSlack = 1e-9;   // criterion 7
constexpr double kSeparation = 1e-6;   // criterion 2, minimum limit gap
constexpr int kSamples = 64;           // criteria 2 and 3
constexpr int kDecades = 3;

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

const LimitEngine& engine() {
  static const LimitEngine e;
  return e;
}

double as_double(const Scalar& s) { return s.to_double(); }

// Independent sample points in (a, 10^3 a], geometric, a > 0.
std::vector<Rational> samples_above(const Scalar& a) {
  std::vector<Rational> out;
  Rational base = rational_upper(a);
  if (base < 1) base = 1;
  for (int k = 1; k <= kSamples; ++k) {
    Rational f(std::pow(10.0, double(kDecades) * k / kSamples));
    out.push_back(base * f);
  }
  return out;
}

Outcome constants() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    long p = static_cast<long>(rng() % 2000001) - 1000000;
    long q = static_cast<long>(rng() % 10000) + 1;
    Rational c(p, q);
    LimitCertificate cert = engine().limit(Expr::constant(c));
    if (!cert.limit.is_exact() || !identical(cert.limit, Scalar(c))) o.fail("limit of " + rational_literal(c));
    if (!cert.gap.is_exact() || !cert.gap.is_zero()) o.fail("nonzero gap for " + rational_literal(c));
  }
  return o;
}

Outcome separation() {
  Outcome o;
  ExprGenerator gen(202);
  int pairs = 0;
  for (int draws = 0; pairs < 50 && draws < 10000; ++draws) {
    Expr f = gen.convergent(1 + static_cast<int>(gen.uniform_below(4)));
    Expr g = gen.convergent(1 + static_cast<int>(gen.uniform_below(4)));
    LimitCertificate cf = engine().limit(f);
    LimitCertificate cg = engine().limit(g);
    if (value_less(cg.limit, cf.limit)) std::swap(cf, cg);
    if (!definitely_less(cf.limit + Scalar(Rational(kSeparation)), cg.limit)) continue;
    ++pairs;
    try {
      Threshold t = engine().separation(cf, cg);
      for (const Rational& x : samples_above(t.value)) {
        if (!definitely_less(evaluate(cf.expr, x), evaluate(cg.expr, x)))
          o.fail(print(cf.expr) + " >= " + print(cg.expr) + " at " + rational_literal(x));
      }
      if (t.verified_samples != kSamples) o.fail("engine verified " + std::to_string(t.verified_samples));
    } catch (const Error& e) {
      o.fail(print(cf.expr) + " vs " + print(cg.expr) + ": " + e.what());
    }
  }
  if (pairs < 50) o.fail("only " + std::to_string(pairs) + " pairs drawn");
  return o;
}

Outcome power_tail() {
  Outcome o;
  std::mt19937_64 rng(303);
  const std::vector<Rational> eps{Rational(1, 10), Rational(1, 100), Rational(1, 1000), Rational(1, 20)};
  for (int i = 0; i < 20; ++i) {
    Rational k(static_cast<long>(rng() % 900) + 100, 100);  // [1, 10)
    Rational c(static_cast<long>(rng() % 100) + 1, 20);     // (0, 5]
    std::string text = rational_literal(k) + "*x^-" + rational_literal(c);
    try {
      LimitCertificate cert = engine().limit(parse(text));
      if (!cert.limit.is_zero()) o.fail(text + " limit " + format_decimal(cert.limit));
      for (const Rational& e : eps) {
        Threshold t = engine().eps_witness(cert, Scalar(e));
        // K X^-c = eps exactly at the analytic inverse X = (K/eps)^(1/c).
        Scalar v = Scalar(k) * power(t.value, -c);
        double rel = as_double((v - Scalar(e)).abs() / Scalar(e));
        if (!(rel <= kRelWitness)) o.fail(text + " eps " + rational_literal(e) + " rel " + std::to_string(rel));
      }
    } catch (const Error& e) {
      o.fail(text + ": " + e.what());
    }
  }
  return o;
}

// floor(1/c) for c > 0.
long floor_div(const Rational& c) {
  Rational inv = Rational(1) / c;
  Integer q = numerator(inv) / denominator(inv);
  return q.convert_to<long>();
}

Outcome null_indices() {
  Outcome o;
  ExprGenerator gen(404);
  for (int i = 0; i < 100; ++i) {
    Expr n = gen.null(1 + static_cast<int>(gen.uniform_below(4)));
    try {
      NullWitness w = null_from_indices(n, 10);
      if (w.indices.size() != 10) o.fail(print(n) + ": short witness");
    } catch (const Error& e) {
      o.fail(print(n) + ": " + e.what());
    }
  }
  // A constant c >= 1/10 fails at n_max = 10; below that the search needs
  // n_max > 1/c before 1/n drops under c.
  std::mt19937_64 rng(405);
  for (int i = 0; i < 50; ++i) {
    Rational c(static_cast<long>(rng() % 99001) + 1000, 100000);  // [0.01, 1]
    long last_reachable = static_cast<long>(floor_div(c));
    long n_max = std::max(10L, last_reachable + 1);
    try {
      null_from_indices(Expr::constant(c), n_max);
      o.fail("Const(" + rational_literal(c) + ") accepted");
    } catch (const SearchExhausted& e) {
      if (e.n() != last_reachable + 1) o.fail("Const(" + rational_literal(c) + ") exhausted at " + std::to_string(e.n()));
    } catch (const Error& e) {
      o.fail("Const(" + rational_literal(c) + "): " + e.what());
    }
  }
  return o;
}

Outcome laws() {
  Outcome o;
  ExprGenerator gen(505);
  auto close = [](const Scalar& a, const Scalar& b) { return as_double((a - b).abs()) <= kLawTol; };
  for (int i = 0; i < 50; ++i) {
    Expr f = gen.convergent(1 + static_cast<int>(gen.uniform_below(3)));
    Expr g = gen.convergent(1 + static_cast<int>(gen.uniform_below(3)));
    try {
      Scalar lf = engine().limit(f).limit;
      Scalar lg = engine().limit(g).limit;
      Scalar ls = engine().limit(Expr::sum(f, g)).limit;
      Scalar lp = engine().limit(Expr::prod(f, g)).limit;
      if (!close(ls, lf + lg)) o.fail("sum " + print(f) + " , " + print(g));
      if (!close(lp, lf * lg)) o.fail("prod " + print(f) + " , " + print(g));
    } catch (const Error& e) {
      o.fail(print(f) + " , " + print(g) + ": " + e.what());
    }
  }
  int errors = 0, cases = 0;
  auto recip_case = [&](const Expr& inner) {
    ++cases;
    try {
      engine().limit(Expr::recip(inner));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ReciprocalOfNull) ++errors;
    }
  };
  for (int i = 0; i < 50; ++i) recip_case(gen.null(1 + static_cast<int>(gen.uniform_below(4))));
  recip_case(parse("alt(x)*x^-1"));
  recip_case(parse("x^-1 - x^-2"));
  recip_case(parse("(1 + x^-1)*x^-1/2"));
  if (errors != cases) o.fail("recip of null errored in " + std::to_string(errors) + "/" + std::to_string(cases));
  return o;
}

Outcome envelope_alt() {
  Outcome o;
  EnvelopePair p = engine().envelope(parse("alt(x)*x^-1"), GridSpec{Rational(3, 2), Rational(2), 20});
  Scalar bound = Scalar(Rational(2)) / Scalar(Rational(3, 2) * Rational(524288));
  Scalar gap = p.final_gap();
  if (value_less(bound, gap)) o.fail("gap " + format_decimal(gap));
  LimitCertificate cert = engine().limit_from_envelope(p);
  if (value_less(gap, cert.limit.abs())) o.fail("lambda " + format_decimal(cert.limit));
  o.note = "gap " + format_decimal(gap, 6) + " bound " + format_decimal(bound, 6) + " lambda " + format_decimal(cert.limit, 6);
  return o;
}

Outcome uniqueness() {
  Outcome o;
  ExprGenerator gen(707);
  const GridSpec grid{Rational(3, 2), Rational(2), 64};
  for (int i = 0; i < 100; ++i) {
    Expr e = gen.convergent(1 + static_cast<int>(gen.uniform_below(4)));
    try {
      LimitCertificate s = engine().limit(e);
      EnvelopePair p = engine().envelope(e, grid);
      LimitCertificate env = engine().limit_from_envelope(p);
      Scalar slack = p.final_gap() + Scalar(Rational(kAgreeSlack));
      if (value_less(slack, (s.limit - env.limit).abs())) o.fail(print(e));
    } catch (const Error& err) {
      o.fail(print(e) + ": " + err.what());
    }
  }
  return o;
}

Outcome battery() {
  Outcome o;
  auto run = [](std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    code = sandwich::cli::run(args, out, err);
    return out.str();
  };
  int c1 = 0, c2 = 0, c3 = 0;
  std::string a = run({"check", "--seed", "42", "--cases", "10"}, c1);
  std::string b = run({"check", "--seed", "42", "--cases", "10"}, c2);
  if (a != b) o.fail("reports differ");
  if (c1 != 0 || c2 != 0) o.fail("battery exit " + std::to_string(c1));
  if (a.find("\"passed\":false") != std::string::npos) o.fail("a property failed");
  std::string m = run({"check", "--seed", "42", "--cases", "10", "--canary"}, c3);
  if (c3 != 4 || m.find("{\"property\":\"thm6-laws\",\"seed\":42,\"cases\":10,\"passed\":false") == std::string::npos)
    o.fail("canary not caught by thm6-laws");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 constant exactness (100 constants, zero gap, exact)", constants},
      {"2 order separation (50 pairs, 64 samples f<g)", separation},
      {"3 power tail K*x^-c (20 draws, X rel 1e-9)", power_tail},
      {"4 null indices (n_max=10 on nulls, SearchExhausted on Const c>=0.01)", null_indices},
      {"5 limit laws (50 pairs, 4e-9) and recip of null", laws},
      {"6 envelope alt(x)*x^-1 (gap <= 2/(1.5*2^19), |lambda| <= gap)", envelope_alt},
      {"7 structural vs envelope limit (100 exprs, gap + 1e-9)", uniqueness},
      {"8 battery determinism and canary (seed 42, 10 cases)", battery},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::printf("%s  %s  [%.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.note.empty() ? "" : "  ",
                o.note.c_str());
  }
  return all ? 0 : 1;
}
