#include <doctest.h>

#include "sandwich/certificate_json.hpp"
#include "sandwich/parser.hpp"

#include <json.hpp>

using namespace sandwich;

namespace {
const LimitEngine& engine() {
  static const LimitEngine e;
  return e;
}
}  // namespace

TEST_CASE("certificate keys come in the documented order") {
  std::string text = certificate_json(engine().limit(parse("5*x^-2 + 3")));
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"expr", "limit", "path", "tail_start", "gap", "eps_table", "witness_trace"});
  CHECK(j["limit"] == "+3");
  CHECK(j["path"] == "law:sum");
  CHECK(j["eps_table"][0]["eps"] == "+0.1");
  CHECK(j["eps_table"][0]["X"] == "+10");
}

TEST_CASE("certificate round trip") {
  for (const char* text : {"7", "alt(x)*x^-1", "inv(2 + x^-1/2)", "3 - 2*x^-3 @a=2"}) {
    LimitCertificate cert = engine().limit(parse(text));
    CertificateRecord r = parse_certificate_json(certificate_json(cert));
    CHECK(parse(r.expr) == cert.expr);
    CHECK(r.path == path_name(cert.path));
    CHECK(Scalar::parse(r.tail_start).rational() == cert.tail_start);
    CHECK(r.witness_trace == cert.witnesses.trace());
    REQUIRE(r.eps_table.size() == cert.eps_table.size());
    CHECK(certificate_json(cert, 2) != certificate_json(cert));
    CHECK(parse_certificate_json(certificate_json(cert, 2)).expr == r.expr);
  }
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(parse_certificate_json("[]"), Error);
  CHECK_THROWS_AS(parse_certificate_json("not json"), Error);
  CHECK_THROWS_AS(parse_certificate_json(R"({"limit":"+1","expr":"1","path":"supinf","tail_start":"+1","gap":"+0","eps_table":[],"witness_trace":[]})"),
                  Error);
  CHECK_NOTHROW(parse_certificate_json(R"({"expr":"1","limit":"+1","path":"supinf","tail_start":"+1","gap":"+0","eps_table":[],"witness_trace":[]})"));
  CHECK_THROWS_AS(parse_certificate_json(R"({"expr":1,"limit":"+1","path":"supinf","tail_start":"+1","gap":"+0","eps_table":[],"witness_trace":[]})"),
                  Error);
}

TEST_CASE("threshold and error objects") {
  Threshold t{Scalar(Rational(10)), "claim", 64};
  CHECK(threshold_json(Scalar(Rational(1, 20)), t) == "{\"eps\":\"+0.05\",\"X\":\"+10\",\"verified_samples\":64}\n");
  CHECK(error_json("NotConvergent", "no rule") == "{\"error\":\"NotConvergent\",\"detail\":\"no rule\"}\n");
}

TEST_CASE("envelope csv") {
  std::string csv = envelope_csv(engine().envelope(Expr::constant(4), GridSpec{Rational(3, 2), Rational(2), 3}));
  CHECK(csv == "x,f,m,M\n1.5,4,4,4\n3,4,4,4\n6,4,4,4\n");
}
