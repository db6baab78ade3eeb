#include <doctest.h>

#include "sandwich/error.hpp"
#include "sandwich/evaluate.hpp"
#include "sandwich/parser.hpp"
#include "sandwich/table.hpp"

#include <filesystem>
#include <fstream>

using namespace sandwich;

namespace {

const char* kDecreasing =
    "# direction=decreasing bound=1 tail_start=0\n"
    "x,y\n"
    "1,1.0\n"
    "2,0.5\n"
    "4,0.25\n";

std::string with_decl(const std::string& decl) { return decl + "\nx,y\n1,1.0\n2,0.5\n4,0.25\n"; }

std::string rejection(const std::string& text) {
  try {
    parse_table_csv(text);
  } catch (const Error& ex) {
    CHECK(ex.code() == ErrorCode::TableDeclaration);
    return ex.detail();
  }
  return "";
}

}  // namespace

TEST_CASE("consistent declaration accepted") {
  TableFunction t = parse_table_csv(kDecreasing);
  CHECK(t.samples().size() == 3);
  CHECK(t.direction() == Direction::Decreasing);
  CHECK(t.last_value() == Rational(1, 4));
}

TEST_CASE("declaration mismatches name the first violating row") {
  CHECK(rejection(with_decl("# direction=increasing bound=1 tail_start=0")).rfind("row 2", 0) == 0);
  CHECK(rejection(with_decl("# direction=decreasing bound=0.4 tail_start=0")).rfind("row 1", 0) == 0);
  CHECK(rejection(with_decl("# direction=decreasing bound=1 tail_start=1")).rfind("row 1", 0) == 0);
  CHECK(rejection("# direction=decreasing bound=1 tail_start=0\nx,y\n1,1\n1,0.5\n").rfind("row 2", 0) == 0);
  CHECK_FALSE(rejection("x,y\n1,1\n").empty());
  CHECK_FALSE(rejection("# direction=sideways bound=1 tail_start=0\nx,y\n1,1\n").empty());
}

TEST_CASE("right-constant step extension") {
  auto t = std::make_shared<const TableFunction>(parse_table_csv(kDecreasing));
  // Oracle: the value of the nearest sample at or above x, last value beyond.
  CHECK(t->at(Rational(1, 2)) == 1);
  CHECK(t->at(Rational(1)) == 1);
  CHECK(t->at(Rational(3, 2)) == Rational(1, 2));
  CHECK(t->at(Rational(3)) == Rational(1, 4));
  CHECK(t->at(Rational(1000)) == Rational(1, 4));
  CHECK_THROWS_AS(t->at(Rational(0)), Error);
  Expr e = Expr::table(t);
  CHECK(evaluate(e, Rational(3)).rational() == Rational(1, 4));
}

TEST_CASE("ids are content hashes and ingestion is idempotent") {
  auto dir = std::filesystem::temp_directory_path() / "sandwich_table_test";
  std::filesystem::remove_all(dir);
  TableStore store(dir);
  std::string id = store.ingest_text(kDecreasing);
  CHECK(id.size() == 17);
  CHECK(id[0] == 't');
  // Same content with different formatting normalizes to the same id.
  std::string again = store.ingest_text("# direction=decreasing  bound=1/1 tail_start=0\nx,y\n1,1\n2,1/2\n4,0.250\n");
  CHECK(again == id);
  CHECK(std::filesystem::exists(dir / (id + ".csv")));
  CHECK(std::filesystem::exists(dir / (id + ".json")));
  Expr e = parse("table(" + id + ") + 1", store.resolver());
  CHECK(evaluate(e, Rational(2)).rational() == Rational(3, 2));
  CHECK(store.load("../etc/passwd") == nullptr);
  CHECK_THROWS_AS(parse("table(missing)", store.resolver()), Error);
  std::filesystem::remove_all(dir);
}
