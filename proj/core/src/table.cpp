#include "sandwich/table.hpp"

#include "sandwich/error.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace sandwich {

namespace {

std::string row_error(std::size_t row, const std::string& what) {
  return "row " + std::to_string(row) + ": " + what;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Rational literal_or_throw(std::string_view text, const std::string& context) {
  auto r = Scalar::parse_rational(trim(text));
  if (!r) throw Error(ErrorCode::TableDeclaration, context + ": not a number '" + std::string(text) + "'");
  return *r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << content;
}

}  // namespace

TableFunction::TableFunction(std::string id, std::vector<TableSample> samples, Direction direction,
                             Rational bound, Rational tail_start)
    : id_(std::move(id)),
      samples_(std::move(samples)),
      direction_(direction),
      bound_(std::move(bound)),
      tail_start_(std::move(tail_start)) {
  if (samples_.empty()) throw Error(ErrorCode::TableDeclaration, "table has no samples");
  if (bound_ < 0) throw Error(ErrorCode::TableDeclaration, "declared bound is negative");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    std::size_t row = i + 1;
    if (s.x <= tail_start_)
      throw Error(ErrorCode::TableDeclaration, row_error(row, "x = " + rational_literal(s.x) + " is not above tail_start"));
    if (i > 0 && s.x <= samples_[i - 1].x)
      throw Error(ErrorCode::TableDeclaration, row_error(row, "x is not strictly increasing"));
    if (abs(s.y) > bound_)
      throw Error(ErrorCode::TableDeclaration,
                  row_error(row, "|y| = " + rational_literal(abs(s.y)) + " exceeds declared bound " + rational_literal(bound_)));
    if (i > 0) {
      const Rational& prev = samples_[i - 1].y;
      bool bad = (direction_ == Direction::Increasing && s.y < prev) ||
                 (direction_ == Direction::Decreasing && s.y > prev) ||
                 (direction_ == Direction::Constant && s.y != prev);
      if (bad)
        throw Error(ErrorCode::TableDeclaration,
                    row_error(row, "samples are not " + std::string(direction_name(direction_))));
    }
  }
}

Rational TableFunction::at(const Rational& x) const {
  if (x <= tail_start_) throw Error(ErrorCode::DomainError, "table(" + id_ + ") evaluated at or below its tail start");
  auto it = std::lower_bound(samples_.begin(), samples_.end(), x,
                             [](const TableSample& s, const Rational& v) { return s.x < v; });
  if (it == samples_.end()) return samples_.back().y;
  return it->y;
}

Scalar TableFunction::at(const Scalar& x) const {
  if (x.is_exact()) return Scalar(at(x.rational()));
  Rational lo = to_rational(x.lower());
  Rational hi = to_rational(x.upper());
  if (lo <= tail_start_) throw Error(ErrorCode::DomainError, "table(" + id_ + ") evaluated near its tail start");
  Rational a = at(lo);
  if (a != at(hi)) throw Error(ErrorCode::TableRangeError, "table(" + id_ + ") step undetermined at approximate x");
  return Scalar(a);
}

TableFunction parse_table_csv(std::string_view text, std::string id) {
  std::optional<Direction> direction;
  std::optional<Rational> bound;
  Rational tail_start = 0;
  bool have_header = false;
  std::vector<TableSample> samples;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      std::istringstream decl(t.substr(1));
      std::string kv;
      while (decl >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "direction") {
          if (value == "increasing") direction = Direction::Increasing;
          else if (value == "decreasing") direction = Direction::Decreasing;
          else throw Error(ErrorCode::TableDeclaration, "direction must be increasing or decreasing, got '" + value + "'");
        } else if (key == "bound") {
          bound = literal_or_throw(value, "bound");
        } else if (key == "tail_start") {
          tail_start = literal_or_throw(value, "tail_start");
        }
      }
      continue;
    }
    if (!have_header) {
      std::string h = t;
      h.erase(std::remove_if(h.begin(), h.end(), [](unsigned char c) { return std::isspace(c); }), h.end());
      if (h != "x,y") throw Error(ErrorCode::TableDeclaration, "expected header 'x,y'");
      have_header = true;
      continue;
    }
    auto comma = t.find(',');
    std::size_t row = samples.size() + 1;
    if (comma == std::string::npos) throw Error(ErrorCode::TableDeclaration, row_error(row, "expected 'x,y'"));
    samples.push_back({literal_or_throw(t.substr(0, comma), row_error(row, "x")),
                       literal_or_throw(t.substr(comma + 1), row_error(row, "y"))});
  }
  if (!have_header) throw Error(ErrorCode::TableDeclaration, "missing header 'x,y'");
  if (!direction) throw Error(ErrorCode::TableDeclaration, "missing '# direction=...' declaration");
  if (!bound) throw Error(ErrorCode::TableDeclaration, "missing 'bound=' declaration");

  TableFunction fn(id, std::move(samples), *direction, *bound, tail_start);
  if (!id.empty()) return fn;
  std::string derived = table_id(fn);
  return TableFunction(derived, fn.samples(), fn.direction(), fn.bound(), fn.tail_start());
}

std::string normalized_csv(const TableFunction& table) {
  std::string out = "# direction=" + std::string(direction_name(table.direction())) +
                    " bound=" + rational_literal(table.bound()) +
                    " tail_start=" + rational_literal(table.tail_start()) + "\nx,y\n";
  for (const auto& s : table.samples()) out += rational_literal(s.x) + "," + rational_literal(s.y) + "\n";
  return out;
}

std::string table_id(const TableFunction& table) {
  std::string content = normalized_csv(table);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(content.data(), content.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::Io, "sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id = "t";
  for (unsigned i = 0; i < 8 && i < len; ++i) {
    id.push_back(kHex[digest[i] >> 4]);
    id.push_back(kHex[digest[i] & 0xF]);
  }
  return id;
}

std::string TableStore::ingest(const std::filesystem::path& csv_path) const {
  return ingest_text(read_file(csv_path));
}

std::string TableStore::ingest_text(std::string_view csv_text) const {
  TableFunction fn = parse_table_csv(csv_text);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create table directory " + dir_.string() + ": " + ec.message());

  write_file(dir_ / (fn.id() + ".csv"), normalized_csv(fn));
  nlohmann::ordered_json meta;
  meta["id"] = fn.id();
  meta["direction"] = std::string(direction_name(fn.direction()));
  meta["bound"] = rational_literal(fn.bound());
  meta["tail_start"] = rational_literal(fn.tail_start());
  meta["rows"] = fn.samples().size();
  meta["last_value"] = rational_literal(fn.last_value());
  write_file(dir_ / (fn.id() + ".json"), meta.dump(2) + "\n");
  return fn.id();
}

std::shared_ptr<const TableFunction> TableStore::load(std::string_view id) const {
  if (id.empty() || !std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; }))
    return nullptr;
  auto path = dir_ / (std::string(id) + ".csv");
  if (!std::filesystem::exists(path)) return nullptr;
  return std::make_shared<const TableFunction>(parse_table_csv(read_file(path), std::string(id)));
}

TableResolver TableStore::resolver() const {
  return [store = *this](std::string_view id) { return store.load(id); };
}

}  // namespace sandwich
