#pragma once

#include "sandwich/expr.hpp"
#include "sandwich/scalar.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

struct TableSample {
  Rational x;
  Rational y;
};

/// A user-declared member of the monotone bounded class given by samples.
/// Between samples the function takes the value of the nearest sample at
/// or above x; beyond the last sample it keeps the last value.
class TableFunction {
 public:
  /// Validates the declaration; on mismatch throws Error(TableDeclaration)
  /// naming the first violating data row (1-based).
  TableFunction(std::string id, std::vector<TableSample> samples, Direction direction,
                Rational bound, Rational tail_start);

  const std::string& id() const noexcept { return id_; }
  const std::vector<TableSample>& samples() const noexcept { return samples_; }
  Direction direction() const noexcept { return direction_; }
  const Rational& bound() const noexcept { return bound_; }
  const Rational& tail_start() const noexcept { return tail_start_; }
  const Rational& last_value() const { return samples_.back().y; }

  /// Step-extended value at x > tail_start.
  Rational at(const Rational& x) const;
  /// Approximate argument: resolved when the step index is unambiguous.
  Scalar at(const Scalar& x) const;

 private:
  std::string id_;
  std::vector<TableSample> samples_;
  Direction direction_;
  Rational bound_;
  Rational tail_start_;
};

/// CSV with header `x,y` plus a `# direction=... bound=... tail_start=...`
/// declaration line. Values are decimal or p/q literals.
TableFunction parse_table_csv(std::string_view text, std::string id = "");

/// Canonical serialization (declaration line, header, exact rows); the
/// table id is derived from it.
std::string normalized_csv(const TableFunction& table);

/// Content hash of the normalized form, usable as `table(<id>)`.
std::string table_id(const TableFunction& table);

using TableResolver = std::function<std::shared_ptr<const TableFunction>(std::string_view)>;

/// File-backed table registry: `<dir>/<id>.csv` plus `<dir>/<id>.json`.
class TableStore {
 public:
  explicit TableStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  /// Validates and persists; returns the table id. Idempotent.
  std::string ingest(const std::filesystem::path& csv_path) const;
  std::string ingest_text(std::string_view csv_text) const;
  std::shared_ptr<const TableFunction> load(std::string_view id) const;
  TableResolver resolver() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace sandwich
