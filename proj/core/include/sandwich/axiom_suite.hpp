#pragma once

#include "sandwich/limit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sandwich {

struct CaseFailure {
  std::vector<std::string> exprs;
  std::string inputs;
  std::string observed;
};

struct PropertyReport {
  std::string id;
  int cases = 0;
  std::vector<CaseFailure> failures;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return failures.empty(); }
};

/// Ids of every property run_battery executes, sorted.
const std::vector<std::string>& battery_property_ids();

/// Runs each property on its own generator stream (seed + property index),
/// in parallel, and returns the reports sorted by id. Throws
/// InvalidArgument when cases_per_property < 1; property failures,
/// including unexpected exceptions, are reported as data.
std::vector<PropertyReport> run_battery(const LimitEngine& engine, std::uint64_t seed, int cases_per_property);

/// Runs a single property by id (InvalidArgument for an unknown id).
PropertyReport run_property(const LimitEngine& engine, const std::string& id, std::uint64_t seed,
                            int cases_per_property);

/// One JSON object, keys in the order property, seed, cases, passed, failures.
std::string to_json_line(const PropertyReport& r);

/// Engine whose sum law returns alpha + beta + 1e-3; "thm6-laws" must fail on it.
LimitEngine sum_law_canary(EngineConfig base = {});

}  // namespace sandwich
