#pragma once

#include "griemlab/verifier.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace griemlab {

inline constexpr int kReportVersion = 1;

nlohmann::json to_json(const SuiteReport& report);

/// A single report keeps the flat layout {"version", "suite", "checks", ...};
/// several are wrapped as {"version", "reports": [...]}.
nlohmann::json reports_to_json(std::span<const SuiteReport> reports);

/// Fixed-width text table, one row per check.
std::string to_table(std::span<const SuiteReport> reports);

}  // namespace griemlab
