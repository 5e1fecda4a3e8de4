#pragma once

#include "griemlab/frame.hpp"
#include "griemlab/verifier.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace griemlab::detail {

struct CheckDef {
  std::string id;
  std::string anchor;
  double tol;
  Expect expect = Expect::below;
};

struct PointInput {
  const ChartManifold& manifold;
  const PointFrame& frame;
  const PointFrame* control;  // frame of the suite's control manifold at the same point index
  std::span<const Vec> probes;
  std::span<const Vec> control_probes;  // unit vectors in the control manifold's dimension
  std::mt19937_64& rng;
};

struct PointOutput {
  std::map<std::string, double> residuals;  // absent = not evaluated at this point
  std::vector<double> cluster_values;
  std::vector<std::size_t> cluster_multiplicities;
  std::vector<std::string> notes;

  // NaN is recorded as +inf so that it can never pass a below-check.
  void set(const std::string& id, double value) {
    if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
    auto [it, inserted] = residuals.emplace(id, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
};

struct SuiteDef {
  std::string id;
  std::string anchor;
  std::string summary;
  std::vector<CheckDef> checks;
  std::function<bool(const ChartManifold&, std::string*)> applicable;
  std::function<bool(const ChartManifold&)> in_all;
  std::function<std::optional<ChartManifold>()> control;
  std::function<void(const PointInput&, PointOutput&)> evaluate;
  // Cross-point checks (spectrum constancy); may fill report.spectrum and notes.
  std::function<std::map<std::string, double>(const std::vector<PointOutput>&, SuiteReport&)> finalize;
};

const std::vector<SuiteDef>& suite_registry();

}  // namespace griemlab::detail
