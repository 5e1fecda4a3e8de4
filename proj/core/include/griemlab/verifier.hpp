#pragma once

#include "griemlab/chart.hpp"
#include "griemlab/error.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace griemlab {

/// Negative controls pass when the residual exceeds the tolerance.
enum class Expect { below, above };

struct CheckEntry {
  std::string id;
  std::string anchor;
  std::optional<double> max_residual;  // empty when no point was applicable
  double tol = 0.0;
  bool pass = false;
  Expect expect = Expect::below;
  std::size_t points = 0;  // points at which the check was evaluated
};

struct SpectrumSummary {
  std::vector<double> eigenvalues;  // cluster values, mean over points
  std::vector<std::size_t> multiplicities;
  std::vector<double> stddev;  // per-cluster standard deviation across points
};

struct SuiteReport {
  std::string suite;
  std::string manifold;
  std::vector<CheckEntry> checks;
  std::size_t points = 0;
  std::uint64_t seed = 0;
  std::string fingerprint;
  std::vector<std::string> notes;
  std::optional<SpectrumSummary> spectrum;

  bool passed() const;
  /// nullptr when the suite has no such check.
  const CheckEntry* find(std::string_view id) const;
};

struct RunOptions {
  std::size_t points = 100;
  std::uint64_t seed = 42;
  std::size_t probes = 8;
  /// Keys are "check-id" (any suite) or "suite/check-id".
  std::map<std::string, double> tol_overrides;
  std::size_t threads = 1;
};

struct SuiteInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};

/// Raised when a suite is requested for a manifold it does not apply to.
class InapplicableSuiteError : public NotApplicableError {
 public:
  using NotApplicableError::NotApplicableError;
};

std::vector<SuiteInfo> suite_catalog();

/// Whether `suite` can run on `manifold` at all; `reason` is filled otherwise.
bool suite_applicable(std::string_view suite, const ChartManifold& manifold, std::string* reason = nullptr);

/// Suites selected by "all": every suite whose hypotheses the manifold is meant to satisfy.
std::vector<std::string> default_suites(const ChartManifold& manifold);

/// Evaluate every check of a suite at seeded sample points and max-aggregate.
/// Throws InapplicableSuiteError and ParseError (unknown suite or tolerance key).
SuiteReport run_suite(const ChartManifold& manifold, std::string_view suite, const RunOptions& options);

/// "all" or an explicit list.
std::vector<SuiteReport> run_suites(const ChartManifold& manifold, const std::vector<std::string>& selection,
                                    const RunOptions& options);

/// Compiler, library and build information recorded in reports.
std::string environment_fingerprint();

}  // namespace griemlab
