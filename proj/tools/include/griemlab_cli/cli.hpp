#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace griemlab::cli {

enum class Format { json, table };

struct RunConfig {
  std::string manifold;                  // "zoo:..." or a JSON spec path
  std::vector<std::string> suites{"all"};
  std::size_t points = 100;
  std::uint64_t seed = 42;
  std::map<std::string, double> tol_overrides;
  std::string out;                       // empty: stdout
  Format format = Format::table;
};

enum ExitCode : int { ok = 0, check_failed = 1, parse_error = 2, inapplicable = 3 };

/// Thread count from GRIEMLAB_THREADS, else the hardware concurrency.
std::size_t thread_budget();

/// Write `contents` to a sibling temporary file and rename it over `path`.
void write_atomically(const std::string& path, const std::string& contents);

/// Run the suites of `config`, write the report and return the exit code.
int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `check`, `list-suites`, `list-zoo`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace griemlab::cli
