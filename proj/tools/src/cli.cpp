#include "griemlab_cli/cli.hpp"

#include "griemlab/manifold_spec.hpp"
#include "griemlab/report.hpp"
#include "griemlab/verifier.hpp"
#include "griemlab/zoo.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include <unistd.h>

namespace griemlab::cli {

namespace {

std::pair<std::string, double> parse_override(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("--tol expects KEY=VALUE, got '" + item + "'");
  const std::string key = item.substr(0, eq);
  const std::string text = item.substr(eq + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("--tol value for '" + key + "' is not a number: '" + text + "'");
  return {key, value};
}

}  // namespace

std::size_t thread_budget() {
  if (const char* env = std::getenv("GRIEMLAB_THREADS"); env && *env) {
    std::size_t n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc{} && ptr == s.data() + s.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f << contents;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move report into place at '" + path + "': " + ec.message());
  }
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.points < 1) throw ParseError("--points must be at least 1");
    const ChartManifold manifold = load_manifold(config.manifold);
    RunOptions options;
    options.points = config.points;
    options.seed = config.seed;
    options.tol_overrides = config.tol_overrides;
    options.threads = thread_budget();
    const std::vector<SuiteReport> reports = run_suites(manifold, config.suites, options);

    std::string text = config.format == Format::json ? reports_to_json(reports).dump(2) + "\n" : to_table(reports);
    if (config.out.empty()) {
      out << text;
    } else {
      write_atomically(config.out, text);
    }
    bool passed = true;
    for (const auto& r : reports) {
      passed = passed && r.passed();
      if (!config.out.empty()) out << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
    }
    return passed ? ExitCode::ok : ExitCode::check_failed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  } catch (const NotApplicableError& e) {
    err << "not applicable: " << e.what() << '\n';
    return ExitCode::inapplicable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::check_failed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residual checks for generalized Riemannian manifolds G = g + F", "griemlab"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> tols;
  std::string format = "table";
  auto* check = app.add_subcommand("check", "run verification suites on a manifold");
  check->add_option("--manifold", config.manifold, "zoo:name?key=value&... or a JSON spec file")->required();
  check->add_option("--suite", config.suites, "suite id (repeatable) or 'all'")->take_all();
  check->add_option("--points", config.points, "sample points")->check(CLI::PositiveNumber);
  check->add_option("--seed", config.seed, "64-bit sampling seed");
  check->add_option("--tol", tols, "tolerance override CHECK=VALUE or SUITE/CHECK=VALUE (repeatable)");
  check->add_option("--out", config.out, "write the report here instead of stdout");
  check->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* list_suites = app.add_subcommand("list-suites", "print suite ids with their anchors");
  auto* list_zoo = app.add_subcommand("list-zoo", "print zoo entries and default parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::parse_error;
  }

  if (*list_suites) {
    for (const SuiteInfo& s : suite_catalog()) out << s.id << "\n    " << s.anchor << "\n    " << s.summary << '\n';
    return ExitCode::ok;
  }
  if (*list_zoo) {
    for (const ZooEntryInfo& z : zoo_catalog()) out << z.name << ' ' << z.defaults.dump() << "\n    " << z.summary << '\n';
    return ExitCode::ok;
  }

  try {
    for (const auto& t : tols) config.tol_overrides.insert(parse_override(t));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  }
  config.format = format == "json" ? Format::json : Format::table;
  return run_check(config, out, err);
}

}  // namespace griemlab::cli
