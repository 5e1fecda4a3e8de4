#include "griemlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace griemlab {

namespace {

// JSON has no infinity; a non-finite residual is written as a string.
nlohmann::json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["version"] = kReportVersion;
  j["suite"] = report.suite;
  j["manifold"] = report.manifold;
  j["points"] = report.points;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["fingerprint"] = report.fingerprint;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckEntry& c : report.checks) {
    nlohmann::json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["max_residual"] = c.max_residual ? number_or_string(*c.max_residual) : nlohmann::json(nullptr);
    e["tol"] = c.tol;
    e["expect"] = c.expect == Expect::below ? "below" : "above";
    e["points"] = c.points;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["notes"] = report.notes;
  if (report.spectrum) {
    j["spectrum"] = {{"eigenvalues", report.spectrum->eigenvalues},
                     {"multiplicities", report.spectrum->multiplicities},
                     {"stddev", report.spectrum->stddev}};
  }
  return j;
}

nlohmann::json reports_to_json(std::span<const SuiteReport> reports) {
  if (reports.size() == 1) return to_json(reports.front());
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteReport& r : reports) {
    nlohmann::json j = to_json(r);
    j.erase("version");
    arr.push_back(std::move(j));
  }
  return {{"version", kReportVersion}, {"reports", std::move(arr)}};
}

std::string to_table(std::span<const SuiteReport> reports) {
  std::ostringstream os;
  for (const SuiteReport& r : reports) {
    os << r.suite << " on " << r.manifold << " (" << r.points << " points, seed " << r.seed << "): "
       << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const CheckEntry& c : r.checks) {
      char line[256];
      const std::string res = c.max_residual ? sci(*c.max_residual) : "n/a";
      std::snprintf(line, sizeof line, "  %-4s %-34s %12s %s %-10s\n", c.pass ? "ok" : "FAIL", c.id.c_str(),
                    res.c_str(), c.expect == Expect::below ? "<" : ">", sci(c.tol).c_str());
      os << line;
    }
    if (r.spectrum) {
      os << "  spectrum:";
      for (std::size_t i = 0; i < r.spectrum->eigenvalues.size(); ++i)
        os << ' ' << r.spectrum->eigenvalues[i] << " (x" << r.spectrum->multiplicities[i] << ')';
      os << '\n';
    }
    for (const std::string& n : r.notes) os << "  note: " << n << '\n';
  }
  return os.str();
}

}  // namespace griemlab
