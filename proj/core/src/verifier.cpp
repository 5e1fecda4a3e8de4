#include "griemlab/verifier.hpp"

#include "suite_defs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

namespace griemlab {

namespace {

using detail::PointOutput;
using detail::SuiteDef;

const SuiteDef& find_suite(std::string_view id) {
  for (const SuiteDef& s : detail::suite_registry())
    if (s.id == id) return s;
  throw ParseError("unknown suite '" + std::string(id) + "'");
}

// FNV-1a, stable across platforms unlike std::hash.
std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 point_rng(std::uint64_t seed, std::size_t index, std::uint64_t suite_hash) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(suite_hash),
                    static_cast<std::uint32_t>(suite_hash >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Vec> unit_probes(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::normal_distribution<double> normal;
  std::vector<Vec> out;
  while (out.size() < count) {
    Vec v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
    const double norm = v.norm();
    if (norm > 1e-8) out.push_back(v / norm);
  }
  return out;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, count));
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t t) {
    for (std::size_t i = t; i < count; i += threads) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double tolerance_for(const SuiteDef& suite, const detail::CheckDef& check, const RunOptions& options) {
  if (auto it = options.tol_overrides.find(suite.id + "/" + check.id); it != options.tol_overrides.end())
    return it->second;
  if (auto it = options.tol_overrides.find(check.id); it != options.tol_overrides.end()) return it->second;
  return check.tol;
}

void validate_overrides(const std::vector<const SuiteDef*>& suites, const RunOptions& options) {
  for (const auto& [key, value] : options.tol_overrides) {
    if (!(value > 0.0)) throw ParseError("tolerance for '" + key + "' must be positive");
    const auto slash = key.find('/');
    bool known = false;
    for (const SuiteDef* s : suites) {
      if (slash != std::string::npos && key.substr(0, slash) != s->id) continue;
      const std::string id = slash == std::string::npos ? key : key.substr(slash + 1);
      for (const auto& c : s->checks) known = known || c.id == id;
    }
    if (!known) throw ParseError("tolerance override '" + key + "' names no check of the selected suites");
  }
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

const CheckEntry* SuiteReport::find(std::string_view id) const {
  for (const CheckEntry& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<SuiteInfo> suite_catalog() {
  std::vector<SuiteInfo> out;
  for (const SuiteDef& s : detail::suite_registry()) out.push_back({s.id, s.anchor, s.summary});
  return out;
}

bool suite_applicable(std::string_view suite, const ChartManifold& manifold, std::string* reason) {
  return find_suite(suite).applicable(manifold, reason);
}

std::vector<std::string> default_suites(const ChartManifold& manifold) {
  std::vector<std::string> out;
  for (const SuiteDef& s : detail::suite_registry())
    if (s.applicable(manifold, nullptr) && s.in_all(manifold)) out.push_back(s.id);
  return out;
}

std::string environment_fingerprint() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_version__;
#elif defined(__GNUC__)
  os << "gcc " << __VERSION__;
#else
  os << "unknown-compiler";
#endif
  os << "; eigen " << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION;
  os << "; nlohmann_json " << NLOHMANN_JSON_VERSION_MAJOR << '.' << NLOHMANN_JSON_VERSION_MINOR << '.'
     << NLOHMANN_JSON_VERSION_PATCH;
#ifdef NDEBUG
  os << "; release";
#else
  os << "; debug";
#endif
  return os.str();
}

SuiteReport run_suite(const ChartManifold& manifold, std::string_view suite_id, const RunOptions& options) {
  const SuiteDef& suite = find_suite(suite_id);
  std::string reason;
  if (!suite.applicable(manifold, &reason))
    throw InapplicableSuiteError("suite '" + suite.id + "' does not apply to " + manifold.name() + ": " + reason);
  validate_overrides({&suite}, options);

  const auto points = manifold.sample_points(options.points, options.seed);
  std::optional<ChartManifold> control;
  std::vector<std::vector<double>> control_points;
  if (suite.control) {
    control = suite.control();
    if (control) control_points = control->sample_points(options.points, options.seed ^ 0x9e3779b97f4a7c15ULL);
  }

  const std::uint64_t suite_hash = stable_hash(suite.id);
  std::vector<PointOutput> outputs(points.size());
  parallel_for(points.size(), options.threads, [&](std::size_t i) {
    const PointFrame frame = make_frame(manifold, points[i]);
    std::optional<PointFrame> control_frame;
    if (control) control_frame = make_frame(*control, control_points[i]);
    auto rng = point_rng(options.seed, i, suite_hash);
    const auto probes = unit_probes(rng, manifold.dim(), options.probes);
    const auto control_probes = control ? unit_probes(rng, control->dim(), options.probes) : std::vector<Vec>{};
    suite.evaluate(
        detail::PointInput{manifold, frame, control_frame ? &*control_frame : nullptr, probes, control_probes, rng},
        outputs[i]);
  });

  SuiteReport report;
  report.suite = suite.id;
  report.manifold = manifold.name();
  report.points = points.size();
  report.seed = options.seed;
  report.fingerprint = environment_fingerprint();

  std::map<std::string, double> cross;
  if (suite.finalize) cross = suite.finalize(outputs, report);

  std::set<std::string> seen_notes(report.notes.begin(), report.notes.end());
  std::vector<std::string> point_notes;
  for (const PointOutput& o : outputs)
    for (const std::string& n : o.notes)
      if (seen_notes.insert(n).second) point_notes.push_back(n);
  report.notes.insert(report.notes.begin(), point_notes.begin(), point_notes.end());

  for (const detail::CheckDef& def : suite.checks) {
    CheckEntry entry;
    entry.id = def.id;
    entry.anchor = def.anchor;
    entry.tol = tolerance_for(suite, def, options);
    entry.expect = def.expect;
    if (auto it = cross.find(def.id); it != cross.end()) {
      entry.max_residual = std::isnan(it->second) ? std::numeric_limits<double>::infinity() : it->second;
      entry.points = points.size();
    } else {
      for (const PointOutput& o : outputs) {
        auto r = o.residuals.find(def.id);
        if (r == o.residuals.end()) continue;
        ++entry.points;
        entry.max_residual = entry.max_residual ? std::max(*entry.max_residual, r->second) : r->second;
      }
    }
    if (!entry.max_residual) {
      entry.pass = true;
      report.notes.push_back("check '" + def.id + "' was not applicable at any sample point");
    } else if (def.expect == Expect::below) {
      entry.pass = *entry.max_residual < entry.tol;
    } else {
      entry.pass = *entry.max_residual > entry.tol;
    }
    report.checks.push_back(std::move(entry));
  }
  return report;
}

std::vector<SuiteReport> run_suites(const ChartManifold& manifold, const std::vector<std::string>& selection,
                                    const RunOptions& options) {
  std::vector<std::string> ids;
  for (const std::string& s : selection) {
    if (s == "all") {
      for (auto& d : default_suites(manifold))
        if (std::find(ids.begin(), ids.end(), d) == ids.end()) ids.push_back(d);
    } else if (std::find(ids.begin(), ids.end(), s) == ids.end()) {
      ids.push_back(s);
    }
  }
  if (ids.empty()) throw InapplicableSuiteError("no suite applies to " + manifold.name());
  std::vector<const SuiteDef*> defs;
  for (const auto& id : ids) defs.push_back(&find_suite(id));
  validate_overrides(defs, options);

  // Overrides are validated against the whole selection; each suite then sees only its own keys.
  std::vector<SuiteReport> out;
  for (const SuiteDef* def : defs) {
    RunOptions local = options;
    local.tol_overrides.clear();
    for (const auto& [key, value] : options.tol_overrides) {
      const auto slash = key.find('/');
      const std::string id = slash == std::string::npos ? key : key.substr(slash + 1);
      if (slash != std::string::npos && key.substr(0, slash) != def->id) continue;
      if (std::any_of(def->checks.begin(), def->checks.end(), [&](const auto& c) { return c.id == id; }))
        local.tol_overrides[key] = value;
    }
    out.push_back(run_suite(manifold, def->id, local));
  }
  return out;
}

}  // namespace griemlab
