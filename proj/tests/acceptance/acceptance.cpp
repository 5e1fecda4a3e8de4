// Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Bounds are asserted on the reported
// residuals directly, independent of the suites' own tolerances.

#include "griemlab/report.hpp"
#include "griemlab/structures.hpp"
#include "griemlab/verifier.hpp"
#include "griemlab/zoo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace griemlab;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void below(const SuiteReport& r, const std::string& id, double bound) { compare(r, id, bound, true); }
  void above(const SuiteReport& r, const std::string& id, double bound) { compare(r, id, bound, false); }

  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }

  bool report(int number, double seconds) const {
    const bool ok = failures_.empty() && count_ > 0;
    std::printf("[%s] criterion %d: %s (%zu assertions, %.2fs)\n", ok ? "PASS" : "FAIL", number, title_.c_str(), count_,
                seconds);
    for (const auto& f : failures_) std::printf("         %s\n", f.c_str());
    return ok;
  }

 private:
  void compare(const SuiteReport& r, const std::string& id, double bound, bool below) {
    ++count_;
    const CheckEntry* c = r.find(id);
    const std::string where = r.suite + "/" + id + " on " + r.manifold;
    if (!c) {
      failures_.push_back(where + ": no such check");
      return;
    }
    if (!c->max_residual) {
      failures_.push_back(where + ": not evaluated at any point");
      return;
    }
    const double v = *c->max_residual;
    const bool ok = below ? v < bound : v > bound;
    if (!ok) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ": %.3e %s %.1e violated", v, below ? "<" : ">", bound);
      failures_.push_back(where + buf);
    }
  }

  std::string title_;
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

ChartManifold zoo(const std::string& spec) { return build_zoo(parse_zoo_spec(spec)); }

RunOptions options(std::size_t points = 100) {
  RunOptions o;
  o.points = points;
  o.seed = 42;
  return o;
}

void construction_soundness(Criterion& c) {
  std::vector<std::string> specs;
  for (const auto& info : zoo_catalog()) specs.push_back(info.name);
  for (const char* v : {"para_flat?contact=true", "para_flat?u=x1", "product_contact?s=2",
                        "product_contact?factors=s6,s2&lambda=1,4", "weighted_product?factors=s2,s2&lambda=2,3"})
    specs.emplace_back(v);
  for (const auto& spec : specs) {
    const ChartManifold m = zoo(spec);
    const auto points = m.sample_points(100, 42);
    c.expect(validate_structure(m, points).max_residual() < 1e-12, "validate_structure on " + spec);
    const SuiteReport r = run_suite(m, "construction", options());
    c.below(r, "structure-axioms", 1e-12);
    c.below(r, "levi-civita-compatibility", 1e-12);
    c.below(r, "jet-vs-finite-difference", 1e-7);
  }
}

void metric_connections(Criterion& c) {
  const ChartManifold e = zoo("eisenhart_r3?f23=x1");
  const SuiteReport r = run_suite(e, "eisenhart-codazzi", options());
  c.below(r, "metric", 1e-11);
  c.below(r, "torsion-is-dF", 1e-11);
  c.below(r, "codazzi", 1e-12);
  c.above(r, "control-random-coefficients", 1e-3);

  const SuiteReport g = run_suite(zoo("s6_nearly_kahler"), "generalized-connection", options());
  c.below(g, "metric", 1e-8);
  c.below(g, "nabla-F", 1e-8);
  c.below(g, "nablaG-split", 1e-8);
  c.below(g, "conn1", 1e-8);
  c.below(g, "conn2", 1e-8);
}

void nearly_kahler(Criterion& c) {
  const SuiteReport r = run_suite(zoo("s6_nearly_kahler"), "nearly-kahler", options());
  c.below(r, "nk-defect", 1e-8);
  c.below(r, "a-torsion", 1e-8);
  c.below(r, "conn1", 1e-8);
  c.below(r, "conn2", 1e-8);
  c.below(r, "TA-dF", 1e-8);
  c.below(r, "TQ-nijenhuis", 1e-8);
  c.above(r, "control-conn2", 1e-3);
  c.above(r, "control-nk-defect", 1e-3);
  c.above(r, "converse-counterexample", 1e-3);

  // The non-nearly-Kaehler manifold itself: the same construction fails conn2.
  const SuiteReport p = run_suite(zoo("perturbed_kahler_r4"), "nearly-kahler", options());
  c.above(p, "conn2", 1e-3);
  c.above(p, "nk-defect", 1e-8);
}

void q_parallel(Criterion& c) {
  for (const char* spec : {"weighted_product", "weighted_product?factors=s2,s2&lambda=2,3",
                           "weighted_product?factors=flat2,s6,s2&lambda=4,1,9"}) {
    const SuiteReport r = run_suite(zoo(spec), "q-parallel", options());
    c.below(r, "q-torsion", 1e-9);
    c.below(r, "nabla-g-Q", 1e-9);
    c.below(r, "q-torsion-iff-nabla-g-Q", 0.5);
    c.below(r, "nijenhuis-Q", 1e-8);
    c.above(r, "control-q-torsion-violated", 1e-2);
    c.above(r, "control-nabla-g-Q-deviation", 1e-3);
  }
}

void eigen_distributions(Criterion& c) {
  const SuiteReport r = run_suite(zoo("weighted_product?factors=s6,s2&lambda=1,4"), "eigen-distributions", options());
  c.expect(r.points == 100, "100 sample points");
  c.below(r, "spectrum-constant", 1e-9);
  c.below(r, "multiplicities-even", 0.5);
  c.below(r, "involutivity", 1e-7);
  c.below(r, "totally-geodesic", 1e-7);
  c.below(r, "nijenhuis-Q", 1e-8);
  c.below(r, "nabla-g-Q", 1e-8);
  c.above(r, "control-involutivity", 1e-3);
  const bool have = r.spectrum && r.spectrum->eigenvalues.size() == 2;
  c.expect(have, "two eigenvalue clusters");
  if (have) {
    c.expect(std::abs(r.spectrum->eigenvalues[0] - 1.0) < 1e-9 && std::abs(r.spectrum->eigenvalues[1] - 4.0) < 1e-9,
             "eigenvalues {1, 4}");
    c.expect(r.spectrum->multiplicities == std::vector<std::size_t>{6, 2}, "multiplicities (6, 2)");
    for (double sd : r.spectrum->stddev) c.expect(sd < 1e-9, "per-eigenvalue standard deviation");
  }
}

void contact(Criterion& c) {
  const SuiteReport r = run_suite(zoo("sasakian_r3"), "contact", options());
  c.below(r, "reeb-geodesic", 1e-8);
  c.below(r, "reeb-killing", 1e-8);
  c.below(r, "deta-torsion", 1e-10);
  c.below(r, "nijenhuis-Y-xi", 1e-8);
  c.below(r, "nijenhuis-xi-Y-Z", 1e-8);
  c.below(r, "wac-identity", 1e-8);
  c.below(r, "q-torsion-iff-nwac-skew", 0.5);
  // Both directions: a Q-compliant T gives a skew N^wac, a non-compliant one does not.
  c.below(r, "compliant-q-torsion", 1e-8);
  c.below(r, "compliant-nwac-skew", 1e-8);
  c.above(r, "random-q-torsion", 1e-8);
  c.above(r, "random-nwac-skew", 1e-8);
  c.above(r, "control-wrong-sign", 1e-3);
}

void para(Criterion& c) {
  for (const char* spec : {"para_flat", "para_flat?contact=true", "para_flat?u=x1&lambda=3"}) {
    const SuiteReport r = run_suite(zoo(spec), "para", options());
    c.below(r, "axioms", 1e-12);
    c.below(r, "para-f", 1e-12);
    c.below(r, "wapc-identity", 1e-9);
    c.above(r, "control-wac-sign", 1e-3);
  }
}

void determinism(Criterion& c) {
  for (const char* spec : {"s6_nearly_kahler", "weighted_product", "sasakian_r3", "para_flat?contact=true"}) {
    const ChartManifold m = zoo(spec);
    RunOptions serial = options(50);
    RunOptions parallel = serial;
    parallel.threads = 4;
    const std::string a = reports_to_json(run_suites(m, {"all"}, serial)).dump(2);
    const std::string b = reports_to_json(run_suites(m, {"all"}, serial)).dump(2);
    const std::string p = reports_to_json(run_suites(m, {"all"}, parallel)).dump(2);
    c.expect(a == b, std::string("repeated run on ") + spec);
    c.expect(a == p, std::string("1 vs 4 threads on ") + spec);
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const Entry entries[] = {
      {"construction soundness on every zoo entry x 100 points", construction_soundness},
      {"Eisenhart/Codazzi on R^3 and the generalized metric connection on S^6", metric_connections},
      {"weak nearly Kaehler iff A-torsion on S^6, with the perturbed R^4 control", nearly_kahler},
      {"Q-torsion iff Levi-Civita parallel Q on weighted products", q_parallel},
      {"constant spectrum {1,4} and involutive eigen-distributions on S^6 x S^2", eigen_distributions},
      {"Sasakian R^3 with characteristic torsion", contact},
      {"para-flat axioms and the para-contact Nijenhuis sign", para},
      {"byte-identical JSON for repeated runs", determinism},
  };
  int failed = 0;
  int number = 0;
  for (const Entry& e : entries) {
    ++number;
    Criterion c(e.title);
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.report(number, secs)) ++failed;
  }
  std::printf("%d of %d criteria passed\n", number - failed, number);
  return failed == 0 ? 0 : 1;
}
