#include "griemlab/report.hpp"
#include "griemlab/verifier.hpp"
#include "griemlab/zoo.hpp"

#include <doctest.h>

#include <set>

using namespace griemlab;

namespace {
ChartManifold zoo(const char* spec) { return build_zoo(parse_zoo_spec(spec)); }

RunOptions small(std::size_t points = 10) {
  RunOptions o;
  o.points = points;
  return o;
}
}  // namespace

TEST_CASE("catalog ids are unique and every suite ships a negative control") {
  std::set<std::string> ids;
  for (const auto& s : suite_catalog()) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.anchor.empty());
  }
  CHECK(ids.size() == 12);
  // Find a manifold each suite applies to and confirm an above-expectation check exists.
  const char* hosts[] = {"zoo:s6_nearly_kahler", "zoo:sasakian_r3", "zoo:para_flat?contact=true",
                         "zoo:product_contact?s=2", "zoo:conformal_hermitian_r4"};
  std::set<std::string> covered;
  for (const char* h : hosts) {
    const auto m = zoo(h);
    for (const auto& s : suite_catalog()) {
      if (covered.count(s.id) || !suite_applicable(s.id, m)) continue;
      const SuiteReport r = run_suite(m, s.id, small(3));
      bool control = false;
      for (const auto& c : r.checks) control = control || c.expect == Expect::above;
      CHECK_MESSAGE(control, s.id);
      covered.insert(s.id);
    }
  }
  CHECK(covered.size() == ids.size());
}

TEST_CASE("flat Kaehler passes everything selected by all") {
  const auto m = zoo("zoo:flat_kahler?n=4");
  const auto reports = run_suites(m, {"all"}, small(20));
  CHECK(reports.size() >= 5);
  for (const auto& r : reports) {
    CAPTURE(r.suite);
    CHECK(r.passed());
    for (const auto& c : r.checks)
      if (c.expect == Expect::below && c.max_residual) CHECK(*c.max_residual < 1e-12);
  }
}

TEST_CASE("pass means below tolerance for ordinary checks and above it for controls") {
  const auto m = zoo("zoo:s6_nearly_kahler");
  const SuiteReport r = run_suite(m, "nearly-kahler", small());
  for (const auto& c : r.checks) {
    CAPTURE(c.id);
    REQUIRE(c.max_residual.has_value());
    CHECK(c.pass == (c.expect == Expect::below ? *c.max_residual < c.tol : *c.max_residual > c.tol));
    CHECK(c.points == 10);
  }
  CHECK(r.passed());
}

TEST_CASE("negative control manifolds fail the hypothesis checks") {
  const auto m = zoo("zoo:perturbed_kahler_r4");
  const SuiteReport r = run_suite(m, "nearly-kahler", small());
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("nk-defect")->pass);
  CHECK_FALSE(r.find("conn2")->pass);
  const SuiteReport e = run_suite(zoo("zoo:twisted_product_r4"), "eigen-distributions", small());
  CHECK_FALSE(e.find("involutivity")->pass);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const auto m = zoo("zoo:weighted_product");
  RunOptions one = small(16);
  RunOptions four = one;
  four.threads = 4;
  const auto a = run_suites(m, {"all"}, one);
  const auto b = run_suites(m, {"all"}, one);
  const auto c = run_suites(m, {"all"}, four);
  CHECK(reports_to_json(a).dump() == reports_to_json(b).dump());
  CHECK(reports_to_json(a).dump() == reports_to_json(c).dump());
  RunOptions other = one;
  other.seed = 7;
  CHECK(reports_to_json(run_suites(m, {"all"}, other)).dump() != reports_to_json(a).dump());
}

TEST_CASE("spectrum summary for the weighted product") {
  const SuiteReport r = run_suite(zoo("zoo:weighted_product"), "eigen-distributions", small(30));
  REQUIRE(r.spectrum.has_value());
  REQUIRE(r.spectrum->eigenvalues.size() == 2);
  CHECK(r.spectrum->eigenvalues[0] == doctest::Approx(1.0));
  CHECK(r.spectrum->eigenvalues[1] == doctest::Approx(4.0));
  CHECK(r.spectrum->multiplicities == std::vector<std::size_t>{6, 2});
  CHECK(r.passed());
}

TEST_CASE("tolerance overrides") {
  const auto m = zoo("zoo:s6_nearly_kahler");
  RunOptions o = small(5);
  o.tol_overrides["nk-defect"] = 1e-30;
  CHECK_FALSE(run_suite(m, "nearly-kahler", o).find("nk-defect")->pass);
  o.tol_overrides.clear();
  o.tol_overrides["nearly-kahler/conn2"] = 0.5;
  const auto rs = run_suites(m, {"nearly-kahler", "generalized-connection"}, o);
  CHECK(rs[0].find("conn2")->tol == 0.5);
  CHECK(rs[1].find("conn2")->tol == doctest::Approx(1e-8));
  o.tol_overrides.clear();
  o.tol_overrides["no-such-check"] = 1.0;
  CHECK_THROWS_AS(run_suite(m, "nearly-kahler", o), ParseError);
  o.tol_overrides.clear();
  o.tol_overrides["conn2"] = -1.0;
  CHECK_THROWS_AS(run_suite(m, "nearly-kahler", o), ParseError);
}

TEST_CASE("inapplicable and unknown suites") {
  CHECK_THROWS_AS(run_suite(zoo("zoo:sasakian_r3"), "nearly-kahler", small()), InapplicableSuiteError);
  CHECK_THROWS_AS(run_suite(zoo("zoo:flat_kahler"), "contact", small()), InapplicableSuiteError);
  CHECK_THROWS_AS(run_suite(zoo("zoo:eisenhart_r3"), "generalized-connection", small()), InapplicableSuiteError);
  CHECK_THROWS_AS(run_suite(zoo("zoo:flat_kahler"), "no-such-suite", small()), ParseError);
  std::string reason;
  CHECK_FALSE(suite_applicable("para", zoo("zoo:flat_kahler"), &reason));
  CHECK_FALSE(reason.empty());
}

TEST_CASE("report JSON layout") {
  const auto m = zoo("zoo:sasakian_r3");
  const auto reports = run_suites(m, {"contact"}, small(4));
  const nlohmann::json j = reports_to_json(reports);
  CHECK(j["version"] == kReportVersion);
  CHECK(j["suite"] == "contact");
  CHECK(j["seed"] == 42);
  CHECK(j["points"] == 4);
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "anchor", "max_residual", "tol", "pass", "expect", "points"}) CHECK(c.contains(key));
  }
  const auto both = run_suites(m, {"contact", "construction"}, small(4));
  const nlohmann::json k = reports_to_json(both);
  CHECK(k["version"] == kReportVersion);
  CHECK(k["reports"].size() == 2);
  CHECK(to_table(both).find("contact on sasakian_r3") != std::string::npos);
}

TEST_CASE("environment fingerprint names the toolchain") {
  const std::string fp = environment_fingerprint();
  CHECK(fp.find("eigen") != std::string::npos);
  CHECK(fp.find("nlohmann_json") != std::string::npos);
}
