#include "griemlab/structures.hpp"
#include "griemlab/zoo.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace griemlab;

namespace {
ChartManifold zoo(const char* spec) { return build_zoo(parse_zoo_spec(spec)); }

std::vector<Vec> unit_probes(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Vec> out;
  for (std::size_t c = 0; c < count; ++c) {
    Vec v(static_cast<Eigen::Index>(n));
    for (auto& x : v) x = normal(rng);
    out.push_back(v.normalized());
  }
  return out;
}
}  // namespace

TEST_CASE("axioms hold to round-off on every zoo entry") {
  for (const auto& info : zoo_catalog()) {
    CAPTURE(info.name);
    const ChartManifold m = build_zoo(ZooSpec{info.name, {}});
    const auto pts = m.sample_points(20, 1);
    const StructureReport r = validate_structure(m, pts);
    CHECK(r.max_residual() < 1e-12);
    CHECK(r.points == pts.size());
  }
}

TEST_CASE("flat Kaehler is Kaehler and integrable") {
  const auto m = zoo("zoo:flat_kahler");
  const StructureReport r = validate_structure(m, m.sample_points(5, 1));
  CHECK(r.max_residual() == 0.0);
  CHECK(r.weak_kahler);
  CHECK(r.integrable);
  CHECK(r.rank_a == 4);
}

TEST_CASE("weighted product is weak Kaehler when all factors are Kaehler") {
  const auto m = build_zoo(ZooSpec{"weighted_product", {{"factors", {"s2", "s2"}}, {"lambda", {2.0, 3.0}}}});
  const auto pts = m.sample_points(5, 2);
  const StructureReport r = validate_structure(m, pts);
  CHECK(r.max_residual() < 1e-12);
  CHECK(r.weak_kahler);
  const PointFrame f = make_frame(m, pts.front());
  const SpectrumReport s = g_selfadjoint_spectrum(f.g, f.Q);
  REQUIRE(s.clusters.size() == 2);
  CHECK(s.clusters[0].value == doctest::Approx(2.0));
  CHECK(s.clusters[1].value == doctest::Approx(3.0));
  CHECK_FALSE(s.conformal);
}

TEST_CASE("S6 is nearly Kaehler but not Kaehler") {
  const auto m = zoo("zoo:s6_nearly_kahler");
  const auto probes = unit_probes(6, 8, 3);
  for (const auto& p : m.sample_points(10, 3)) {
    const PointFrame f = make_frame(m, p);
    const NearlyKahlerDefect d = nearly_kahler_defect(f, probes);
    CHECK(d.defect < 1e-8);
    CHECK(d.symmetric_part < 1e-8);
    CHECK(d.nabla_a > 0.1);
  }
  const StructureReport r = validate_structure(m, m.sample_points(5, 3));
  CHECK(r.weak_nearly_kahler);
  CHECK_FALSE(r.weak_kahler);
  CHECK_FALSE(r.integrable);
}

TEST_CASE("perturbed R4 has a visible nearly Kaehler defect") {
  const auto m = zoo("zoo:perturbed_kahler_r4");
  const auto probes = unit_probes(4, 8, 4);
  double worst = 0.0;
  for (const auto& p : m.sample_points(10, 4)) worst = std::max(worst, nearly_kahler_defect(make_frame(m, p), probes).defect);
  CHECK(worst > 1e-3);
}

TEST_CASE("Sasakian R3 axioms and rank") {
  const auto m = zoo("zoo:sasakian_r3");
  const StructureReport r = validate_structure(m, m.sample_points(10, 5));
  CHECK(r.max_residual() < 1e-12);
  CHECK(r.rank_a == 2);
}

TEST_CASE("contact Nijenhuis identities on Sasakian R3") {
  const auto m = zoo("zoo:sasakian_r3");
  for (const auto& p : m.sample_points(10, 6)) {
    const PointFrame f = make_frame(m, p);
    const Tensor3 na = nijenhuis_form(f);
    const Mat deta = exterior_derivative_1form(f.deta);
    const Vec& xi = f.xi();
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        const Vec X = Vec::Unit(3, static_cast<Eigen::Index>(x)), Y = Vec::Unit(3, static_cast<Eigen::Index>(y));
        double n_xy_xi = 0.0;
        for (std::size_t k = 0; k < 3; ++k) n_xy_xi += na(x, y, k) * xi(static_cast<Eigen::Index>(k));
        CHECK(std::abs(n_xy_xi + (f.A * X).dot(deta * (f.A * Y))) < 1e-8);
        for (std::size_t z = 0; z < 3; ++z) {
          const Vec Z = Vec::Unit(3, static_cast<Eigen::Index>(z));
          double n_xi_yz = 0.0;
          for (std::size_t k = 0; k < 3; ++k) n_xi_yz += xi(static_cast<Eigen::Index>(k)) * na(k, y, z);
          const double rhs = Y.dot(deta * (f.Q * Z)) - (f.A * Y).dot(deta * (f.A * Z));
          CHECK(std::abs(n_xi_yz - rhs) < 1e-8);
        }
      }
  }
}

TEST_CASE("contact Nijenhuis vanishes on a flat product") {
  const auto m = zoo("zoo:product_contact");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  CHECK(max_abs(contact_nijenhuis(f, ContactVariant::wac)) < 1e-15);
  const ReebResiduals r = reeb_checks(f, f.levi_civita);
  CHECK(r.geodesic == 0.0);
  CHECK(r.killing == 0.0);
  CHECK(r.nabla_xi == 0.0);
}

TEST_CASE("Reeb field of Sasakian R3 is geodesic and Killing") {
  const auto m = zoo("zoo:sasakian_r3");
  for (const auto& p : m.sample_points(10, 7)) {
    const PointFrame f = make_frame(m, p);
    const ReebResiduals r = reeb_checks(f, f.levi_civita);
    CHECK(r.geodesic < 1e-8);
    CHECK(r.killing < 1e-8);
    CHECK(r.deta_xi < 1e-12);
  }
}

TEST_CASE("wac identity is algebraic in a skew torsion") {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> normal;
  const auto m = zoo("zoo:product_contact?factors=flat2,flat2&lambda=1,4");
  const PointFrame f = make_frame(m, m.sample_points(1, 1).front());
  Tensor3 t(f.n);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j)
      for (std::size_t k = 0; k < f.n; ++k) t(i, j, k) = normal(rng);
  t = alternate(t);
  CHECK(max_abs(contact_nijenhuis_from_torsion(f, t, ContactVariant::wac) -
                contact_nijenhuis_rhs(f, t, ContactVariant::wac)) < 1e-12);
  CHECK(max_abs(contact_nijenhuis_from_torsion(f, t, ContactVariant::wac) -
                contact_nijenhuis_rhs(f, t, ContactVariant::wapc)) > 1e-3);
}

TEST_CASE("weak f-structure relations and dimensions") {
  const auto hermitian = zoo("zoo:flat_kahler");
  const FStructureReport h = f_structure_checks(make_frame(hermitian, hermitian.sample_points(1, 1).front()));
  CHECK(h.residuals.at("A3+AQ") < 1e-12);
  CHECK(h.dim_kernel == 0);

  const auto contact = zoo("zoo:product_contact?factors=flat4&lambda=1&s=1");
  const FStructureReport c = f_structure_checks(make_frame(contact, contact.sample_points(1, 1).front()));
  CHECK(c.dim_distribution == 4);
  CHECK(c.dim_kernel == 1);

  const auto para = zoo("zoo:para_flat");
  const FStructureReport p = f_structure_checks(make_frame(para, para.sample_points(1, 1).front()));
  for (const auto& [k, v] : p.residuals) CHECK(v < 1e-12);
}
