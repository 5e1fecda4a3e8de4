#include "griemlab/error.hpp"
#include "griemlab/frame.hpp"
#include "griemlab/zoo.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace griemlab;

TEST_CASE("octonion doubling gives an R^7 cross product") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Vec x(7), y(7);
    for (int i = 0; i < 7; ++i) {
      x(i) = normal(rng);
      y(i) = normal(rng);
    }
    const Vec c = oracle::cross7(x, y);
    CHECK(std::abs(c.dot(x)) < 1e-12);
    CHECK(std::abs(c.squaredNorm() - (x.squaredNorm() * y.squaredNorm() - x.dot(y) * x.dot(y))) < 1e-10);
    CHECK((oracle::cross7(x, c) + x.squaredNorm() * y - x.dot(y) * x).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("S6 metric and form agree with the octonion oracle") {
  const auto m = build_zoo(ZooSpec{"s6_nearly_kahler", {}});
  for (const auto& u : m.sample_points(20, 2)) {
    const oracle::SpherePoint s = oracle::inverse_stereographic(u);
    CHECK(std::abs(s.p.norm() - 1.0) < 1e-14);
    const PointFrame f = make_frame(m, u);
    for (std::size_t i = 0; i < 6; ++i) {
      const Vec pe = oracle::cross7(s.p, s.frame[i]);
      // p x X keeps the length of a tangent X and stays tangent.
      CHECK(std::abs(pe.norm() - s.frame[i].norm()) < 1e-9);
      CHECK(std::abs(pe.dot(s.p)) < 1e-9);
      for (std::size_t j = 0; j < 6; ++j) {
        const auto I = static_cast<Eigen::Index>(i), J = static_cast<Eigen::Index>(j);
        CHECK(std::abs(f.g(I, J) - s.frame[i].dot(s.frame[j])) < 1e-9);
        CHECK(std::abs(f.F(I, J) - pe.dot(s.frame[j])) < 1e-9);
      }
    }
  }
}

TEST_CASE("S6 has constant type one") {
  // |(nabla_X J) Y|^2 = |X|^2 |Y|^2 - g(X,Y)^2 - g(JX,Y)^2 for the unit sphere.
  const auto m = build_zoo(ZooSpec{"s6_nearly_kahler", {}});
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (const auto& u : m.sample_points(5, 3)) {
    const PointFrame f = make_frame(m, u);
    const Tensor3 na = covariant_derivative_11(f.A, f.dA, f.levi_civita);
    Vec x(6), y(6);
    for (int i = 0; i < 6; ++i) {
      x(i) = normal(rng);
      y(i) = normal(rng);
    }
    Vec v = Vec::Zero(6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t k = 0; k < 6; ++k)
          v(static_cast<Eigen::Index>(k)) += x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j)) * na(i, j, k);
    const double gxx = x.dot(f.g * x), gyy = y.dot(f.g * y), gxy = x.dot(f.g * y);
    const double gjxy = (f.A * x).dot(f.g * y);
    CHECK(v.dot(f.g * v) == doctest::Approx(gxx * gyy - gxy * gxy - gjxy * gjxy).epsilon(1e-9));
  }
}

TEST_CASE("zoo spec strings") {
  const ZooSpec s = parse_zoo_spec("zoo:weighted_product?factors=s2,flat2&lambda=1,2.5");
  CHECK(s.name == "weighted_product");
  CHECK(s.params["factors"] == nlohmann::json({"s2", "flat2"}));
  CHECK(s.params["lambda"][1] == 2.5);
  const ZooSpec b = parse_zoo_spec("para_flat?contact=true&n=2");
  CHECK(b.params["contact"] == true);
  CHECK(b.params["n"] == 2);
}

TEST_CASE("zoo parameter validation") {
  CHECK_THROWS_AS(build_zoo(ZooSpec{"no_such_entry", {}}), ParseError);
  CHECK_THROWS_AS(build_zoo(parse_zoo_spec("flat_kahler?n=3")), ParseError);
  CHECK_THROWS_AS(build_zoo(parse_zoo_spec("flat_kahler?bogus=1")), ParseError);
  CHECK_THROWS_AS(build_zoo(parse_zoo_spec("weighted_product?factors=s2,s2&lambda=2,2")), ParseError);
  CHECK_THROWS_AS(build_zoo(parse_zoo_spec("weighted_product?factors=s5&lambda=1")), ParseError);
  CHECK_THROWS_AS(build_zoo(parse_zoo_spec("weighted_product?factors=s2&lambda=-1")), ParseError);
}

TEST_CASE("catalog entries all build with their defaults") {
  for (const auto& info : zoo_catalog()) {
    CAPTURE(info.name);
    const ChartManifold m = build_zoo(ZooSpec{info.name, info.defaults});
    CHECK(m.dim() >= 2);
    CHECK_FALSE(info.summary.empty());
  }
}

TEST_CASE("weighted product of two spheres has Q spectrum {2, 3}") {
  const auto m = build_zoo(parse_zoo_spec("weighted_product?factors=s2,s2&lambda=2,3"));
  const PointFrame f = make_frame(m, m.sample_points(1, 5).front());
  const SpectrumReport s = g_selfadjoint_spectrum(f.g, f.Q);
  REQUIRE(s.clusters.size() == 2);
  CHECK(s.clusters[0].value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.clusters[1].value == doctest::Approx(3.0).epsilon(1e-12));
}
