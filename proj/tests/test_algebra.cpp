#include "griemlab/algebra.hpp"
#include "griemlab/error.hpp"
#include "griemlab/frame.hpp"
#include "griemlab/zoo.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace griemlab;

namespace {
ChartManifold zoo(const char* spec) { return build_zoo(parse_zoo_spec(spec)); }

Mat symplectic(Eigen::Index n) {
  Mat j = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    j(i, i + 1) = 1.0;
    j(i + 1, i) = -1.0;
  }
  return j;
}
}  // namespace

TEST_CASE("identity metric with the standard symplectic form") {
  const Mat F = symplectic(4);
  const EndoAtPoint a = adjoint_from_form(Mat::Identity(4, 4), F);
  // g(AX, Y) = F(X, Y)  <=>  A^T g = F.
  CHECK(max_abs(a.components.transpose() - F) < 1e-15);
  CHECK(a.adjointness == Adjointness::skew);
  const QFromA q = q_from_a(a, StructureKind::weak_hermitian);
  CHECK(max_abs(q.q.components - Mat::Identity(4, 4)) < 1e-15);
}

TEST_CASE("diagonal rescaling of the metric") {
  Mat g = 2.0 * Mat::Identity(2, 2);
  Mat F(2, 2);
  F << 0, 1, -1, 0;
  const EndoAtPoint a = adjoint_from_form(g, F);
  Mat row_layout(2, 2);
  row_layout << 0, 0.5, -0.5, 0;
  // Row i of the listed matrix holds the components of A d_i; the library stores them as columns.
  CHECK(max_abs(a.components.transpose() - row_layout) < 1e-15);
  CHECK(max_abs(a.components.transpose() * g - F) < 1e-15);
}

TEST_CASE("adjoint postcondition on random data") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat g = oracle::random_spd(5, rng);
    Mat F = Mat::Random(5, 5);
    F = F - Mat(F.transpose());
    const EndoAtPoint a = adjoint_from_form(g, F);
    CHECK(max_abs(a.components.transpose() * g - F) < 1e-12);
    CHECK(max_abs(g * a.components + (g * a.components).transpose()) < 1e-12);
  }
}

TEST_CASE("weighted product: A is 2J on the weight 4 factor and F is recovered") {
  const auto m = zoo("zoo:weighted_product?factors=flat2,flat2&lambda=1,4");
  const auto p = m.sample_points(1, 1).front();
  const PointFrame f = make_frame(m, p);
  const Mat block = f.A.block(2, 2, 2, 2);
  CHECK(max_abs(block - 2.0 * symplectic(2).transpose()) < 1e-14);
  CHECK(max_abs(f.A.transpose() * f.g - f.F) < 1e-14);
  Mat q = Mat::Identity(4, 4);
  q.block(2, 2, 2, 2) *= 4.0;
  CHECK(max_abs(f.Q - q) < 1e-14);
}

TEST_CASE("Sasakian R3: Q is the identity, A xi = 0 and rank A = 2") {
  const auto m = zoo("zoo:sasakian_r3");
  for (const auto& p : m.sample_points(10, 2)) {
    const PointFrame f = make_frame(m, p);
    // Direct arithmetic oracle: Q = -A^2 + xi eta^T.
    const Mat q = -(f.A * f.A) + f.xi() * f.eta().transpose();
    CHECK(max_abs(q - Mat::Identity(3, 3)) < 1e-14);
    CHECK(max_abs(f.Q - Mat::Identity(3, 3)) < 1e-14);
    CHECK((f.A * f.xi()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(numerical_rank(f.A) == 2);
  }
}

TEST_CASE("conformal Q has a single cluster with the identity projector") {
  const Mat g = Mat::Identity(4, 4);
  const SpectrumReport s = g_selfadjoint_spectrum(g, 3.0 * g);
  REQUIRE(s.clusters.size() == 1);
  CHECK(s.clusters[0].value == doctest::Approx(3.0));
  CHECK(s.clusters[0].multiplicity == 4);
  CHECK(s.conformal);
  CHECK(max_abs(s.projectors[0] - Mat::Identity(4, 4)) < 1e-12);
}

TEST_CASE("prescribed spectrum is recovered from a random g-orthonormal frame") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat g = oracle::random_spd(4, rng);
    const Mat e = oracle::random_g_orthonormal(g, rng);
    Eigen::Vector4d lambda(1, 2, 2, 5);
    // Q e_i = lambda_i e_i with E^T g E = I, so Q = E diag(lambda) E^T g.
    const Mat q = e * lambda.asDiagonal() * e.transpose() * g;
    const SpectrumReport s = g_selfadjoint_spectrum(g, q);
    REQUIRE(s.clusters.size() == 3);
    CHECK(std::abs(s.clusters[0].value - 1.0) < 1e-10);
    CHECK(std::abs(s.clusters[1].value - 2.0) < 1e-10);
    CHECK(std::abs(s.clusters[2].value - 5.0) < 1e-10);
    CHECK(s.clusters[1].multiplicity == 2);
    for (std::size_t i = 0; i < 3; ++i) {
      const Mat& pr = s.projectors[i];
      CHECK(max_abs(pr * pr - pr) < 1e-10);
      CHECK(max_abs(q * pr - s.clusters[i].value * pr) < 1e-9);
      CHECK(std::abs(pr.trace() - static_cast<double>(s.clusters[i].multiplicity)) < 1e-10);
    }
  }
}

TEST_CASE("kernel exclusion for a contact-like operator") {
  Mat q = Mat::Zero(3, 3);
  q(0, 0) = 2.0;
  q(1, 1) = 2.0;
  const SpectrumReport s = g_selfadjoint_spectrum(Mat::Identity(3, 3), q, 1e-6, true);
  REQUIRE(s.kernel.has_value());
  CHECK(s.kernel->multiplicity == 1);
  REQUIRE(s.clusters.size() == 1);
  CHECK(s.clusters[0].multiplicity == 2);
}

TEST_CASE("indefinite metric is refused by the spectral solver") {
  Mat g = Mat::Identity(2, 2);
  g(1, 1) = -1.0;
  CHECK_THROWS_AS(g_selfadjoint_spectrum(g, Mat::Identity(2, 2)), NotApplicableError);
}

TEST_CASE("Lagrange projector derivative matches a difference quotient") {
  std::mt19937_64 rng(3);
  const Mat g = Mat::Identity(3, 3);
  const Mat e = oracle::random_g_orthonormal(g, rng);
  const Mat q = e * Eigen::Vector3d(1, 1, 4).asDiagonal() * e.transpose();
  Mat dq = Mat::Random(3, 3);
  dq = dq + Mat(dq.transpose());
  const std::vector<double> nodes{1.0, 4.0};
  const double h = 1e-6;
  for (std::size_t i = 0; i < 2; ++i) {
    const Mat fd = (lagrange_projector(q + h * dq, nodes, i) - lagrange_projector(q - h * dq, nodes, i)) / (2 * h);
    CHECK(max_abs(lagrange_projector_derivative(q, dq, nodes, i) - fd) < 1e-8);
  }
}

TEST_CASE("weak-f Q carries the kernel projector") {
  const auto m = zoo("zoo:product_contact?s=2");
  const PointFrame f = make_frame(m, m.sample_points(1, 4).front());
  const Mat p0 = f.Q + f.A * f.A;
  CHECK(max_abs(p0 * p0 - p0) < 1e-14);
  CHECK(numerical_rank(p0) == 2);
  CHECK(max_abs(f.A * f.A * f.A + f.A * f.Q) < 1e-14);
}
