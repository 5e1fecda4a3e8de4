#include "griemlab/algebra.hpp"

#include "griemlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace griemlab {

namespace {

void require_square(const Mat& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw ShapeError(std::string(what) + " has the wrong shape");
}

Mat inverse_checked(const Mat& g) {
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible() || std::abs(g.determinant()) < 1e-10) throw SingularMetricError("metric is singular");
  return lu.inverse();
}

// g-orthogonal projector onto ker A.
Mat kernel_projector(const Mat& a, const Mat& g) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Eigen::Index n = a.cols();
  const Eigen::Index rank = static_cast<Eigen::Index>(numerical_rank(a));
  if (rank == n) return Mat::Zero(n, n);
  Mat basis = svd.matrixV().rightCols(n - rank);
  // P = B (B^T g B)^{-1} B^T g
  const Mat gram = basis.transpose() * g * basis;
  return basis * gram.inverse() * basis.transpose() * g;
}

}  // namespace

EndoAtPoint adjoint_from_form(const Mat& g, const Mat& F) {
  require_square(g, g.rows(), "g");
  require_square(F, g.rows(), "F");
  return EndoAtPoint{-inverse_checked(g) * F, Adjointness::skew};
}

std::vector<Mat> adjoint_partials(const Mat& g_inv, const Mat& F, std::span<const Mat> dg, std::span<const Mat> dF) {
  if (dg.size() != dF.size()) throw ShapeError("adjoint_partials: jets of g and F disagree");
  std::vector<Mat> out;
  out.reserve(dg.size());
  for (std::size_t a = 0; a < dg.size(); ++a) out.push_back(g_inv * dg[a] * g_inv * F - g_inv * dF[a]);
  return out;
}

QFromA q_from_a(const EndoAtPoint& a, StructureKind kind, const ContactData* contact, const Mat* g) {
  const Mat& A = a.components;
  const Mat a2 = A * A;
  Mat q;
  switch (kind) {
    case StructureKind::generic:
    case StructureKind::weak_hermitian: q = -a2; break;
    case StructureKind::weak_contact:
      if (contact == nullptr) throw NotApplicableError("weak-contact Q needs eta and xi");
      q = -a2 + contact->xi * contact->eta.transpose();
      break;
    case StructureKind::para:
      q = a2;
      if (contact != nullptr) q += contact->xi * contact->eta.transpose();
      break;
    case StructureKind::weak_f:
      if (g == nullptr) throw NotApplicableError("weak-f Q needs the metric to project onto ker A");
      q = -a2 + kernel_projector(A, *g);
      break;
  }
  return QFromA{EndoAtPoint{q, Adjointness::self}, max_abs(commutator(A, q))};
}

std::vector<Mat> q_partials(const Mat& a, std::span<const Mat> da, StructureKind kind, const ContactData* contact,
                            std::span<const Vec> deta, std::span<const Vec> dxi) {
  if (kind == StructureKind::weak_f) throw NotApplicableError("Q jets are not tracked for weak-f structures");
  const double sign = kind == StructureKind::para ? 1.0 : -1.0;
  const bool contact_term = contact != nullptr && kind != StructureKind::weak_hermitian && kind != StructureKind::generic;
  std::vector<Mat> out;
  out.reserve(da.size());
  for (std::size_t i = 0; i < da.size(); ++i) {
    Mat dq = sign * (da[i] * a + a * da[i]);
    if (contact_term) dq += dxi[i] * contact->eta.transpose() + contact->xi * deta[i].transpose();
    out.push_back(std::move(dq));
  }
  return out;
}

SpectrumReport g_selfadjoint_spectrum(const Mat& g, const Mat& q, double gap, bool exclude_kernel) {
  require_square(q, g.rows(), "Q");
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw NotApplicableError(
        "g is not positive definite: the spectral decomposition of a self-adjoint operator is not available for "
        "pseudo-Riemannian metrics (light-like eigenvectors)");
  // gQ is symmetric when Q is g-self-adjoint; symmetrize the rounding away.
  const Mat gq = g * q;
  const Mat sym = 0.5 * (gq + gq.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> solver(sym, g, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) throw NotApplicableError("generalized eigenproblem did not converge");

  SpectrumReport report;
  const Vec& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  report.eigenvectors = solver.eigenvectors();

  std::vector<std::vector<double>> groups;
  for (double lambda : report.eigenvalues) {
    if (!groups.empty()) {
      const double last = groups.back().back();
      if (std::abs(lambda - last) <= gap * std::max(1.0, std::abs(last))) {
        groups.back().push_back(lambda);
        continue;
      }
    }
    groups.push_back({lambda});
  }

  std::vector<EigenCluster> all;
  for (const auto& grp : groups) {
    double sum = 0.0;
    for (double v : grp) sum += v;
    all.push_back(EigenCluster{sum / static_cast<double>(grp.size()), grp.size(), grp.back() - grp.front()});
  }
  std::vector<double> nodes;
  for (const auto& c : all) nodes.push_back(c.value);

  for (std::size_t i = 0; i < all.size(); ++i) {
    const bool is_kernel = exclude_kernel && std::abs(all[i].value) <= gap * std::max(1.0, ev.cwiseAbs().maxCoeff());
    Mat proj = lagrange_projector(q, nodes, i);
    if (is_kernel && !report.kernel) {
      report.kernel = all[i];
      report.kernel_projector = std::move(proj);
    } else {
      report.clusters.push_back(all[i]);
      report.projectors.push_back(std::move(proj));
    }
  }
  report.conformal = report.clusters.size() == 1;
  return report;
}

Mat lagrange_projector(const Mat& q, std::span<const double> nodes, std::size_t i) {
  const Eigen::Index n = q.rows();
  Mat p = Mat::Identity(n, n);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == i) continue;
    p = p * (q - nodes[j] * Mat::Identity(n, n)) / (nodes[i] - nodes[j]);
  }
  return p;
}

Mat lagrange_projector_derivative(const Mat& q, const Mat& dq, std::span<const double> nodes, std::size_t i) {
  const Eigen::Index n = q.rows();
  std::vector<Mat> factors;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (j != i) factors.push_back((q - nodes[j] * Mat::Identity(n, n)) / (nodes[i] - nodes[j]));
  std::vector<double> scale;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (j != i) scale.push_back(1.0 / (nodes[i] - nodes[j]));
  Mat total = Mat::Zero(n, n);
  for (std::size_t d = 0; d < factors.size(); ++d) {
    Mat term = Mat::Identity(n, n);
    for (std::size_t f = 0; f < factors.size(); ++f) term = term * (f == d ? Mat(dq * scale[f]) : factors[f]);
    total += term;
  }
  return total;
}

std::size_t numerical_rank(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

}  // namespace griemlab
