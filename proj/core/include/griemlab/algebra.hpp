#pragma once

#include "griemlab/chart.hpp"
#include "griemlab/tensor.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace griemlab {

enum class Adjointness { none, skew, self };

/// A (1,1)-tensor at a point. components(k, i) is the k-th component of P d_i,
/// so matrices act on column vectors of coordinate components.
struct EndoAtPoint {
  Mat components;
  Adjointness adjointness = Adjointness::none;
};

/// eta (covector) and xi (vector) at a point.
struct ContactData {
  Vec eta;
  Vec xi;
};

/// A with g(AX, Y) = F(X, Y), i.e. A = -g^{-1} F in column convention.
EndoAtPoint adjoint_from_form(const Mat& g, const Mat& F);

/// dA/dx^a from the jets of g and F (product rule through g^{-1}).
std::vector<Mat> adjoint_partials(const Mat& g_inv, const Mat& F, std::span<const Mat> dg, std::span<const Mat> dF);

struct QFromA {
  EndoAtPoint q;
  double commutator_residual = 0.0;  // max |[A, Q]|
};

/// Q from the defining relation of the structure kind:
///   weak-hermitian  Q = -A^2           weak-contact  Q = -A^2 + eta (x) xi
///   para            Q =  A^2 (+ eta (x) xi with contact data)
///   weak-f          Q = -A^2 + P0, P0 the g-orthogonal projector onto ker A (needs g)
/// Throws NotApplicableError for contact kinds without contact data.
QFromA q_from_a(const EndoAtPoint& a, StructureKind kind, const ContactData* contact = nullptr,
                const Mat* g = nullptr);

/// dQ/dx^a for the polynomial relations above (not available for weak-f).
std::vector<Mat> q_partials(const Mat& a, std::span<const Mat> da, StructureKind kind, const ContactData* contact,
                            std::span<const Vec> deta, std::span<const Vec> dxi);

struct EigenCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
  double spread = 0.0;  // max - min of the grouped raw eigenvalues
};

/// Spectrum of a g-self-adjoint operator with eigenvalue clusters and
/// Lagrange-polynomial projectors.
struct SpectrumReport {
  std::vector<double> eigenvalues;     // raw, ascending
  std::vector<EigenCluster> clusters;  // analyzed distribution only
  std::vector<Mat> projectors;         // one per analyzed cluster
  std::optional<EigenCluster> kernel;  // excluded null cluster, if requested
  std::optional<Mat> kernel_projector;
  Mat eigenvectors;  // g-orthonormal columns
  bool conformal = false;  // a single cluster on the analyzed distribution
};

/// Eigen-decomposition of Q as an operator, solved by congruence with the
/// Cholesky factor of g. Eigenvalues whose relative gap is below `gap` are
/// grouped. With exclude_kernel set, the cluster at 0 (e.g. the xi direction of
/// -A^2 on a contact manifold) is split off and the analyzed distribution is
/// its complement. Throws NotApplicableError for indefinite g.
SpectrumReport g_selfadjoint_spectrum(const Mat& g, const Mat& q, double gap = 1e-6, bool exclude_kernel = false);

/// Lagrange projector onto the cluster with value nodes[i]:
/// prod_{j != i} (Q - nodes[j]) / (nodes[i] - nodes[j]).
Mat lagrange_projector(const Mat& q, std::span<const double> nodes, std::size_t i);

/// Directional derivative of lagrange_projector given dQ, by the product rule.
Mat lagrange_projector_derivative(const Mat& q, const Mat& dq, std::span<const double> nodes, std::size_t i);

/// Number of singular values above rel_tol * the largest one.
std::size_t numerical_rank(const Mat& m, double rel_tol = 1e-8);

}  // namespace griemlab
