#pragma once

#include "griemlab/algebra.hpp"
#include "griemlab/calculus.hpp"
#include "griemlab/chart.hpp"

#include <optional>
#include <span>
#include <vector>

namespace griemlab {

/// Everything the identities need at one sample point: field values and first
/// partials, g^{-1}, the structure tensors A and Q with jets, and the
/// Levi-Civita coefficients.
struct PointFrame {
  std::vector<double> x;
  std::size_t n = 0;
  StructureKind kind = StructureKind::generic;

  Mat g;
  Mat g_inv;
  std::vector<Mat> dg;

  Mat F;
  std::vector<Mat> dF;

  Mat A;
  std::vector<Mat> dA;

  Mat Q;
  std::vector<Mat> dQ;  // empty when Q carries no jet (weak-f)

  std::optional<ContactData> contact;
  std::vector<Vec> deta;
  std::vector<Vec> dxi;

  ConnectionCoeffs levi_civita;

  bool has_q_jet() const { return !dQ.empty(); }
  const Vec& eta() const { return contact->eta; }
  const Vec& xi() const { return contact->xi; }
};

/// Evaluate all jets at p and derive A, Q and the Levi-Civita connection.
PointFrame make_frame(const ChartManifold& manifold, std::span<const double> p);

}  // namespace griemlab
