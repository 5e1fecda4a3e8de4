#pragma once

#include "griemlab/chart.hpp"
#include "griemlab/connections.hpp"
#include "griemlab/frame.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace griemlab {

/// Max-aggregated axiom residuals of a declared structure kind.
struct StructureReport {
  StructureKind kind = StructureKind::generic;
  std::map<std::string, double> axiom_residuals;
  std::size_t points = 0;
  std::size_t rank_a = 0;         // minimum over points
  bool weak_kahler = false;       // full nabla^g A below tol everywhere
  bool weak_nearly_kahler = false;
  bool integrable = false;        // N_A below tol everywhere

  double max_residual() const;
  /// Merge another report by max-aggregation.
  void absorb(const StructureReport& other);
};

/// Axiom residuals at a single frame (without the derived flags).
StructureReport validate_at(const PointFrame& frame);

/// Axioms at each point, max-aggregated; flags from first-derivative checks at tol.
StructureReport validate_structure(const ChartManifold& manifold, std::span<const std::vector<double>> points,
                                   double tol = 1e-8);

struct NearlyKahlerDefect {
  double defect = 0.0;          // max over probes X and components of |(nabla^g_X A) X|
  double symmetric_part = 0.0;  // max |(nabla^g_X F)(Y,Z) + (nabla^g_Y F)(X,Z)|
  double nabla_a = 0.0;         // max |nabla^g A|
};

/// (nabla^g_X A) X over unit probe vectors plus its polarized component form.
NearlyKahlerDefect nearly_kahler_defect(const PointFrame& frame, std::span<const Vec> probes);

enum class ContactVariant { wac, wapc };

/// N_A + d eta (x) eta (wac) or N_A - d eta (x) eta (wapc), where
/// (d eta (x) eta)(X,Y,Z) = d eta(X,Y) eta(Z).
Tensor3 contact_nijenhuis(const PointFrame& frame, ContactVariant variant);

/// Same variants, with N_A and d eta taken from a torsion through
/// nabla A = 0 and d eta(X,Y) = T(X,Y,xi).
Tensor3 contact_nijenhuis_from_torsion(const PointFrame& frame, const Tensor3& torsion, ContactVariant variant);

/// Right side of N_A(X,Y,Z) +- eta(Z) d eta(X,Y) in terms of T:
///  wac:  T(X,Y,QZ) - T(AX,AY,Z) - T(AX,Y,AZ) - T(X,AY,AZ)
///  wapc: -T(X,Y,QZ) - T(AX,AY,Z) - T(AX,Y,AZ) - T(X,AY,AZ)
Tensor3 contact_nijenhuis_rhs(const PointFrame& frame, const Tensor3& torsion, ContactVariant variant);

struct ReebResiduals {
  double geodesic = 0.0;   // |nabla^g_xi xi|
  double killing = 0.0;    // max |g(nabla^g_X xi, Y) + g(nabla^g_Y xi, X)|
  double nabla_xi = 0.0;   // |nabla xi| for the given connection
  double nabla_eta = 0.0;  // |nabla eta|
  double nabla_q = 0.0;    // |nabla Q|
  double deta_xi = 0.0;    // max |d eta(X, xi)|
};

ReebResiduals reeb_checks(const PointFrame& frame, const ConnectionCoeffs& coeffs);

struct FStructureReport {
  std::map<std::string, double> residuals;
  std::size_t dim_distribution = 0;  // dim A(TM)
  std::size_t dim_kernel = 0;        // dim ker A
};

/// Weak f (A^3 + AQ = 0) or, for the para kind, weak para-f (A^3 - AQ = 0) relations.
FStructureReport f_structure_checks(const PointFrame& frame);

}  // namespace griemlab
