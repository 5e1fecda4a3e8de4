#pragma once

#include "griemlab/calculus.hpp"
#include "griemlab/frame.hpp"
#include "griemlab/tensor.hpp"

#include <string>

namespace griemlab {

/// Torsion (0,3)-tensor T(X,Y,Z) = g(T(X,Y), Z) at a point.
/// Always skew in the first two slots; totally_skew is set when the third slot
/// is skew as well (to 1e-10 relative to the tensor size).
struct TorsionAtPoint {
  Tensor3 components;
  bool totally_skew = false;
  std::string note;
};

TorsionAtPoint make_torsion(Tensor3 components);

/// 2K(X,Y,Z) = T(X,Y,Z) + T(Z,X,Y) - T(Y,Z,X).
Tensor3 contorsion_from_torsion(const Tensor3& torsion);

/// The unique metric connection with the given torsion:
/// 2g(nabla_X Y, Z) = 2g(nabla^g_X Y, Z) + T(X,Y,Z) + T(Z,X,Y) - T(Y,Z,X).
ConnectionCoeffs metric_connection_from_torsion(const PointFrame& frame, const TorsionAtPoint& torsion);

struct EisenhartConnection {
  ConnectionCoeffs coeffs;
  TorsionAtPoint torsion;
};

/// g(nabla_X Y, Z) = 1/2 [X G(Y,Z) + Y G(Z,X) - Z G(Y,X)], built from the jet of
/// G = g + F directly. Its torsion is dF.
EisenhartConnection eisenhart_connection(const PointFrame& frame);

/// (nabla_i g)_{jk} for arbitrary coefficients.
Tensor3 nabla_metric(const PointFrame& frame, const ConnectionCoeffs& coeffs);
/// (nabla_i F)_{jk}.
Tensor3 nabla_form(const PointFrame& frame, const ConnectionCoeffs& coeffs);
/// (nabla^g_i F)_{jk}.
Tensor3 levi_civita_nabla_form(const PointFrame& frame);

/// max |(nabla_Z g)(X,Y) - (nabla_X g)(Z,Y)|.
double check_codazzi(const PointFrame& frame, const ConnectionCoeffs& coeffs);

/// max |T(AX,Y,Z) - T(X,AY,Z)|.
double check_a_torsion(const Tensor3& torsion, const Mat& a);
/// max of |T(QX,Y,Z) - T(X,QY,Z)| and |T(X,QY,Z) - T(X,Y,QZ)| (Q g-self-adjoint,
/// so the last term is g(Q T(X,Y), Z)).
double check_q_torsion(const Tensor3& torsion, const Mat& q);

/// Right side R of 2(nabla^g_X F)(Y,Z) = R(X,Y,Z) in terms of T and A.
Tensor3 conn2_rhs(const Mat& a, const Tensor3& torsion);
/// Right side of dF(X,Y,Z) = -T(X,Y,AZ) - T(Y,Z,AX) - T(Z,X,AY).
Tensor3 conn1_rhs(const Mat& a, const Tensor3& torsion);

double residual_conn2(const PointFrame& frame, const Tensor3& torsion);
double residual_conn1(const PointFrame& frame, const Tensor3& torsion);

/// N_A as a (0,3)-tensor N_A(X,Y,Z) = g(N_A(X,Y), Z) from the jet of A.
Tensor3 nijenhuis_form(const PointFrame& frame);
/// Lowered Nijenhuis tensor of Q from the jet of Q.
Tensor3 nijenhuis_q_form(const PointFrame& frame);

/// N_A when nabla A = 0:
/// -T(AX,AY,Z) - T(X,Y,A^2 Z) - T(AX,Y,AZ) - T(X,AY,AZ).
Tensor3 nijenhuis_from_torsion(const Mat& a, const Tensor3& torsion);
/// N_Q when nabla Q = 0:
/// -T(QX,QY,Z) - T(X,Y,Q^2 Z) + T(QX,Y,QZ) + T(X,QY,QZ).
Tensor3 nijenhuis_q_from_torsion(const Mat& q, const Tensor3& torsion);

struct SkewTorsionResiduals {
  bool applicable = false;
  std::string reason;
  double tor1_first = 0.0;   // T(AX,AY,Z) + N_A(X,Y,Z) - dF(X,Y,AZ)
  double tor1_second = 0.0;  // T(AX,Y,Z) - 2(nabla^g_X F)(Y,Z) + dF(X,Y,Z)
  double ndf1 = 0.0;         // N_A(X,Y,AZ) + N_A(X,Z,AY) - dF(X,Y,A^2Z) - dF(X,Z,A^2Y)
};

/// Identities for generalized metric connections with totally skew torsion;
/// reported as not applicable unless T is totally skew and conn2 holds to conn2_tol.
SkewTorsionResiduals residual_tor1_ndf1(const PointFrame& frame, const TorsionAtPoint& torsion,
                                        double conn2_tol = 1e-8);

/// T(X,Y,Z) = 1/3 dF(A Q^{-1} X, Y, Z), i.e. T(AX,Y,Z) = -1/3 dF(X,Y,Z) with
/// A^{-1} = -A Q^{-1}. Refuses singular A.
TorsionAtPoint nk_torsion(const PointFrame& frame);

/// T(QX,Y,Z) = -1/2 [dF(AX,Y,Z) + dF(X,AY,Z)], solved with Q^{-1}.
TorsionAtPoint chern_torsion(const PointFrame& frame);

/// T(AX,AY,Z) = dF(X,Y,AZ), i.e. T(X,Y,Z) = dF(A^{-1}X, A^{-1}Y, AZ).
TorsionAtPoint bismut_torsion(const PointFrame& frame);

/// T = eta ^ d eta + T_D with T(X,Y,xi) = d eta(X,Y); T_D is zero or the
/// nearly-Kaehler part 1/3 dF(A Q^{-1}., ., .) on the contact distribution.
TorsionAtPoint contact_characteristic_torsion(const PointFrame& frame,
                                              DistributionTorsion part = DistributionTorsion::none);

/// Dispatch on a chart's preferred torsion.
TorsionAtPoint torsion_for(const PointFrame& frame, TorsionChoice choice,
                           DistributionTorsion part = DistributionTorsion::none);

}  // namespace griemlab
