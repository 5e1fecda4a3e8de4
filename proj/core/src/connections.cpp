#include "griemlab/connections.hpp"

#include "griemlab/algebra.hpp"
#include "griemlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace griemlab {

namespace {

Mat checked_inverse(const Mat& m, const char* what) {
  if (numerical_rank(m) < static_cast<std::size_t>(m.rows()))
    throw NotApplicableError(std::string(what) + " is singular at this point");
  return m.inverse();
}

double scale_of(const Tensor3& t) { return std::max(1.0, max_abs(t)); }

}  // namespace

TorsionAtPoint make_torsion(Tensor3 components) {
  TorsionAtPoint t;
  t.totally_skew = skew23_residual(components) < 1e-10 * scale_of(components);
  t.components = std::move(components);
  return t;
}

Tensor3 contorsion_from_torsion(const Tensor3& torsion) {
  Tensor3 k = torsion + permute(torsion, {2, 0, 1});
  k -= permute(torsion, {1, 2, 0});
  return k * 0.5;
}

ConnectionCoeffs metric_connection_from_torsion(const PointFrame& frame, const TorsionAtPoint& torsion) {
  if (torsion.components.dim() != frame.n) throw ShapeError("torsion dimension does not match the frame");
  return ConnectionCoeffs{frame.levi_civita.lc, raise_last(contorsion_from_torsion(torsion.components), frame.g_inv)};
}

EisenhartConnection eisenhart_connection(const PointFrame& frame) {
  const std::size_t n = frame.n;
  // dG = dg + dF; first-kind symbols from the non-symmetric Koszul expression.
  Tensor3 first_kind(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const double x_gyz = frame.dg[i](j, l) + frame.dF[i](j, l);
        const double y_gzx = frame.dg[j](l, i) + frame.dF[j](l, i);
        const double z_gyx = frame.dg[l](j, i) + frame.dF[l](j, i);
        first_kind(i, j, l) = 0.5 * (x_gyz + y_gzx - z_gyx);
      }
  const Tensor3 total = raise_last(first_kind, frame.g_inv);
  EisenhartConnection e;
  e.coeffs = ConnectionCoeffs{frame.levi_civita.lc, total - frame.levi_civita.lc};
  e.torsion = make_torsion(torsion_of(e.coeffs, frame.g));
  return e;
}

Tensor3 nabla_metric(const PointFrame& frame, const ConnectionCoeffs& coeffs) {
  return covariant_derivative_02(frame.g, frame.dg, coeffs);
}

Tensor3 nabla_form(const PointFrame& frame, const ConnectionCoeffs& coeffs) {
  return covariant_derivative_02(frame.F, frame.dF, coeffs);
}

Tensor3 levi_civita_nabla_form(const PointFrame& frame) { return nabla_form(frame, frame.levi_civita); }

double check_codazzi(const PointFrame& frame, const ConnectionCoeffs& coeffs) {
  const Tensor3 ng = nabla_metric(frame, coeffs);
  // (i, j, k) = (nabla_i g)(j, k); compare (Z,X,Y) with (X,Z,Y).
  return max_abs(ng - permute(ng, {1, 0, 2}));
}

double check_a_torsion(const Tensor3& torsion, const Mat& a) {
  return max_abs(compose(torsion, 0, a) - compose(torsion, 1, a));
}

double check_q_torsion(const Tensor3& torsion, const Mat& q) {
  const Tensor3 first = compose(torsion, 0, q);
  const Tensor3 second = compose(torsion, 1, q);
  const Tensor3 third = compose(torsion, 2, q);
  return std::max(max_abs(first - second), max_abs(second - third));
}

Tensor3 conn2_rhs(const Mat& a, const Tensor3& torsion) {
  const Tensor3 t_xy_az = compose(torsion, 2, a);
  const Tensor3 t_ax = compose(torsion, 0, a);
  const Tensor3 t_ay = compose(torsion, 1, a);
  Tensor3 sum = t_xy_az;                   // T(X,Y,AZ)
  sum += permute(t_xy_az, {2, 0, 1});      // T(Z,X,AY)
  sum += permute(t_ax, {2, 0, 1});         // T(AZ,X,Y)
  sum += permute(t_ax, {2, 1, 0});         // T(AZ,Y,X)
  sum += t_ay;                             // T(X,AY,Z)
  sum += permute(t_ay, {2, 1, 0});         // T(Z,AY,X)
  return sum * -1.0;
}

Tensor3 conn1_rhs(const Mat& a, const Tensor3& torsion) {
  const Tensor3 b = compose(torsion, 2, a);
  return (b + permute(b, {1, 2, 0}) + permute(b, {2, 0, 1})) * -1.0;
}

double residual_conn2(const PointFrame& frame, const Tensor3& torsion) {
  return max_abs(levi_civita_nabla_form(frame) * 2.0 - conn2_rhs(frame.A, torsion));
}

double residual_conn1(const PointFrame& frame, const Tensor3& torsion) {
  return max_abs(exterior_derivative_2form(frame.dF) - conn1_rhs(frame.A, torsion));
}

Tensor3 nijenhuis_form(const PointFrame& frame) { return lower_last(nijenhuis(frame.A, frame.dA), frame.g); }

Tensor3 nijenhuis_q_form(const PointFrame& frame) {
  if (!frame.has_q_jet()) throw NotApplicableError("Q carries no jet on this structure");
  return lower_last(nijenhuis(frame.Q, frame.dQ), frame.g);
}

Tensor3 nijenhuis_from_torsion(const Mat& a, const Tensor3& torsion) {
  const Tensor3 t_ax = compose(torsion, 0, a);
  Tensor3 r = compose(t_ax, 1, a);                // T(AX,AY,Z)
  r += compose(torsion, 2, a * a);                // T(X,Y,A^2 Z)
  r += compose(t_ax, 2, a);                       // T(AX,Y,AZ)
  r += compose(compose(torsion, 1, a), 2, a);     // T(X,AY,AZ)
  return r * -1.0;
}

Tensor3 nijenhuis_q_from_torsion(const Mat& q, const Tensor3& torsion) {
  const Tensor3 t_qx = compose(torsion, 0, q);
  Tensor3 r = compose(compose(torsion, 1, q), 2, q);  // T(X,QY,QZ)
  r += compose(t_qx, 2, q);                           // T(QX,Y,QZ)
  r -= compose(t_qx, 1, q);                           // T(QX,QY,Z)
  r -= compose(torsion, 2, q * q);                    // T(X,Y,Q^2 Z)
  return r;
}

SkewTorsionResiduals residual_tor1_ndf1(const PointFrame& frame, const TorsionAtPoint& torsion, double conn2_tol) {
  SkewTorsionResiduals r;
  const Tensor3& t = torsion.components;
  if (total_skew_residual(t) > 1e-10 * scale_of(t)) {
    r.reason = "torsion is not totally skew-symmetric";
    return r;
  }
  if (residual_conn2(frame, t) > conn2_tol) {
    r.reason = "the metric connection of this torsion does not preserve F";
    return r;
  }
  r.applicable = true;
  const Mat& a = frame.A;
  const Tensor3 df = exterior_derivative_2form(frame.dF);
  const Tensor3 na = nijenhuis_form(frame);
  r.tor1_first = max_abs(compose(compose(t, 0, a), 1, a) + na - compose(df, 2, a));
  r.tor1_second = max_abs(compose(t, 0, a) - levi_civita_nabla_form(frame) * 2.0 + df);
  const Tensor3 na_az = compose(na, 2, a);
  const Tensor3 df_a2z = compose(df, 2, a * a);
  r.ndf1 = max_abs(na_az + permute(na_az, {0, 2, 1}) - df_a2z - permute(df_a2z, {0, 2, 1}));
  return r;
}

TorsionAtPoint nk_torsion(const PointFrame& frame) {
  checked_inverse(frame.A, "A");
  const Mat q_inv = checked_inverse(frame.Q, "Q");
  const Tensor3 df = exterior_derivative_2form(frame.dF);
  TorsionAtPoint t = make_torsion(compose(df, 0, frame.A * q_inv) * (1.0 / 3.0));
  const Tensor3 nf = levi_civita_nabla_form(frame);
  if (max_abs(nf + permute(nf, {1, 0, 2})) > 1e-8)
    t.note = "structure is not weak nearly Kaehler here; conn2 will not hold for this torsion";
  return t;
}

TorsionAtPoint chern_torsion(const PointFrame& frame) {
  checked_inverse(frame.A, "A");
  const Mat q_inv = checked_inverse(frame.Q, "Q");
  const Tensor3 df = exterior_derivative_2form(frame.dF);
  const Tensor3 tq = (compose(df, 0, frame.A) + compose(df, 1, frame.A)) * -0.5;  // T(QX,Y,Z)
  return make_torsion(compose(tq, 0, q_inv));
}

TorsionAtPoint bismut_torsion(const PointFrame& frame) {
  checked_inverse(frame.A, "A");
  const Mat a_inv = -frame.A * checked_inverse(frame.Q, "Q");
  const Tensor3 df = exterior_derivative_2form(frame.dF);
  return make_torsion(compose(compose(compose(df, 0, a_inv), 1, a_inv), 2, frame.A));
}

TorsionAtPoint contact_characteristic_torsion(const PointFrame& frame, DistributionTorsion part) {
  if (!frame.contact) throw NotApplicableError("contact characteristic torsion needs eta and xi");
  const std::size_t n = frame.n;
  const Mat deta = exterior_derivative_1form(frame.deta);
  const Vec& eta = frame.eta();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t(i, j, k) = eta(i) * deta(j, k) + eta(j) * deta(k, i) + eta(k) * deta(i, j);
  if (part == DistributionTorsion::nearly_kahler) {
    const Mat q_inv = checked_inverse(frame.Q, "Q");
    t += compose(exterior_derivative_2form(frame.dF), 0, frame.A * q_inv) * (1.0 / 3.0);
  }
  TorsionAtPoint out = make_torsion(std::move(t));
  out.note = part == DistributionTorsion::none ? "contact-distribution part T_D = 0"
                                               : "contact-distribution part T_D = 1/3 dF(A Q^-1 ., ., .)";
  return out;
}

TorsionAtPoint torsion_for(const PointFrame& frame, TorsionChoice choice, DistributionTorsion part) {
  switch (choice) {
    case TorsionChoice::zero: return make_torsion(Tensor3(frame.n));
    case TorsionChoice::nearly_kahler: return nk_torsion(frame);
    case TorsionChoice::chern: return chern_torsion(frame);
    case TorsionChoice::bismut: return bismut_torsion(frame);
    case TorsionChoice::eisenhart: return eisenhart_connection(frame).torsion;
    case TorsionChoice::contact: return contact_characteristic_torsion(frame, part);
  }
  return make_torsion(Tensor3(frame.n));
}

}  // namespace griemlab
