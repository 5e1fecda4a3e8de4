#include "griemlab/structures.hpp"

#include "griemlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace griemlab {

namespace {

void put_max(std::map<std::string, double>& m, const std::string& key, double v) {
  auto [it, inserted] = m.emplace(key, v);
  if (!inserted) it->second = std::max(it->second, v);
}

double self_adjoint_residual(const Mat& g, const Mat& q) {
  const Mat gq = g * q;
  return max_abs(gq - gq.transpose());
}

}  // namespace

double StructureReport::max_residual() const {
  double m = 0.0;
  for (const auto& [_, v] : axiom_residuals) m = std::max(m, v);
  return m;
}

void StructureReport::absorb(const StructureReport& other) {
  for (const auto& [k, v] : other.axiom_residuals) put_max(axiom_residuals, k, v);
  rank_a = points == 0 ? other.rank_a : std::min(rank_a, other.rank_a);
  points += other.points;
}

StructureReport validate_at(const PointFrame& f) {
  StructureReport r;
  r.kind = f.kind;
  r.points = 1;
  r.rank_a = numerical_rank(f.A);
  auto& res = r.axiom_residuals;
  const Mat& g = f.g;
  const Mat& a = f.A;
  const Mat& q = f.Q;

  res["g-symmetric"] = max_abs(g - g.transpose());
  res["F-skew"] = max_abs(f.F + f.F.transpose());
  // g(A d_i, d_j) - F_ij
  res["gA-F"] = max_abs(a.transpose() * g - f.F);
  res["A-skew-adjoint"] = max_abs(g * a + (g * a).transpose());

  switch (f.kind) {
    case StructureKind::generic: break;
    case StructureKind::weak_hermitian:
      res["A2+Q"] = max_abs(a * a + q);
      res["g(AX,AY)-g(QX,Y)"] = max_abs(a.transpose() * g * a - g * q);
      res["Q-self-adjoint"] = self_adjoint_residual(g, q);
      res["[A,Q]"] = max_abs(commutator(a, q));
      res["rank-A-deficit"] = static_cast<double>(f.n - r.rank_a);
      break;
    case StructureKind::weak_contact:
    case StructureKind::para: {
      const bool para = f.kind == StructureKind::para;
      res["Q-self-adjoint"] = self_adjoint_residual(g, q);
      res["[A,Q]"] = max_abs(commutator(a, q));
      if (!f.contact) {
        // weak almost para-Hermitian: A^2 = Q, g(AX,AY) = -g(QX,Y)
        res["A2-Q"] = max_abs(a * a - q);
        res["g(AX,AY)+g(QX,Y)"] = max_abs(a.transpose() * g * a + g * q);
        res["rank-A-deficit"] = static_cast<double>(f.n - r.rank_a);
        break;
      }
      const Vec& eta = f.eta();
      const Vec& xi = f.xi();
      const Mat eta_xi = xi * eta.transpose();  // X -> eta(X) xi
      const Mat eta_eta = eta * eta.transpose();
      if (para) {
        res["A2-Q+eta*xi"] = max_abs(a * a - q + eta_xi);
        res["g(AX,AY)+g(QX,Y)-eta*eta"] = max_abs(a.transpose() * g * a + g * q - eta_eta);
      } else {
        res["A2+Q-eta*xi"] = max_abs(a * a + q - eta_xi);
        res["g(AX,AY)-g(QX,Y)+eta*eta"] = max_abs(a.transpose() * g * a - g * q + eta_eta);
      }
      res["Axi"] = (a * xi).cwiseAbs().maxCoeff();
      res["Qxi-xi"] = (q * xi - xi).cwiseAbs().maxCoeff();
      res["eta(xi)-1"] = std::abs(eta.dot(xi) - 1.0);
      res["eta-g(xi,.)"] = (g * xi - eta).cwiseAbs().maxCoeff();
      res["F(xi,X)"] = (f.F.transpose() * xi).cwiseAbs().maxCoeff();
      res["rank-A-deficit"] = std::abs(static_cast<double>(f.n - 1) - static_cast<double>(r.rank_a));
      break;
    }
    case StructureKind::weak_f: {
      res["A3+AQ"] = max_abs(a * a * a + a * q);
      res["g(AX,A2Y)-g(QX,AY)"] = max_abs(a.transpose() * g * a * a - q.transpose() * g * a);
      res["Q-self-adjoint"] = self_adjoint_residual(g, q);
      res["[A,Q]"] = max_abs(commutator(a, q));
      break;
    }
  }
  return r;
}

StructureReport validate_structure(const ChartManifold& manifold, std::span<const std::vector<double>> points,
                                   double tol) {
  StructureReport total;
  total.kind = manifold.kind();
  bool weak_kahler = true;
  bool nearly = true;
  bool integrable = true;
  for (const auto& p : points) {
    const PointFrame f = make_frame(manifold, p);
    total.absorb(validate_at(f));
    const Tensor3 nf = levi_civita_nabla_form(f);
    weak_kahler = weak_kahler && max_abs(nf) < tol;
    nearly = nearly && max_abs(nf + permute(nf, {1, 0, 2})) < tol;
    integrable = integrable && max_abs(nijenhuis_form(f)) < tol;
  }
  total.kind = manifold.kind();
  const bool has_points = !points.empty();
  total.weak_kahler = has_points && weak_kahler;
  total.weak_nearly_kahler = has_points && nearly;
  total.integrable = has_points && integrable;
  return total;
}

NearlyKahlerDefect nearly_kahler_defect(const PointFrame& f, std::span<const Vec> probes) {
  NearlyKahlerDefect d;
  const Tensor3 na = covariant_derivative_11(f.A, f.dA, f.levi_civita);  // (i, j, k): (nabla_i A)(d_j)^k
  d.nabla_a = max_abs(na);
  const Tensor3 nf = levi_civita_nabla_form(f);
  d.symmetric_part = max_abs(nf + permute(nf, {1, 0, 2}));
  const std::size_t n = f.n;
  for (const Vec& x : probes) {
    // unit with respect to g
    const double norm = std::sqrt(x.dot(f.g * x));
    const Vec u = x / norm;
    Vec v = Vec::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) v(k) += u(i) * u(j) * na(i, j, k);
    d.defect = std::max(d.defect, v.cwiseAbs().maxCoeff());
  }
  return d;
}

namespace {

Tensor3 deta_times_eta(const Mat& deta, const Vec& eta) {
  const std::size_t n = static_cast<std::size_t>(eta.size());
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = deta(i, j) * eta(k);
  return t;
}

void require_contact(const PointFrame& f) {
  if (!f.contact) throw NotApplicableError("contact Nijenhuis tensors need eta and xi");
}

}  // namespace

Tensor3 contact_nijenhuis(const PointFrame& f, ContactVariant variant) {
  require_contact(f);
  const Tensor3 term = deta_times_eta(exterior_derivative_1form(f.deta), f.eta());
  const Tensor3 na = nijenhuis_form(f);
  return variant == ContactVariant::wac ? na + term : na - term;
}

Tensor3 contact_nijenhuis_from_torsion(const PointFrame& f, const Tensor3& torsion, ContactVariant variant) {
  require_contact(f);
  const std::size_t n = f.n;
  Mat deta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += torsion(i, j, k) * f.xi()(k);
      deta(i, j) = s;
    }
  const Tensor3 term = deta_times_eta(deta, f.eta());
  const Tensor3 na = nijenhuis_from_torsion(f.A, torsion);
  return variant == ContactVariant::wac ? na + term : na - term;
}

Tensor3 contact_nijenhuis_rhs(const PointFrame& f, const Tensor3& torsion, ContactVariant variant) {
  const Mat& a = f.A;
  const Tensor3 t_ax = compose(torsion, 0, a);
  Tensor3 r = compose(torsion, 2, f.Q);
  if (variant == ContactVariant::wapc) r *= -1.0;
  r -= compose(t_ax, 1, a);
  r -= compose(t_ax, 2, a);
  r -= compose(compose(torsion, 1, a), 2, a);
  return r;
}

ReebResiduals reeb_checks(const PointFrame& f, const ConnectionCoeffs& coeffs) {
  if (!f.contact) throw NotApplicableError("Reeb checks need contact data");
  ReebResiduals r;
  const Vec& xi = f.xi();
  const Mat lc_xi = covariant_derivative_vector(xi, f.dxi, f.levi_civita);  // (i, k)
  r.geodesic = (lc_xi.transpose() * xi).cwiseAbs().maxCoeff();
  const Mat lowered = lc_xi * f.g;  // (i, j) = g(nabla^g_i xi, d_j)
  r.killing = max_abs(lowered + lowered.transpose());
  r.nabla_xi = max_abs(covariant_derivative_vector(xi, f.dxi, coeffs));
  r.nabla_eta = max_abs(covariant_derivative_covector(f.eta(), f.deta, coeffs));
  if (f.has_q_jet()) r.nabla_q = max_abs(covariant_derivative_11(f.Q, f.dQ, coeffs));
  const Mat deta = exterior_derivative_1form(f.deta);
  r.deta_xi = (deta * xi).cwiseAbs().maxCoeff();
  return r;
}

FStructureReport f_structure_checks(const PointFrame& f) {
  FStructureReport r;
  const Mat& a = f.A;
  const Mat& q = f.Q;
  const Mat& g = f.g;
  const bool para = f.kind == StructureKind::para;
  const Mat a2 = a * a;
  const Mat a3 = a2 * a;
  if (para) {
    r.residuals["A3-AQ"] = max_abs(a3 - a * q);
    r.residuals["g(AX,A2Y)+g(QX,AY)"] = max_abs(a.transpose() * g * a2 + q.transpose() * g * a);
  } else {
    r.residuals["A3+AQ"] = max_abs(a3 + a * q);
    r.residuals["g(AX,A2Y)-g(QX,AY)"] = max_abs(a.transpose() * g * a2 - q.transpose() * g * a);
  }
  r.residuals["[A,Q]"] = max_abs(commutator(a, q));
  r.dim_distribution = numerical_rank(a);
  r.dim_kernel = f.n - r.dim_distribution;
  return r;
}

}  // namespace griemlab
