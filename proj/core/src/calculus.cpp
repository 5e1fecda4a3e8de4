#include "griemlab/calculus.hpp"

#include "griemlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace griemlab {

namespace {

std::size_t dim_of(const Mat& m) { return static_cast<std::size_t>(m.rows()); }

void require_jet(std::size_t n, std::size_t partial_count, const char* what) {
  if (partial_count != n) throw ShapeError(std::string(what) + ": number of partials does not match dimension");
}

}  // namespace

ConnectionCoeffs levi_civita(const Mat& g, const Mat& g_inv, std::span<const Mat> dg) {
  const std::size_t n = dim_of(g);
  require_jet(n, dg.size(), "levi_civita");
  Tensor3 first_kind(n);  // Gamma_{ij,l}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        first_kind(i, j, l) = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
  ConnectionCoeffs c{raise_last(first_kind, g_inv), Tensor3(n)};
  // Exact symmetry in the lower indices.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double s = 0.5 * (c.lc(i, j, k) + c.lc(j, i, k));
        c.lc(i, j, k) = s;
        c.lc(j, i, k) = s;
      }
  return c;
}

ConnectionCoeffs levi_civita(const ChartManifold& manifold, std::span<const double> p) {
  const FieldJet g = evaluate_jet(manifold, FieldSelector::g, p);
  return levi_civita(g.value, g.value.inverse(), g.partials);
}

Tensor3 covariant_derivative_02(const Mat& b, std::span<const Mat> db, const ConnectionCoeffs& coeffs) {
  const std::size_t n = dim_of(b);
  require_jet(n, db.size(), "covariant_derivative_02");
  if (coeffs.lc.dim() != n) throw ShapeError("covariant_derivative_02: connection dimension mismatch");
  const Tensor3 c = coeffs.total();
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = db[i](j, k);
        for (std::size_t m = 0; m < n; ++m) s -= c(i, j, m) * b(m, k) + c(i, k, m) * b(j, m);
        r(i, j, k) = s;
      }
  return r;
}

Tensor3 covariant_derivative_11(const Mat& p, std::span<const Mat> dp, const ConnectionCoeffs& coeffs) {
  const std::size_t n = dim_of(p);
  require_jet(n, dp.size(), "covariant_derivative_11");
  if (coeffs.lc.dim() != n) throw ShapeError("covariant_derivative_11: connection dimension mismatch");
  const Tensor3 c = coeffs.total();
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = dp[i](k, j);
        for (std::size_t m = 0; m < n; ++m) s += c(i, m, k) * p(m, j) - c(i, j, m) * p(k, m);
        r(i, j, k) = s;
      }
  return r;
}

Mat covariant_derivative_vector(const Vec& v, std::span<const Vec> dv, const ConnectionCoeffs& coeffs) {
  const std::size_t n = static_cast<std::size_t>(v.size());
  require_jet(n, dv.size(), "covariant_derivative_vector");
  const Tensor3 c = coeffs.total();
  Mat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double s = dv[i](k);
      for (std::size_t m = 0; m < n; ++m) s += c(i, m, k) * v(m);
      r(i, k) = s;
    }
  return r;
}

Mat covariant_derivative_covector(const Vec& w, std::span<const Vec> dw, const ConnectionCoeffs& coeffs) {
  const std::size_t n = static_cast<std::size_t>(w.size());
  require_jet(n, dw.size(), "covariant_derivative_covector");
  const Tensor3 c = coeffs.total();
  Mat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = dw[i](j);
      for (std::size_t m = 0; m < n; ++m) s -= c(i, j, m) * w(m);
      r(i, j) = s;
    }
  return r;
}

Tensor3 exterior_derivative_2form(std::span<const Mat> dF) {
  const std::size_t n = dF.size();
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = dF[i](j, k) + dF[j](k, i) + dF[k](i, j);
  return r;
}

Mat exterior_derivative_1form(std::span<const Vec> deta) {
  const std::size_t n = deta.size();
  Mat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = deta[i](j) - deta[j](i);
  return r;
}

Tensor3 nijenhuis(const Mat& p, std::span<const Mat> dp) {
  const std::size_t n = dim_of(p);
  if (dp.size() != n) throw NotApplicableError("nijenhuis: the endomorphism carries no jet");
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
          // [P d_i, P d_j] and the two P[., .] terms; coordinate brackets vanish.
          s += p(a, i) * dp[a](c, j) - p(a, j) * dp[a](c, i);
          s += p(c, a) * (dp[j](a, i) - dp[i](a, j));
        }
        r(i, j, c) = s;
        r(j, i, c) = -s;
      }
  return r;
}

double metric_compatibility_residual(const Mat& g, std::span<const Mat> dg, const ConnectionCoeffs& coeffs) {
  return max_abs(covariant_derivative_02(g, dg, coeffs));
}

Tensor3 torsion_of(const ConnectionCoeffs& coeffs, const Mat& g) {
  const Tensor3 c = coeffs.total();
  return lower_last(c - permute(c, {1, 0, 2}), g);
}

}  // namespace griemlab
