#pragma once

#include "griemlab/chart.hpp"
#include "griemlab/tensor.hpp"

#include <span>
#include <vector>

namespace griemlab {

/// Connection coefficients at a point, split as Levi-Civita part plus
/// contorsion: nabla_{d_i} d_j = (lc(i,j,k) + contorsion(i,j,k)) d_k.
struct ConnectionCoeffs {
  Tensor3 lc;
  Tensor3 contorsion;

  Tensor3 total() const { return lc + contorsion; }
};

/// Christoffel symbols from the Koszul formula on coordinate fields.
ConnectionCoeffs levi_civita(const Mat& g, const Mat& g_inv, std::span<const Mat> dg);
ConnectionCoeffs levi_civita(const ChartManifold& manifold, std::span<const double> p);

/// (nabla_i B)_{jk} of a (0,2)-field, stored as (i, j, k).
Tensor3 covariant_derivative_02(const Mat& b, std::span<const Mat> db, const ConnectionCoeffs& coeffs);

/// (nabla_i P)(d_j) of a (1,1)-field, stored (1,2)-style: (i, j, k) = k-th component.
Tensor3 covariant_derivative_11(const Mat& p, std::span<const Mat> dp, const ConnectionCoeffs& coeffs);

/// (nabla_i v)^k of a vector field, as an n x n matrix (i, k).
Mat covariant_derivative_vector(const Vec& v, std::span<const Vec> dv, const ConnectionCoeffs& coeffs);

/// (nabla_i w)_j of a covector field, as an n x n matrix (i, j).
Mat covariant_derivative_covector(const Vec& w, std::span<const Vec> dw, const ConnectionCoeffs& coeffs);

/// dF(X,Y,Z) = X F(Y,Z) + Y F(Z,X) + Z F(X,Y) on coordinate fields (no factor 1/3).
Tensor3 exterior_derivative_2form(std::span<const Mat> dF);

/// d eta(X,Y) = X eta(Y) - Y eta(X) on coordinate fields (no factor 1/2).
Mat exterior_derivative_1form(std::span<const Vec> deta);

/// Nijenhuis tensor N_P(X,Y) = [PX,PY] + P^2[X,Y] - P[PX,Y] - P[X,PY] on
/// coordinate fields, (1,2)-layout: (i, j, c) = c-th component of N_P(d_i, d_j).
Tensor3 nijenhuis(const Mat& p, std::span<const Mat> dp);

/// max over (i,j,k) of |(nabla_i g)_{jk}|.
double metric_compatibility_residual(const Mat& g, std::span<const Mat> dg, const ConnectionCoeffs& coeffs);

/// T(X,Y,Z) = g(nabla_X Y - nabla_Y X, Z) of a set of coefficients.
Tensor3 torsion_of(const ConnectionCoeffs& coeffs, const Mat& g);

}  // namespace griemlab
