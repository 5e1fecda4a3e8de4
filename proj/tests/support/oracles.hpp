#pragma once

// Reference computations that avoid the library's AD and Koszul code paths:
// finite differences of plain field values, closed forms, octonions by the
// Cayley-Dickson doubling.

#include "griemlab/chart.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Mat field_value(const griemlab::ChartManifold& m, griemlab::FieldSelector sel, const std::vector<double>& p) {
  std::vector<griemlab::Jet> x(p.begin(), p.end());
  if (sel == griemlab::FieldSelector::eta || sel == griemlab::FieldSelector::xi) {
    const auto v = m.eval_vector(sel, x);
    Vec out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].value;
    return out;
  }
  const auto j = m.eval_matrix(sel, x);
  Mat out(static_cast<Eigen::Index>(j.rows), static_cast<Eigen::Index>(j.cols));
  for (std::size_t r = 0; r < j.rows; ++r)
    for (std::size_t c = 0; c < j.cols; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j(r, c).value;
  return out;
}

// Fourth-order central differences of a field.
inline std::vector<Mat> fd_partials(const griemlab::ChartManifold& m, griemlab::FieldSelector sel,
                                    const std::vector<double>& p, double h = 1e-3) {
  std::vector<Mat> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto at = [&](double s) {
      auto q = p;
      q[a] += s * h;
      return field_value(m, sel, q);
    };
    out.push_back((at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h));
  }
  return out;
}

// gamma[i][j](k) = Gamma^k_ij from 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
inline std::vector<std::vector<Vec>> christoffel(const Mat& g, const std::vector<Mat>& dg) {
  const Mat gi = g.inverse();
  const auto n = g.rows();
  std::vector<std::vector<Vec>> out(static_cast<std::size_t>(n), std::vector<Vec>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec low(n);
      for (Eigen::Index l = 0; l < n; ++l)
        low(l) = 0.5 * (dg[static_cast<std::size_t>(i)](j, l) + dg[static_cast<std::size_t>(j)](i, l) -
                        dg[static_cast<std::size_t>(l)](i, j));
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gi * low;
    }
  return out;
}

// Quaternions as (w, x, y, z); octonions as quaternion pairs with
// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
using Quat = std::array<double, 4>;
using Oct = std::array<double, 8>;

inline Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
inline Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }
inline Quat qsub(const Quat& a, const Quat& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
inline Quat qadd(const Quat& a, const Quat& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

inline Oct omul(const Oct& x, const Oct& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quat hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

// Imaginary part of the product of two imaginary octonions given in R^7.
inline Vec cross7(const Vec& u, const Vec& v) {
  Oct x{}, y{};
  for (int i = 0; i < 7; ++i) {
    x[i + 1] = u(i);
    y[i + 1] = v(i);
  }
  const Oct p = omul(x, y);
  Vec out(7);
  for (int i = 0; i < 7; ++i) out(i) = p[i + 1];
  return out;
}

// Unit sphere point and tangent frame d p / d u_i of the stereographic chart from the north pole.
struct SpherePoint {
  Vec p;
  std::vector<Vec> frame;
};

inline SpherePoint inverse_stereographic(const std::vector<double>& u) {
  const std::size_t n = u.size();
  auto embed = [&](const std::vector<double>& w) {
    double r2 = 0.0;
    for (double c : w) r2 += c * c;
    Vec p(static_cast<Eigen::Index>(n + 1));
    for (std::size_t i = 0; i < n; ++i) p(static_cast<Eigen::Index>(i)) = 2.0 * w[i] / (1.0 + r2);
    p(static_cast<Eigen::Index>(n)) = (r2 - 1.0) / (1.0 + r2);
    return p;
  };
  SpherePoint s{embed(u), {}};
  const double h = 1e-4;
  for (std::size_t i = 0; i < n; ++i) {
    auto at = [&](double t) {
      auto w = u;
      w[i] += t * h;
      return embed(w);
    };
    s.frame.push_back((at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h));
  }
  return s;
}

// g-orthonormal basis from Gram-Schmidt on random vectors, as the columns of E.
inline Mat random_g_orthonormal(const Mat& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto n = g.rows();
  Mat e(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
    for (Eigen::Index k = 0; k < c; ++k) v -= (e.col(k).dot(g * v)) * e.col(k);
    e.col(c) = v / std::sqrt(v.dot(g * v));
  }
  return e;
}

inline Mat random_spd(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = normal(rng);
  return m * m.transpose() + Mat::Identity(m.rows(), m.cols());
}

}  // namespace oracle
