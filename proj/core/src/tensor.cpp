#include "griemlab/tensor.hpp"

#include "griemlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace griemlab {

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (o.n_ != n_) throw ShapeError("Tensor3 dimension mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (o.n_ != n_) throw ShapeError("Tensor3 dimension mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double max_abs(const Tensor3& t) {
  double m = 0.0;
  for (double v : t.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Tensor3 compose(const Tensor3& t, int slot, const Mat& p) {
  const std::size_t n = t.dim();
  if (static_cast<std::size_t>(p.rows()) != n || static_cast<std::size_t>(p.cols()) != n)
    throw ShapeError("compose: endomorphism does not match tensor dimension");
  if (slot < 0 || slot > 2) throw ShapeError("compose: slot must be 0, 1 or 2");
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
          switch (slot) {
            case 0: s += p(m, i) * t(m, j, k); break;
            case 1: s += p(m, j) * t(i, m, k); break;
            default: s += p(m, k) * t(i, j, m); break;
          }
        }
        r(i, j, k) = s;
      }
  return r;
}

Tensor3 permute(const Tensor3& t, std::array<int, 3> perm) {
  const std::size_t n = t.dim();
  Tensor3 r(n);
  std::array<std::size_t, 3> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        r(idx[0], idx[1], idx[2]) = t(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
  return r;
}

Tensor3 lower_last(const Tensor3& t, const Mat& g) { return compose(t, 2, g); }

Tensor3 raise_last(const Tensor3& t, const Mat& g_inv) {
  // g^{cl} is symmetric, so raising is the same contraction as lowering.
  return compose(t, 2, g_inv);
}

double skew12_residual(const Tensor3& t) { return max_abs(t + permute(t, {1, 0, 2})); }

double skew23_residual(const Tensor3& t) { return max_abs(t + permute(t, {0, 2, 1})); }

double total_skew_residual(const Tensor3& t) { return std::max(skew12_residual(t), skew23_residual(t)); }

Tensor3 alternate(const Tensor3& t) {
  Tensor3 r = t + permute(t, {1, 2, 0}) + permute(t, {2, 0, 1});
  r -= permute(t, {1, 0, 2});
  r -= permute(t, {0, 2, 1});
  r -= permute(t, {2, 1, 0});
  return r * (1.0 / 6.0);
}

Tensor3 outer(const Vec& u, const Vec& v, const Vec& w) {
  const std::size_t n = static_cast<std::size_t>(u.size());
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = u(i) * v(j) * w(k);
  return r;
}

}  // namespace griemlab
