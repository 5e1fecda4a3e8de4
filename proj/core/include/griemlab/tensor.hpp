#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace griemlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Dense three-index array of coordinate components.
///
/// The meaning of the slots is fixed by the producer. Two layouts are used
/// throughout the library:
///  - (0,3)-tensors B(X,Y,Z): (i, j, k) = B(d_i, d_j, d_k);
///  - (1,2)-tensors B(X,Y):   (i, j, k) = k-th component of B(d_i, d_j).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

  std::span<const double> data() const { return data_; }

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(double s);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Max-norm over all components.
double max_abs(const Tensor3& t);
double max_abs(const Mat& m);

/// Insert an endomorphism into one slot: result(.., s, ..) = sum_m P(m, s) t(.., m, ..).
/// For a (0,3)-tensor this is B(.., P X, ..).
Tensor3 compose(const Tensor3& t, int slot, const Mat& p);

/// result(i0, i1, i2) = t(i[perm[0]], i[perm[1]], i[perm[2]]).
/// E.g. perm {2, 0, 1} turns B(X,Y,Z) into C(X,Y,Z) = B(Z,X,Y).
Tensor3 permute(const Tensor3& t, std::array<int, 3> perm);

/// (1,2) -> (0,3): result(i,j,l) = g_lc t(i,j,c).
Tensor3 lower_last(const Tensor3& t, const Mat& g);
/// (0,3) -> (1,2): result(i,j,c) = g^cl t(i,j,l).
Tensor3 raise_last(const Tensor3& t, const Mat& g_inv);

/// max |t(i,j,k) + t(j,i,k)|.
double skew12_residual(const Tensor3& t);
/// max |t(i,j,k) + t(i,k,j)|.
double skew23_residual(const Tensor3& t);
/// Largest violation of total skew-symmetry.
double total_skew_residual(const Tensor3& t);

/// Alternating part with the convention alt(B)(X,Y,Z) = (1/6) sum sign(s) B(s(X,Y,Z)).
Tensor3 alternate(const Tensor3& t);

/// Lowered vector-valued pairing helper: result(i,j,k) = u_i v_j w_k.
Tensor3 outer(const Vec& u, const Vec& v, const Vec& w);

/// [a, b] = ab - ba.
inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

}  // namespace griemlab
