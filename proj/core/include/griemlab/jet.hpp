#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace griemlab {

/// Largest chart dimension a jet can differentiate against.
inline constexpr std::size_t kMaxJetDim = 16;

/// First-order forward-mode dual number: a value together with its partial
/// derivatives with respect to the chart coordinates.
struct Jet {
  double value = 0.0;
  std::array<double, kMaxJetDim> grad{};

  constexpr Jet() = default;
  constexpr Jet(double constant) : value(constant) {}  // NOLINT: implicit on purpose

  /// The coordinate function x_index evaluated at v.
  static Jet variable(double v, std::size_t index) {
    Jet j(v);
    j.grad[index] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    value += o.value;
    for (std::size_t i = 0; i < kMaxJetDim; ++i) grad[i] += o.grad[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value -= o.value;
    for (std::size_t i = 0; i < kMaxJetDim; ++i) grad[i] -= o.grad[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    for (std::size_t i = 0; i < kMaxJetDim; ++i) grad[i] = grad[i] * o.value + value * o.grad[i];
    value *= o.value;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    const double inv = 1.0 / o.value;
    const double q = value * inv;
    for (std::size_t i = 0; i < kMaxJetDim; ++i) grad[i] = (grad[i] - q * o.grad[i]) * inv;
    value = q;
    return *this;
  }
  Jet& operator*=(double s) {
    value *= s;
    for (auto& g : grad) g *= s;
    return *this;
  }
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }
inline Jet operator-(Jet a) { return a *= -1.0; }

namespace detail {
// f(a) with f'(a) = slope.
inline Jet chain(const Jet& a, double f, double slope) {
  Jet r(f);
  for (std::size_t i = 0; i < kMaxJetDim; ++i) r.grad[i] = slope * a.grad[i];
  return r;
}
}  // namespace detail

inline Jet sin(const Jet& a) { return detail::chain(a, std::sin(a.value), std::cos(a.value)); }
inline Jet cos(const Jet& a) { return detail::chain(a, std::cos(a.value), -std::sin(a.value)); }
inline Jet tan(const Jet& a) {
  const double t = std::tan(a.value);
  return detail::chain(a, t, 1.0 + t * t);
}
inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value);
  return detail::chain(a, e, e);
}
inline Jet log(const Jet& a) { return detail::chain(a, std::log(a.value), 1.0 / a.value); }
inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.value);
  return detail::chain(a, s, 0.5 / s);
}
inline Jet tanh(const Jet& a) {
  const double t = std::tanh(a.value);
  return detail::chain(a, t, 1.0 - t * t);
}

inline Jet pow(const Jet& a, double p) {
  if (p == 0.0) return Jet(1.0);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  const double f = std::pow(a.value, p);
  return detail::chain(a, f, p * std::pow(a.value, p - 1.0));
}

/// General power; the base must be positive unless the exponent is constant.
inline Jet pow(const Jet& a, const Jet& b) {
  bool constant_exponent = true;
  for (double g : b.grad) constant_exponent = constant_exponent && g == 0.0;
  if (constant_exponent) return pow(a, b.value);
  return exp(b * log(a));
}

}  // namespace griemlab
