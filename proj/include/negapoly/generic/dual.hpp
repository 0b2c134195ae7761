#pragma once

// First-order forward-mode dual numbers: value plus derivative with respect
// to a single parameter. Used to differentiate the Euler-Maclaurin expansion
// of the Hurwitz zeta function term by term in z.

#include <cmath>
#include <utility>

#include "negapoly/scalar.hpp"

namespace negapoly::generic {

template <class T>
struct Dual {
  T v{0};
  T d{0};

  Dual() = default;
  Dual(T value) : v(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

  static Dual variable(T value) { return Dual(std::move(value), T(1)); }

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    T inv = T(1) / o.v;
    v *= inv;
    d = (d - v * o.d) * inv;
    return *this;
  }
  Dual& operator*=(const T& s) { v *= s; d *= s; return *this; }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator*(Dual a, const T& s) { return a *= s; }
  friend Dual operator*(const T& s, Dual a) { return a *= s; }
  Dual operator-() const { return Dual(-v, -d); }
};

/// base^(-s) for real base > 0 given log(base), with s a dual number.
template <class T>
Dual<T> pow_neg(const T& log_base, const Dual<T>& s) {
  using std::exp;
  using boost::multiprecision::exp;
  T value = exp(-s.v * log_base);
  return Dual<T>(value, -log_base * value * s.d);
}

}  // namespace negapoly::generic
