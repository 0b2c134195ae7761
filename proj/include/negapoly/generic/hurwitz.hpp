#pragma once

// Balanced functions and negapolygamma functions over a generic scalar.
// Derivatives of zeta in z come from the Euler-Maclaurin dual evaluation.

#include "negapoly/generic/special.hpp"

namespace negapoly::generic {

/// A_m(q) = m zeta'(1-m, q).
template <class T>
T balanced_A(int m, const T& q) {
  if (m < 1) throw ArgumentError("balanced_A: m must be >= 1");
  detail::check_positive(q, "balanced_A");
  return T(m) * hurwitz_em(T(1 - m), q).d;
}

/// psi^(-m)(q) = [A_m(q) - H_{m-1} B_m(q)] / m!.
template <class T>
T negapolygamma(int m, const T& q) {
  if (m < 1) throw ArgumentError("negapolygamma: m must be >= 1");
  detail::check_positive(q, "negapolygamma");
  const T a = balanced_A(m, q);
  const T h = harmonic(m - 1).template to<T>();
  return (a - h * bernoulli_polynomial(m, q)) / factorial_as<T>(m);
}

/// Right limit psi^(-1-n)(0) = [zeta'(-n) - H_n B_{n+1}/(n+1)] / n!.
/// For n = 0 this is the regularised value zeta'(0).
template <class T>
T negapolygamma_at_zero(int n) {
  if (n < 0) throw ArgumentError("negapolygamma_at_zero: n must be >= 0");
  const T b = (harmonic(n) * bernoulli_number(n + 1) / Rational(n + 1)).template to<T>();
  return (zeta_prime_neg<T>(n) - b) / factorial_as<T>(n);
}

/// psi^(-1-j)(q) for j >= 0, with q = 0 meaning the right limit.
template <class T>
T negapolygamma_or_limit(int j, const T& q) {
  if (q == 0) return negapolygamma_at_zero<T>(j);
  return negapolygamma(j + 1, q);
}

}  // namespace negapoly::generic
