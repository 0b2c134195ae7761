#pragma once

// Scalar-generic implementations of the classical special functions.
// Instantiated for double and Extended; the public double API in
// negapoly/special.hpp evaluates through Extended and rounds once.

#include <cmath>
#include <string>

#include "negapoly/combinatorics.hpp"
#include "negapoly/generic/dual.hpp"
#include "negapoly/scalar.hpp"

namespace negapoly::generic {

namespace detail {

/// Argument beyond which the asymptotic (Stirling-type) series reach full
/// precision: the smallest series term is about exp(-2 pi x).
template <class T>
T asymptotic_threshold(int extra) {
  return T(0.4 * decimal_digits<T>() + 4 + extra);
}

/// Number of Bernoulli corrections carried by the Euler-Maclaurin tail:
/// (2 pi)^(2J) must exceed 10^digits.
template <class T>
int em_corrections() {
  return static_cast<int>(0.63 * (decimal_digits<T>() + 2)) + 2;
}

template <class T>
T abs_value(const T& x) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x);
}

template <class T>
T ln(const T& x) {
  using std::log;
  using boost::multiprecision::log;
  return log(x);
}

template <class T>
T expo(const T& x) {
  using std::exp;
  using boost::multiprecision::exp;
  return exp(x);
}

template <class T>
T power(const T& x, const T& y) {
  using std::pow;
  using boost::multiprecision::pow;
  return pow(x, y);
}

template <class T>
T ln_sqrt_2pi() {
  return (ln(T(2)) + ln(pi<T>())) / 2;
}

template <class T>
T euler_gamma() {
  return from_string<T>("0.57721566490153286060651209008240243104215933593992359880577");
}

template <class T>
void check_positive(const T& q, const char* what) {
  if (!is_finite(q) || !(q > 0)) throw DomainError(std::string(what) + ": argument must be finite and > 0");
}

}  // namespace detail

/// B_m(q) = sum_k C(m,k) B_k q^(m-k), evaluated by Horner's rule in q.
template <class T>
T bernoulli_polynomial(int m, const T& q) {
  if (m < 0) throw ArgumentError("bernoulli_polynomial: m must be >= 0");
  const auto& b = bernoulli_table<T>();
  if (m >= kBernoulliTableSize) throw ArgumentError("bernoulli_polynomial: m too large");
  // coefficient of q^(m-k) is C(m,k) B_k; Horner over descending powers of q
  T acc = 0;
  T c = 1;  // C(m, k)
  for (int k = 0; k <= m; ++k) {
    acc = acc * q + c * b[k];
    c = c * (m - k) / (k + 1);
  }
  return acc;
}

/// Rising factorial z (z+1) ... (z+n-1).
template <class T>
T pochhammer(const T& z, int n) {
  if (n < 0) throw ArgumentError("pochhammer: n must be >= 0");
  T r = 1;
  for (int i = 0; i < n; ++i) r *= (z + i);
  return r;
}

template <class T>
T log_gamma(const T& q) {
  detail::check_positive(q, "log_gamma");
  if (q == 1 || q == 2) return T(0);
  const T x0 = detail::asymptotic_threshold<T>(0);
  T x = q;
  T shift = 0;
  T prod = 1;
  while (x < x0) {
    prod *= x;
    x += 1;
  }
  shift = detail::ln(prod);
  const auto& b = bernoulli_table<T>();
  T result = (x - T(0.5)) * detail::ln(x) - x + detail::ln_sqrt_2pi<T>();
  const T x2 = x * x;
  T xpow = x;  // x^(2j-1)
  for (int j = 1; 2 * j < kBernoulliTableSize; ++j) {
    T term = b[2 * j] / (T(2 * j) * T(2 * j - 1) * xpow);
    result += term;
    if (detail::abs_value(term) < epsilon<T>() * detail::abs_value(result)) break;
    xpow *= x2;
  }
  return result - shift;
}

template <class T>
T digamma(const T& q) {
  detail::check_positive(q, "digamma");
  const T x0 = detail::asymptotic_threshold<T>(0);
  T x = q;
  CompensatedSum<T> shift;
  while (x < x0) {
    shift.add(T(1) / x);
    x += 1;
  }
  const auto& b = bernoulli_table<T>();
  T result = detail::ln(x) - T(1) / (2 * x);
  const T x2 = x * x;
  T xpow = x2;
  for (int j = 1; 2 * j < kBernoulliTableSize; ++j) {
    T term = b[2 * j] / (T(2 * j) * xpow);
    result -= term;
    if (detail::abs_value(term) < epsilon<T>() * detail::abs_value(result)) break;
    xpow *= x2;
  }
  return result - shift.value();
}

/// psi^(m)(q) for m >= 1: upward recurrence to the asymptotic region, then
/// (-1)^(m+1) [ (m-1)!/x^m + m!/(2 x^(m+1)) + sum_j B_2j (2j+m-1)!/((2j)! x^(2j+m)) ].
template <class T>
T polygamma(int m, const T& q) {
  if (m < 1) throw ArgumentError("polygamma: order must be >= 1 (use digamma for m = 0)");
  detail::check_positive(q, "polygamma");
  const T x0 = detail::asymptotic_threshold<T>(m);
  T x = q;
  CompensatedSum<T> shift;
  while (x < x0) {
    shift.add(detail::power(x, T(-(m + 1))));
    x += 1;
  }
  const T mfact = factorial_as<T>(m);
  const auto& b = bernoulli_table<T>();
  const T xm = detail::power(x, T(m));
  T asym = factorial_as<T>(m - 1) / xm + mfact / (2 * xm * x);
  const T x2 = x * x;
  T xpow = xm * x2;
  for (int j = 1; 2 * j < kBernoulliTableSize; ++j) {
    T coeff = 1;  // (2j+m-1)!/(2j)!
    for (int i = 2 * j + 1; i <= 2 * j + m - 1; ++i) coeff *= i;
    T term = b[2 * j] * coeff / xpow;
    asym += term;
    if (detail::abs_value(term) < epsilon<T>() * detail::abs_value(asym)) break;
    xpow *= x2;
  }
  T value = asym + mfact * shift.value();
  return (m % 2 == 1) ? value : T(-value);
}

/// Euler-Maclaurin evaluation of zeta(s, q) together with its s-derivative.
///
/// zeta(s,q) = sum_{n<N} (n+q)^-s + a^(1-s)/(s-1) + a^-s/2
///             + sum_{j=1}^{J} B_2j/(2j)! (s)_{2j-1} a^(1-s-2j),   a = N + q.
/// The derivative is carried through every term as a dual number, so the
/// Pochhammer factors that vanish at nonpositive integers s still contribute
/// their derivative. Valid for every real s != 1.
template <class T>
Dual<T> hurwitz_em(const T& s, const T& q) {
  detail::check_positive(q, "hurwitz_zeta");
  if (s == 1) throw PoleError("hurwitz_zeta: pole at z = 1");
  const int corrections = detail::em_corrections<T>();
  const T a_min = detail::abs_value(s) + 2 * corrections;
  int n_terms = 0;
  if (q < a_min) {
    using std::ceil;
    using boost::multiprecision::ceil;
    n_terms = static_cast<int>(to_double(ceil(a_min - q)));
  }
  const Dual<T> sd = Dual<T>::variable(s);

  CompensatedSum<T> sum_v;
  CompensatedSum<T> sum_d;
  T magnitude = 0;
  for (int n = 0; n < n_terms; ++n) {
    Dual<T> term = pow_neg(detail::ln(q + n), sd);
    sum_v.add(term.v);
    sum_d.add(term.d);
    magnitude += detail::abs_value(term.v);
  }

  const T a = q + n_terms;
  const T log_a = detail::ln(a);
  const Dual<T> a_pow_neg_s = pow_neg(log_a, sd);  // a^-s
  const Dual<T> a_pow_1ms = a_pow_neg_s * a;       // a^(1-s)
  Dual<T> tail = a_pow_1ms / (sd - Dual<T>(T(1)));
  tail += a_pow_neg_s * T(0.5);

  const auto& b = bernoulli_table<T>();
  Dual<T> poch = sd;  // (s)_{2j-1}
  T inv_fact = T(1) / 2;  // 1/(2j)!
  T a_inv_sq = T(1) / (a * a);
  T a_pow = a_inv_sq;  // a^(-2j)
  magnitude += detail::abs_value(a_pow_1ms.v) + detail::abs_value(a_pow_1ms.d);
  for (int j = 1; 2 * j < kBernoulliTableSize && j <= 2 * corrections; ++j) {
    Dual<T> term = poch * a_pow_1ms;
    term *= b[2 * j] * inv_fact * a_pow;
    tail += term;
    if (j >= corrections &&
        detail::abs_value(term.v) + detail::abs_value(term.d) < epsilon<T>() * magnitude) {
      break;
    }
    poch *= (sd + Dual<T>(T(2 * j - 1))) * (sd + Dual<T>(T(2 * j)));
    inv_fact /= T(2 * j + 1) * T(2 * j + 2);
    a_pow *= a_inv_sq;
  }
  return Dual<T>(sum_v.value() + tail.v, sum_d.value() + tail.d);
}

template <class T>
T hurwitz_zeta(const T& s, const T& q) {
  return hurwitz_em(s, q).v;
}

template <class T>
T hurwitz_zeta_prime(const T& s, const T& q) {
  return hurwitz_em(s, q).d;
}

template <class T>
T riemann_zeta(const T& s) {
  if (!is_finite(s)) throw DomainError("riemann_zeta: argument must be finite");
  if (s == 1) throw PoleError("riemann_zeta: pole at s = 1");
  using std::floor;
  using boost::multiprecision::floor;
  if (s <= 0 && floor(s) == s && s > -(kBernoulliTableSize - 2)) {
    // zeta(-n) = -B_{n+1}(1)/(n+1); B_{n+1}(1) = B_{n+1} except B_1(1) = +1/2
    const int n = static_cast<int>(to_double(-s));
    if (n == 0) return T(-0.5);
    return -bernoulli_table<T>()[n + 1] / T(n + 1);
  }
  if (s < -1) {
    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    const T one_minus = T(1) - s;
    const T log_factor = s * detail::ln(T(2)) + (s - 1) * detail::ln(pi<T>()) + log_gamma(one_minus);
    return detail::expo(log_factor) * sin_pi(s / 2) * hurwitz_em(one_minus, T(1)).v;
  }
  return hurwitz_em(s, T(1)).v;
}

/// zeta'(-n) for n >= 0.
///
/// n = 0: -ln sqrt(2 pi). Even n = 2k: (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^(2k)).
/// Odd n = 2k+1: from the derivative of the functional equation,
///   zeta'(-n) = (-1)^k 2 n! (2 pi)^-(n+1) [ (psi(n+1) - ln 2 pi) zeta(n+1) + zeta'(n+1) ].
template <class T>
T zeta_prime_neg(int n) {
  if (n < 0) throw ArgumentError("zeta_prime_neg: n must be >= 0");
  if (n == 0) return -detail::ln_sqrt_2pi<T>();
  const T two_pi = 2 * pi<T>();
  if (n % 2 == 0) {
    const int k = n / 2;
    T value = factorial_as<T>(n) * hurwitz_em(T(n + 1), T(1)).v /
              (2 * detail::power(two_pi, T(n)));
    return (k % 2 == 0) ? value : T(-value);
  }
  const int k = (n - 1) / 2;
  const Dual<T> z = hurwitz_em(T(n + 1), T(1));
  const T bracket = (digamma(T(n + 1)) - detail::ln(two_pi)) * z.v + z.d;
  T value = 2 * factorial_as<T>(n) * bracket / detail::power(two_pi, T(n + 1));
  return (k % 2 == 0) ? value : T(-value);
}

}  // namespace negapoly::generic
