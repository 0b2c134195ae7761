#include "negapoly/expansions.hpp"

#include <cmath>
#include <string>

#include "negapoly/combinatorics.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/scalar.hpp"

namespace negapoly {

namespace {

void check_order(int m, const char* what) {
  if (m < 1) throw ArgumentError(std::string(what) + ": m must be >= 1");
}

void check_index(int k, const char* what) {
  if (k < 0) throw ArgumentError(std::string(what) + ": k must be >= 0");
}

Rational power_of_two(int e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

BigInt signed_one(int e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

template <class T>
T ode_residual_impl(const T& z, const T& t, int terms) {
  if (terms < 1) throw ArgumentError("ode_residual: terms must be >= 1");
  T a = z;  // t^(2k+1) coefficient
  T t2 = t * t;
  T tp = t;  // t^(2k+1)
  T g = 0;
  T g1 = 0;
  T g2 = 0;
  for (int k = 0; k < terms; ++k) {
    const T n = T(2 * k + 1);
    g += a * tp;
    g1 += a * n * tp / t;
    if (k > 0) g2 += a * n * T(2 * k) * tp / t2;
    a = -a * (z + T(2 * k + 1)) * (z + T(2 * k + 2)) / (T(2 * k + 2) * T(2 * k + 3));
    tp *= t2;
  }
  return (T(1) + t2) * g2 + T(2) * t * (z + T(1)) * g1 + z * (z + T(1)) * g;
}

}  // namespace

double TrigPolynomial::polynomial_value(double t) const {
  const Extended x(t);
  const Extended x2 = x * x;
  const Extended var = (basis == PolyBasis::PowersOfT) ? x2 : Extended(1) + x2;
  Extended acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * var + it->to<Extended>();
  if (basis == PolyBasis::PowersOfT && parity == Parity::SineLike) acc *= x;
  return to_double(acc);
}

double TrigPolynomial::evaluate(double t) const {
  const Extended x(t);
  const Extended x2 = x * x;
  const Extended var = (basis == PolyBasis::PowersOfT) ? x2 : Extended(1) + x2;
  Extended acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * var + it->to<Extended>();
  if (parity == Parity::SineLike) acc *= x;
  return to_double(acc * boost::multiprecision::pow(Extended(1) + x2, Extended(-m) / 2));
}

double taylor_coeff_sin(double z, int k) {
  check_index(k, "taylor_coeff_sin");
  Extended c = 1;
  const Extended x(z);
  for (int i = 0; i <= 2 * k; ++i) c *= (x + i) / (i + 1);
  return to_double(k % 2 == 0 ? c : Extended(-c));
}

double taylor_coeff_cos(double z, int k) {
  check_index(k, "taylor_coeff_cos");
  Extended c = 1;
  const Extended x(z);
  for (int i = 0; i < 2 * k; ++i) c *= (x + i) / (i + 1);
  return to_double(k % 2 == 0 ? c : Extended(-c));
}

Rational taylor_coeff_sin_exact(const Rational& z, int k) {
  check_index(k, "taylor_coeff_sin_exact");
  Rational c = 1;
  for (int i = 0; i <= 2 * k; ++i) c = c * (z + Rational(i)) / Rational(i + 1);
  return k % 2 == 0 ? c : -c;
}

Rational taylor_coeff_cos_exact(const Rational& z, int k) {
  check_index(k, "taylor_coeff_cos_exact");
  Rational c = 1;
  for (int i = 0; i < 2 * k; ++i) c = c * (z + Rational(i)) / Rational(i + 1);
  return k % 2 == 0 ? c : -c;
}

TrigPolynomial trig_poly_in_t(int m, Parity parity) {
  check_order(m, "trig_poly_in_t");
  TrigPolynomial p{m, {}, PolyBasis::PowersOfT, parity};
  const int top = (parity == Parity::SineLike) ? (m - 1) / 2 : m / 2;
  const int offset = (parity == Parity::SineLike) ? 1 : 0;
  for (int k = 0; k <= top; ++k) p.coeffs.emplace_back(signed_one(k) * binomial(m, 2 * k + offset));
  return p;
}

TrigPolynomial trig_poly_in_1pt2(int m, Parity parity) {
  check_order(m, "trig_poly_in_1pt2");
  TrigPolynomial p{m, {}, PolyBasis::PowersOfOnePlusT2, parity};
  if (parity == Parity::SineLike) {
    for (int j = 0; j <= (m - 1) / 2; ++j) {
      p.coeffs.push_back(Rational(signed_one(j) * binomial(m - j - 1, j)) * power_of_two(m - 2 * j - 1));
    }
  } else {
    for (int j = 0; j <= m / 2; ++j) {
      p.coeffs.push_back(Rational(signed_one(j) * binomial(m - j, j)) * Rational(BigInt(m), BigInt(m - j)) *
                         power_of_two(m - 2 * j - 1));
    }
  }
  return p;
}

TrigPolynomial to_one_plus_t2_basis(const TrigPolynomial& p) {
  if (p.basis != PolyBasis::PowersOfT) return p;
  TrigPolynomial out{p.m, std::vector<Rational>(p.coeffs.size()), PolyBasis::PowersOfOnePlusT2, p.parity};
  // t^(2k) = (u - 1)^k = sum_j C(k,j) (-1)^(k-j) u^j
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const int kk = static_cast<int>(k);
      const int jj = static_cast<int>(j);
      out.coeffs[j] += p.coeffs[k] * Rational(signed_one(kk - jj) * binomial(kk, jj));
    }
  }
  return out;
}

std::pair<BigInt, BigInt> binomial_collapse_identity(int m, int j) {
  check_order(m, "binomial_collapse_identity");
  const int top = (m - 1) / 2;
  if (j < 0 || j > top) {
    throw ArgumentError("binomial_collapse_identity: j must lie in [0, " + std::to_string(top) + "]");
  }
  BigInt lhs = 0;
  for (int k = j; k <= top; ++k) lhs += binomial(m, 2 * k + 1) * binomial(k, j);
  const BigInt rhs = binomial(m - j - 1, j) << (m - 2 * j - 1);
  return {lhs, rhs};
}

BigInt orthogonality_sum(int k, int p) {
  if (k < 1 || p < 1) throw ArgumentError("orthogonality_sum: k and p must be >= 1");
  BigInt s = 0;
  for (int j = 1; j <= k; ++j) s += signed_one(j) * j * binomial(2 * k - j - 1, k - j) * binomial(p, j - p);
  return s;
}

std::pair<BigInt, BigInt> evaluation_sums(int k) {
  if (k < 1) throw ArgumentError("evaluation_sums: k must be >= 1");
  BigInt s1 = 0;
  BigInt s2 = 0;
  for (int j = 1; j <= k; ++j) {
    const BigInt term = binomial(2 * k - j - 1, k - j) << j;
    s1 += term;
    s2 += term * j;
  }
  return {s1, s2};
}

double ode_residual(double z, double t, int terms) {
  if (!std::isfinite(z) || !(std::abs(t) < 1)) throw DomainError("ode_residual: need finite z and |t| < 1");
  if (t == 0) return 0;
  return to_double(ode_residual_impl<Extended>(Extended(z), Extended(t), terms));
}

Rational ode_residual_exact(const Rational& z, const Rational& t, int terms) {
  if (!(t < Rational(1)) || !(t > Rational(-1))) throw DomainError("ode_residual_exact: need |t| < 1");
  if (t.is_zero()) return 0;
  return ode_residual_impl<Rational>(z, t, terms);
}

}  // namespace negapoly
