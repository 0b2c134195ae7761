#pragma once

#include <utility>
#include <vector>

#include "negapoly/rational.hpp"

namespace negapoly {

enum class Parity { SineLike, CosineLike };
enum class PolyBasis { PowersOfT, PowersOfOnePlusT2 };

/// Terminating form of sin(m atan t) or cos(m atan t).
///
/// PowersOfT: coeffs[k] multiplies t^(2k+1) (sine) or t^(2k) (cosine), and
/// the trig value is the polynomial times (1+t^2)^(-m/2).
/// PowersOfOnePlusT2: coeffs[p] multiplies u^p with u = 1+t^2; the trig value
/// is the polynomial times (1+t^2)^(-m/2), and also times t for the sine.
struct TrigPolynomial {
  int m = 1;
  std::vector<Rational> coeffs;
  PolyBasis basis = PolyBasis::PowersOfT;
  Parity parity = Parity::SineLike;

  /// The bare polynomial at t (no (1+t^2)^(-m/2) factor).
  double polynomial_value(double t) const;
  /// sin(m atan t) or cos(m atan t) reconstructed from the coefficients.
  double evaluate(double t) const;
};

/// (-1)^k (z)_{2k+1} / (2k+1)!, the t^(2k+1) coefficient of sin(z atan t) (1+t^2)^(-z/2).
double taylor_coeff_sin(double z, int k);
/// (-1)^k (z)_{2k} / (2k)!, the t^(2k) coefficient of cos(z atan t) (1+t^2)^(-z/2).
double taylor_coeff_cos(double z, int k);

/// Exact rational versions of the two coefficients.
Rational taylor_coeff_sin_exact(const Rational& z, int k);
Rational taylor_coeff_cos_exact(const Rational& z, int k);

TrigPolynomial trig_poly_in_t(int m, Parity parity);
TrigPolynomial trig_poly_in_1pt2(int m, Parity parity);

/// Re-expands a PowersOfT polynomial in powers of 1+t^2 through
/// t^2 = (1+t^2) - 1. Exact.
TrigPolynomial to_one_plus_t2_basis(const TrigPolynomial& p);

/// (sum_{k=j}^{floor((m-1)/2)} C(m,2k+1) C(k,j), C(m-j-1,j) 2^(m-2j-1)).
std::pair<BigInt, BigInt> binomial_collapse_identity(int m, int j);

/// sum_{j=1}^{k} (-1)^j j C(2k-j-1, k-j) C(p, j-p).
BigInt orthogonality_sum(int k, int p);

/// (sum_j 2^j C(2k-j-1, k-j), sum_j j 2^j C(2k-j-1, k-j)) for j = 1..k.
std::pair<BigInt, BigInt> evaluation_sums(int k);

/// Residual of (1+t^2) g'' + 2t(z+1) g' + z(z+1) g on the series for
/// sin(z atan t) (1+t^2)^(-z/2) truncated after `terms` coefficients.
/// Evaluated in 50-digit arithmetic. Requires |t| < 1.
double ode_residual(double z, double t, int terms = 200);

/// The same residual in exact rational arithmetic.
Rational ode_residual_exact(const Rational& z, const Rational& t, int terms);

}  // namespace negapoly
