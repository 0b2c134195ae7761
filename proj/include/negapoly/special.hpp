#pragma once

// Classical special functions on the binary64 surface. Each is evaluated in
// 50-digit arithmetic and rounded once, so results are correctly rounded in
// practice over the documented ranges.

#include "negapoly/combinatorics.hpp"

namespace negapoly {

double bernoulli_polynomial(int m, double q);

/// Rising factorial (z)_n; the empty product (n = 0) is 1.
double pochhammer(double z, int n);

/// ln Gamma(q), q > 0.
double log_gamma(double q);

/// psi(q) = d/dq ln Gamma(q), q > 0.
double digamma(double q);

/// psi^(m)(q) = d^(m+1)/dq^(m+1) ln Gamma(q) for m >= 1, q > 0.
double polygamma(int m, double q);

/// Riemann zeta(s), s != 1.
double riemann_zeta(double s);

/// zeta'(-n) for n >= 0.
double zeta_prime_neg(int n);

}  // namespace negapoly
