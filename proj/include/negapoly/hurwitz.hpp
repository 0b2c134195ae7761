#pragma once

namespace negapoly {

enum class HurwitzBackend {
  EulerMaclaurin,
  HermiteQuadrature,
};

/// zeta(z, q) for real z != 1 and q > 0.
///
/// EulerMaclaurin sums the series directly with a Bernoulli tail (50-digit
/// arithmetic, rounded once). HermiteQuadrature evaluates
///   q^-z / 2 + q^(1-z)/(z-1) + 2 q^(1-z) int sin(z atan t) (1+t^2)^(-z/2) / (e^(2 pi q t) - 1) dt
/// with the adaptive oracle integrator.
///
/// Throws PoleError for |z - 1| < 1e-6 and DomainError for q <= 0.
double hurwitz_zeta(double z, double q, HurwitzBackend backend = HurwitzBackend::EulerMaclaurin);

/// d zeta(z, q) / dz. HermiteQuadrature uses the three-integral derivative
/// of Hermite's formula; EulerMaclaurin differentiates the series term by term.
double hurwitz_zeta_prime(double z, double q, HurwitzBackend backend = HurwitzBackend::HermiteQuadrature);

/// A_m(q) = m zeta'(1-m, q), m >= 1.
double balanced_A(int m, double q);

/// Balanced negapolygamma psi^(-m)(q) = [A_m(q) - H_{m-1} B_m(q)] / m!, m >= 1.
double negapolygamma(int m, double q);

/// Right limit at q = 0 of psi^(-1-n).
double negapolygamma_at_zero(int n);

/// Limit of 1/(z-1) - zeta(z, q) as z -> 1, from symmetric samples z = 1 +- h
/// extrapolated to h = 0. Compare with digamma(q).
double digamma_limit_check(double q);

}  // namespace negapoly
