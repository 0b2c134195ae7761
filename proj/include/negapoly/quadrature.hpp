#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

namespace negapoly {

/// Weight functions K(q, t) of the semi-infinite integrals.
enum class KernelKind {
  BoseMinus,  // 1 / (exp(2 pi q t) - 1)
  FermiPlus,  // 1 / (exp(2 pi q t) + 1)
  Csch,       // 1 / sinh(2 pi q t)
};

std::string_view to_string(KernelKind k);
/// Accepts "bose", "fermi", "csch" (and the enumerator names).
KernelKind parse_kernel(std::string_view text);

/// K(q, t) evaluated without overflow for large arguments.
double kernel_value(KernelKind kind, double q, double t);

struct QuadratureResult {
  double value = 0;
  double abs_error_estimate = 0;
  std::size_t evaluations = 0;
};

/// Numerator factor f of an integral against a kernel. `growth_exponent` is a
/// bound p with |f(t)| = O(t^p) as t -> infinity; it drives the tail cutoff.
/// For BoseMinus and Csch, f must vanish like O(t) at the origin.
struct IntegrandSpec {
  std::function<double(double)> f;
  double growth_exponent = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  std::size_t max_panels = 10000;
};

/// Integral of f(t) K(q, t) over (0, infinity).
///
/// Adaptive Gauss-Kronrod (10/21) panels with global bisection on [0, T];
/// T grows until the analytic tail bound of the exponentially decaying kernel
/// is below a hundredth of the target, and that bound is added to the error
/// estimate. Near t = 0, t K(q, t) is evaluated as a smooth factor against
/// f(t)/t. Panel sums are accumulated in left-to-right order, so results are
/// reproducible bit for bit.
///
/// Throws DomainError for q <= 0 or a tolerance outside [1e-14, 1e-3], and
/// AccuracyError (with the best estimate) when the panel budget runs out.
QuadratureResult integrate(const IntegrandSpec& spec, KernelKind kernel, double q, double target_rel_tol = 1e-12);

/// Plain adaptive integral of f over the finite interval [a, b]. The
/// integrand is never evaluated at the endpoints, so integrable endpoint
/// singularities (log, 1/sqrt) are allowed.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

/// Closed form of the Bose moment: integral of t^(2k+1) / (exp(2 pi q t) - 1),
/// equal to (-1)^k B_{2k+2} / (4 (k+1) q^(2k+2)).
double moment_bose(int k, double q);

/// Gamma(nu) zeta(nu) / mu^nu, the integral of x^(nu-1) / (exp(mu x) - 1).
double moment_gamma_zeta(double nu, double mu);

}  // namespace negapoly
