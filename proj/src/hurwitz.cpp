#include "negapoly/hurwitz.hpp"

#include <cmath>
#include <string>

#include "negapoly/generic/hurwitz.hpp"
#include "negapoly/quadrature.hpp"

namespace negapoly {

namespace {

constexpr double kHermiteTol = 1e-13;

void check_arguments(double z, double q, const char* what) {
  if (!std::isfinite(z)) throw DomainError(std::string(what) + ": z must be finite");
  require_positive(q, what);
  if (std::abs(z - 1) < 1e-6) throw PoleError(std::string(what) + ": z is within 1e-6 of the pole at z = 1");
}

double envelope(double z) { return std::max(0.0, -z); }

// (1 + t^2)^(-z/2)
double damping(double z, double t) { return std::exp(-0.5 * z * std::log1p(t * t)); }

double hermite_sine_integral(double z, double q) {
  IntegrandSpec spec{[z](double t) { return std::sin(z * std::atan(t)) * damping(z, t); }, envelope(z)};
  return integrate(spec, KernelKind::BoseMinus, q, kHermiteTol).value;
}

double hermite_zeta(double z, double q) {
  const double q1z = std::pow(q, 1 - z);
  return 0.5 * std::pow(q, -z) + q1z / (z - 1) + 2 * q1z * hermite_sine_integral(z, q);
}

double hermite_zeta_prime(double z, double q) {
  const double lnq = std::log(q);
  const double q1z = std::pow(q, 1 - z);
  const double i_sin = hermite_sine_integral(z, q);
  IntegrandSpec cos_atan{
      [z](double t) {
        const double a = std::atan(t);
        return std::cos(z * a) * a * damping(z, t);
      },
      envelope(z) + 0.5};
  IntegrandSpec sin_log{
      [z](double t) { return std::sin(z * std::atan(t)) * std::log1p(t * t) * damping(z, t); },
      envelope(z) + 0.5};
  const double i_cos = integrate(cos_atan, KernelKind::BoseMinus, q, kHermiteTol).value;
  const double i_log = integrate(sin_log, KernelKind::BoseMinus, q, kHermiteTol).value;
  CompensatedSum<double> sum;
  sum.add(-0.5 * std::pow(q, -z) * lnq);
  sum.add(-q1z / ((z - 1) * (z - 1)));
  sum.add(-q1z * lnq / (z - 1));
  sum.add(-2 * q1z * lnq * i_sin);
  sum.add(2 * q1z * i_cos);
  sum.add(-q1z * i_log);
  return sum.value();
}

}  // namespace

double hurwitz_zeta(double z, double q, HurwitzBackend backend) {
  check_arguments(z, q, "hurwitz_zeta");
  if (backend == HurwitzBackend::HermiteQuadrature) return hermite_zeta(z, q);
  return to_double(generic::hurwitz_zeta<Extended>(Extended(z), Extended(q)));
}

double hurwitz_zeta_prime(double z, double q, HurwitzBackend backend) {
  check_arguments(z, q, "hurwitz_zeta_prime");
  if (backend == HurwitzBackend::HermiteQuadrature) return hermite_zeta_prime(z, q);
  return to_double(generic::hurwitz_zeta_prime<Extended>(Extended(z), Extended(q)));
}

double balanced_A(int m, double q) {
  require_positive(q, "balanced_A");
  return to_double(generic::balanced_A<Extended>(m, Extended(q)));
}

double negapolygamma(int m, double q) {
  require_positive(q, "negapolygamma");
  return to_double(generic::negapolygamma<Extended>(m, Extended(q)));
}

double negapolygamma_at_zero(int n) { return to_double(generic::negapolygamma_at_zero<Extended>(n)); }

double digamma_limit_check(double q) {
  require_positive(q, "digamma_limit_check");
  const Extended x(q);
  const double steps[] = {0.2, 0.1, 0.05, 0.025};
  constexpr int n = 4;
  Extended h2[n];
  Extended table[n];
  for (int i = 0; i < n; ++i) {
    const Extended h(steps[i]);
    const Extended up = 1 / h - generic::hurwitz_zeta<Extended>(1 + h, x);
    const Extended down = -1 / h - generic::hurwitz_zeta<Extended>(1 - h, x);
    h2[i] = h * h;
    table[i] = (up + down) / 2;
  }
  // Neville extrapolation to h^2 = 0
  for (int level = 1; level < n; ++level) {
    for (int i = n - 1; i >= level; --i) {
      table[i] = (h2[i - level] * table[i] - h2[i] * table[i - 1]) / (h2[i - level] - h2[i]);
    }
  }
  return to_double(table[n - 1]);
}

}  // namespace negapoly
