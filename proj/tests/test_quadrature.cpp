#include <doctest.h>

#include <cmath>
#include <numbers>

#include "negapoly/errors.hpp"
#include "negapoly/quadrature.hpp"
#include "negapoly/special.hpp"
#include "support.hpp"

using namespace negapoly;
using negapoly::testing::rel_err;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("kernel names") {
  CHECK(parse_kernel("bose") == KernelKind::BoseMinus);
  CHECK(parse_kernel("fermi") == KernelKind::FermiPlus);
  CHECK(parse_kernel("csch") == KernelKind::Csch);
  CHECK(parse_kernel(to_string(KernelKind::FermiPlus)) == KernelKind::FermiPlus);
  CHECK_THROWS_AS(parse_kernel("boson"), ArgumentError);
}

TEST_CASE("kernel values") {
  const double x = 2 * kPi * 0.5 * 0.3;
  CHECK(rel_err(kernel_value(KernelKind::BoseMinus, 0.5, 0.3), 1 / std::expm1(x)) < 1e-15);
  CHECK(rel_err(kernel_value(KernelKind::FermiPlus, 0.5, 0.3), 1 / (std::exp(x) + 1)) < 1e-15);
  CHECK(rel_err(kernel_value(KernelKind::Csch, 0.5, 0.3), 1 / std::sinh(x)) < 1e-15);
  for (auto k : {KernelKind::BoseMinus, KernelKind::FermiPlus, KernelKind::Csch}) {
    const double v = kernel_value(k, 1.0, 200.0);
    CHECK(std::isfinite(v));
    CHECK(v >= 0);
  }
}

TEST_CASE("bose moments") {
  for (int k = 0; k <= 6; ++k) {
    for (double q : {0.25, 1.0, 3.0}) {
      const int p = 2 * k + 1;
      IntegrandSpec spec{[p](double t) { return std::pow(t, p); }, double(p)};
      const auto r = integrate(spec, KernelKind::BoseMinus, q, 1e-13);
      CHECK(rel_err(r.value, moment_bose(k, q)) < 1e-12);
      CHECK(r.abs_error_estimate <= 1e-12 * std::abs(r.value));
      CHECK(r.evaluations > 0);
    }
  }
  // int t / (e^(2 pi t) - 1) = 1/24
  CHECK(rel_err(moment_bose(0, 1.0), 1.0 / 24) < 1e-15);
}

TEST_CASE("gamma zeta moments") {
  for (double nu : {1.5, 2.0, 3.7}) {
    const double mu = 2 * kPi * 0.7;
    IntegrandSpec spec{[nu](double t) { return std::pow(t, nu - 1); }, nu - 1};
    const auto r = integrate(spec, KernelKind::BoseMinus, 0.7);
    CHECK(rel_err(r.value, moment_gamma_zeta(nu, mu)) < 1e-11);
  }
  CHECK(rel_err(moment_gamma_zeta(2, 1), kPi * kPi / 6) < 1e-15);
  CHECK_THROWS_AS(moment_gamma_zeta(1.0, 1.0), DomainError);
}

TEST_CASE("fermi and csch kernels") {
  // int t / (e^(2 pi t) + 1) = 1/48, int t / sinh(2 pi t) = 1/16
  IntegrandSpec lin{[](double t) { return t; }, 1};
  CHECK(rel_err(integrate(lin, KernelKind::FermiPlus, 1.0).value, 1.0 / 48) < 1e-12);
  CHECK(rel_err(integrate(lin, KernelKind::Csch, 1.0).value, 1.0 / 16) < 1e-12);
  // int 1 / (e^(2 pi t) + 1) = ln 2 / (2 pi)
  IntegrandSpec one{[](double) { return 1.0; }, 0};
  CHECK(rel_err(integrate(one, KernelKind::FermiPlus, 1.0).value, std::log(2.0) / (2 * kPi)) < 1e-12);
}

TEST_CASE("integrate is deterministic") {
  IntegrandSpec spec{[](double t) { return t * std::atan(t); }, 1.5};
  const auto a = integrate(spec, KernelKind::BoseMinus, 0.25);
  const auto b = integrate(spec, KernelKind::BoseMinus, 0.25);
  CHECK(a.value == b.value);
  CHECK(a.abs_error_estimate == b.abs_error_estimate);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("integrate argument checks") {
  IntegrandSpec spec{[](double t) { return t; }, 1};
  CHECK_THROWS_AS(integrate(spec, KernelKind::BoseMinus, 0.0), DomainError);
  CHECK_THROWS_AS(integrate(spec, KernelKind::BoseMinus, 1.0, 1e-16), DomainError);
  CHECK_THROWS_AS(integrate(spec, KernelKind::BoseMinus, 1.0, 0.1), DomainError);
}

TEST_CASE("panel budget") {
  // a discontinuous integrand cannot reach 1e-14 with a handful of panels
  IntegrandSpec spec{[](double t) { return t < 0.3 ? t : 2 * t; }, 1};
  try {
    (void)integrate(spec, KernelKind::BoseMinus, 1.0, 1e-14);
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_value()));
    CHECK(e.best_error() > 0);
  }
  QuadratureOptions tiny;
  tiny.rel_tol = 1e-14;
  tiny.max_panels = 8;
  CHECK_THROWS_AS(integrate_interval([](double t) { return t < 0.3 ? 0.0 : 1.0; }, 0, 1, tiny), AccuracyError);
}

TEST_CASE("finite intervals") {
  CHECK(rel_err(integrate_interval([](double t) { return std::exp(t); }, 0, 1).value, std::expm1(1.0)) < 1e-13);
  // endpoint singularities
  CHECK(rel_err(integrate_interval([](double t) { return std::log(t); }, 0, 1).value, -1.0) < 1e-11);
  CHECK(rel_err(integrate_interval([](double t) { return 1 / std::sqrt(t); }, 0, 1).value, 2.0) < 1e-9);
  CHECK(rel_err(integrate_interval([](double t) { return log_gamma(t); }, 1, 2).value, 0.5 * std::log(2 * kPi) - 1) <
        1e-12);
}
