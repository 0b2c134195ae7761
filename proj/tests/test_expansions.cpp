#include <doctest.h>

#include <cmath>

#include "negapoly/combinatorics.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/expansions.hpp"
#include "negapoly/special.hpp"
#include "support.hpp"

using namespace negapoly;
using negapoly::testing::mixed_err;

TEST_CASE("taylor coefficients") {
  // sin(z atan t)(1+t^2)^(-z/2) = z t - z(z+1)(z+2)/6 t^3 + ...
  CHECK(taylor_coeff_sin(2.5, 0) == doctest::Approx(2.5));
  CHECK(taylor_coeff_sin(2.5, 1) == doctest::Approx(-2.5 * 3.5 * 4.5 / 6));
  CHECK(taylor_coeff_cos(2.5, 0) == 1.0);
  CHECK(taylor_coeff_cos(2.5, 1) == doctest::Approx(-2.5 * 3.5 / 2));
  for (int k = 0; k <= 6; ++k) {
    const Rational z(BigInt(7), BigInt(3));
    CHECK(taylor_coeff_sin_exact(z, k).to_double() == doctest::Approx(taylor_coeff_sin(7.0 / 3, k)).epsilon(1e-14));
    CHECK(taylor_coeff_cos_exact(z, k).to_double() == doctest::Approx(taylor_coeff_cos(7.0 / 3, k)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(taylor_coeff_sin(1.0, -1), ArgumentError);
}

TEST_CASE("taylor series sums to the closed function") {
  for (double z : {-1.5, 0.5, 3.0}) {
    const double t = 0.4;
    double s = 0, c = 0;
    for (int k = 0; k < 80; ++k) {
      s += taylor_coeff_sin(z, k) * std::pow(t, 2 * k + 1);
      c += taylor_coeff_cos(z, k) * std::pow(t, 2 * k);
    }
    const double damp = std::pow(1 + t * t, -z / 2);
    CHECK(mixed_err(s, std::sin(z * std::atan(t)) * damp) < 1e-14);
    CHECK(mixed_err(c, std::cos(z * std::atan(t)) * damp) < 1e-14);
  }
}

TEST_CASE("trig polynomials in t") {
  const auto s3 = trig_poly_in_t(3, Parity::SineLike);
  // sin(3 atan t) (1+t^2)^(3/2) = 3t - t^3
  REQUIRE(s3.coeffs.size() == 2);
  CHECK(s3.coeffs[0] == Rational(3));
  CHECK(s3.coeffs[1] == Rational(-1));
  const auto c2 = trig_poly_in_t(2, Parity::CosineLike);
  REQUIRE(c2.coeffs.size() == 2);
  CHECK(c2.coeffs[0] == Rational(1));
  CHECK(c2.coeffs[1] == Rational(-1));
  for (int m = 1; m <= 12; ++m) {
    for (double t : {0.0, 0.3, 1.0, 2.7}) {
      CHECK(mixed_err(trig_poly_in_t(m, Parity::SineLike).evaluate(t), std::sin(m * std::atan(t))) < 1e-14);
      CHECK(mixed_err(trig_poly_in_t(m, Parity::CosineLike).evaluate(t), std::cos(m * std::atan(t))) < 1e-14);
    }
  }
  CHECK_THROWS_AS(trig_poly_in_t(0, Parity::SineLike), ArgumentError);
}

TEST_CASE("trig polynomials in 1+t^2") {
  for (int m = 1; m <= 12; ++m) {
    for (Parity parity : {Parity::SineLike, Parity::CosineLike}) {
      const auto direct = trig_poly_in_1pt2(m, parity);
      CHECK(direct.basis == PolyBasis::PowersOfOnePlusT2);
      CHECK(direct.coeffs == to_one_plus_t2_basis(trig_poly_in_t(m, parity)).coeffs);
      for (double t : {0.2, 1.5}) {
        const double want = parity == Parity::SineLike ? std::sin(m * std::atan(t)) : std::cos(m * std::atan(t));
        CHECK(mixed_err(direct.evaluate(t), want) < 1e-13);
      }
    }
  }
}

TEST_CASE("binomial collapse") {
  for (int m = 1; m <= 30; ++m) {
    for (int j = 0; j <= (m - 1) / 2; ++j) {
      const auto [lhs, rhs] = binomial_collapse_identity(m, j);
      CHECK(lhs == rhs);
    }
  }
  const auto [lhs, rhs] = binomial_collapse_identity(5, 1);
  // C(5,3) C(1,1) + C(5,5) C(2,1) = 12 = C(3,1) 2^2
  CHECK(lhs == 12);
  CHECK(rhs == 12);
  CHECK_THROWS_AS(binomial_collapse_identity(5, 3), ArgumentError);
  CHECK_THROWS_AS(binomial_collapse_identity(5, -1), ArgumentError);
}

TEST_CASE("orthogonality and evaluation sums") {
  for (int k = 1; k <= 15; ++k) {
    for (int p = 1; p <= k; ++p) {
      const BigInt expected = p == k ? BigInt(k % 2 == 0 ? k : -k) : BigInt(0);
      CHECK(orthogonality_sum(k, p) == expected);
    }
    const auto [s1, s2] = evaluation_sums(k);
    CHECK(s1 == (BigInt(1) << (2 * k - 1)));
    CHECK(s2 == binomial(2 * k, k) * k);
  }
  CHECK_THROWS_AS(orthogonality_sum(0, 1), ArgumentError);
  CHECK_THROWS_AS(evaluation_sums(0), ArgumentError);
}

TEST_CASE("series satisfies its differential equation") {
  for (double z : {-2.5, 0.5, 1.0, 4.0}) {
    for (double t : {-0.5, 0.1, 0.7}) CHECK(std::abs(ode_residual(z, t)) < 1e-12);
  }
  CHECK(ode_residual(2.0, 0.0) == 0.0);
  // a terminating series at z = -3 is exact
  CHECK(ode_residual_exact(Rational(-3), Rational(BigInt(1), BigInt(2)), 10).is_zero());
  CHECK_THROWS_AS(ode_residual(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ode_residual_exact(Rational(1), Rational(2), 5), DomainError);
}
