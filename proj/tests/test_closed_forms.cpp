#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "negapoly/closed_forms.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/hurwitz.hpp"
#include "negapoly/special.hpp"
#include "support.hpp"

using namespace negapoly;
using negapoly::testing::rel_err;

namespace {
constexpr auto Bose = KernelKind::BoseMinus;
constexpr auto Fermi = KernelKind::FermiPlus;
constexpr auto Csch = KernelKind::Csch;

double closed(Family f, int k, double q, KernelKind kernel = Bose) { return closed_form({f, k, kernel}, q).value; }

double term_sum(const ClosedFormValue& v) {
  double s = 0;
  for (const auto& [name, x] : v.terms) s += x;
  return s;
}
}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("t") == Family::T);
  CHECK(parse_family("L") == Family::L);
  CHECK(to_string(Family::I) == "I");
  CHECK_THROWS_AS(parse_family("X"), ArgumentError);
}

TEST_CASE("closed form availability") {
  CHECK(has_closed_form({Family::I, 0, Bose}));
  CHECK_FALSE(has_closed_form({Family::I, 0, Fermi}));
  CHECK(has_closed_form({Family::I, 1, Csch}));
  CHECK(has_closed_form({Family::T, 4, Fermi}));
  CHECK_FALSE(has_closed_form({Family::T, 3, Bose}));
  CHECK(has_closed_form({Family::L, 5, Csch}));
  CHECK_FALSE(has_closed_form({Family::L, 2, Bose}));
  CHECK_THROWS_AS(closed_form({Family::T, 1, Bose}, 1.0), NoClosedFormError);
  CHECK_THROWS_AS(closed_form({Family::L, 0, Bose}, 1.0), NoClosedFormError);
  CHECK_THROWS_AS(closed_form({Family::I, 2, Bose}, -1.0), DomainError);
}

TEST_CASE("bose family reference values") {
  CHECK(rel_err(closed(Family::I, 0, 1), 0.03860783245076643030325605) < 1e-13);
  CHECK(rel_err(closed(Family::I, 3, 0.5), 0.09583267878378191266018917) < 1e-13);
  CHECK(rel_err(closed(Family::I, 8, 2), 0.008844834519527738702670768) < 1e-12);
  CHECK(rel_err(closed(Family::T, 2, 1), 0.003716795875526521510815418) < 1e-13);
  CHECK(rel_err(closed(Family::T, 4, 0.5), 0.07624923379026502741368424) < 1e-13);
  CHECK(rel_err(closed(Family::T, 6, 2), 0.000007226913844346844203036836) < 1e-12);
  CHECK(rel_err(closed(Family::T, 10, 0.25), 35771.06246532144707464289) < 1e-13);
  CHECK(rel_err(closed(Family::T, 10, 4), 5.8490981598633997555324e-10) < 1e-9);
  CHECK(rel_err(closed(Family::L, 3, 1), 0.001434283697059265709591012) < 1e-13);
  CHECK(rel_err(closed(Family::L, 5, 0.5), 0.1851275795752560693617029) < 1e-13);
  CHECK(rel_err(closed(Family::L, 11, 0.25), 708445.307811375877066198) < 1e-13);
  CHECK(rel_err(closed(Family::L, 11, 4), 1.348084918222399302158881e-10) < 1e-8);
}

TEST_CASE("kernel variant reference values") {
  CHECK(rel_err(closed(Family::T, 4, 2, Fermi), 0.00002785852659776817153921523) < 1e-11);
  CHECK(rel_err(closed(Family::T, 2, 1, Csch), 0.00693089079110565252959476) < 1e-12);
  CHECK(rel_err(closed(Family::L, 3, 0.5, Fermi), 0.05639057572176894210803425) < 1e-12);
  CHECK(rel_err(closed(Family::L, 5, 0.25, Csch), 41.84102259464764820027177) < 1e-12);
  CHECK(rel_err(closed(Family::I, 2, 0.5, Csch), 0.1406940485204380807919769) < 1e-12);
  CHECK(rel_err(closed(Family::I, 3, 1, Fermi), 0.0135428378297975505054055) < 1e-12);
}

TEST_CASE("oracle reference values") {
  const auto r = oracle({Family::T, 1, Bose}, 1.0);
  CHECK(rel_err(r.value, 0.009058731450020460777620742) < 1e-11);
  CHECK(r.abs_error_estimate < 1e-11 * r.value);
  CHECK(rel_err(oracle({Family::L, 11, Bose}, 4.0).value, 1.348084918222399302158881e-10) < 1e-11);
  CHECK(rel_err(oracle({Family::I, 3, Fermi}, 1.0).value, 0.0135428378297975505054055) < 1e-11);
}

TEST_CASE("closed form terms add up") {
  for (const auto& v : {I_closed(4, 0.5), T0_closed(0.25), T_even_closed(3, 2.0), L1_closed(1.0),
                        L_odd_closed(4, 0.5), T_even_variant_closed(2, 1.0, Csch)}) {
    REQUIRE_FALSE(v.terms.empty());
    double mag = 0;
    for (const auto& [name, x] : v.terms) {
      CHECK_FALSE(name.empty());
      mag += std::abs(x);
    }
    CHECK(std::abs(term_sum(v) - v.value) <= 1e-14 * mag);
  }
}

TEST_CASE("term labels") {
  const std::set<std::string> known{"elementary", "polygamma", "log_gamma", "bernoulli", "negapolygamma",
                                    "zeta_prime"};
  for (const auto& [name, x] : L_odd_closed(2, 1.0).terms) CHECK(known.count(name) == 1);
  for (const auto& [name, x] : T0_closed(1.0).terms) CHECK(known.count(name) == 1);
}

TEST_CASE("general L formula agrees with the dedicated forms") {
  for (double q : {0.25, 1.0, 4.0}) {
    CHECK(rel_err(L_odd_general(0, q).value, L1_closed(q).value) < 1e-13);
    for (int k = 1; k <= 4; ++k) CHECK(rel_err(L_odd_general(k, q).value, L_odd_closed(k, q).value) < 1e-12);
  }
  CHECK(L_odd_closed(0, 0.5).value == L1_closed(0.5).value);
}

TEST_CASE("variants through the kernel transform") {
  for (double q : {0.5, 1.0, 2.0}) {
    for (auto target : {Fermi, Csch}) {
      for (int k = 1; k <= 3; ++k) {
        const double via = transform_kernel([k](double x) { return I_closed(k, x).value; }, q, target);
        CHECK(rel_err(I_variant_closed(k, q, target).value, via) < 1e-12);
      }
      for (int k = 0; k <= 3; ++k) {
        const double t = transform_kernel([k](double x) { return closed(Family::T, 2 * k, x); }, q, target);
        CHECK(rel_err(T_even_variant_closed(k, q, target).value, t) < 1e-12);
        const double l = transform_kernel([k](double x) { return closed(Family::L, 2 * k + 1, x); }, q, target);
        CHECK(rel_err(L_odd_variant_closed(k, q, target).value, l) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(transform_kernel([](double) { return 0.0; }, 1.0, Bose), ArgumentError);
}

TEST_CASE("recursions") {
  for (double q : {0.25, 1.0, 4.0}) {
    for (int m = 1; m <= 8; ++m) CHECK(std::abs(I_recursion_check(m, q)) < 1e-12);
    for (int m = 0; m <= 8; ++m) CHECK(std::abs(jplusk_residual(m, q)) < 1e-12);
  }
  for (int m = 0; m <= 3; ++m) CHECK(std::abs(jplusk_residual(m, 1.0, ValueSource::Oracle)) < 1e-10);
  for (int m = 1; m <= 3; ++m) CHECK(std::abs(I_recursion_check(m, 0.5, ValueSource::Oracle)) < 1e-10);
}

TEST_CASE("T0 derivative and the sinh squared integrals") {
  const double h = 1e-5;
  for (double q : {0.5, 1.0, 2.0}) {
    const double fd = (T0_closed(q + h).value - T0_closed(q - h).value) / (2 * h);
    CHECK(rel_err(T0_derivative(q).value, fd) < 1e-8);
  }
  const auto [v1, v2] = sinh_sq_integrals();
  const auto [o1, o2] = sinh_sq_oracle();
  CHECK(rel_err(v1, o1.value) < 1e-12);
  CHECK(rel_err(v2, o2.value) < 1e-12);
  CHECK(rel_err(v1, -2 / std::numbers::pi * T0_derivative(1.0).value) < 1e-15);
}

TEST_CASE("bernoulli polynomials from zeta and integrated polygamma") {
  for (int m = 0; m <= 6; ++m) {
    for (double q : {0.5, 2.0}) CHECK(std::abs(bernoulli_from_hurwitz_check(m, q)) < 1e-10);
  }
  for (int n = 1; n <= 4; ++n) {
    for (double q : {0.5, 1.0, 2.5}) CHECK(std::abs(intpoly_check(n, q)) < 1e-9);
  }
}

TEST_CASE("special value table") {
  const auto rows = special_value_table();
  REQUIRE(rows.size() == 19);
  std::set<std::string> names;
  for (const auto& r : rows) {
    names.insert(r.name);
    CHECK(std::abs(r.closed - r.symbolic) <= 1e-10);
    CHECK(std::abs(r.closed - r.oracle) <= 1e-8);
    CHECK(r.oracle_error >= 0);
    CHECK_FALSE(r.expression.empty());
  }
  CHECK(names.size() == rows.size());
  const auto bare = special_value_table(false);
  REQUIRE(bare.size() == 19);
  CHECK(bare[0].closed == rows[0].closed);
}

TEST_CASE("zeta prime pinnings") {
  const double ln2 = std::log(2.0);
  const double zp1 = zeta_prime_neg(1);
  CHECK(rel_err(hurwitz_zeta_prime(-1, 0.5), -ln2 / 24 - zp1 / 2) < 1e-10);
  const double catalan = 0.9159655941772190150546035;
  const double want = catalan / (4 * std::numbers::pi) - zp1 / 8;
  CHECK(rel_err(hurwitz_zeta_prime(-1, 0.25), want) < 1e-10);
}
