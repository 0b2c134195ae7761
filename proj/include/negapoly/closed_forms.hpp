#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negapoly/quadrature.hpp"

namespace negapoly {

/// A closed-form value with its additive breakdown. The terms are summed in
/// 50-digit arithmetic before rounding, so their double sum matches `value`
/// to within a few ulps of the sum of magnitudes.
struct ClosedFormValue {
  double value = 0;
  std::vector<std::pair<std::string, double>> terms;
};

/// I: t/(1+t^2)^(k+1).  T: t^k atan t.  L: t^k ln(1+t^2).
enum class Family { I, T, L };

std::string_view to_string(Family f);
/// Accepts "I", "T", "L" (case-insensitive).
Family parse_family(std::string_view text);

struct FamilyId {
  Family family = Family::I;
  int index = 0;
  KernelKind kernel = KernelKind::BoseMinus;
};

/// Numerator of a family member, with its growth exponent for the oracle.
IntegrandSpec family_integrand(Family family, int index);

/// Whether a closed form is implemented: I (any k with the Bose kernel, k >= 1
/// otherwise), T with even index, L with odd index.
bool has_closed_form(const FamilyId& id);

/// Closed form of a family member. Throws NoClosedFormError when none exists.
ClosedFormValue closed_form(const FamilyId& id, double q);

/// Oracle quadrature of a family member.
QuadratureResult oracle(const FamilyId& id, double q, double rel_tol = 1e-12);

ClosedFormValue I_closed(int k, double q);
ClosedFormValue T0_closed(double q);
/// T_2k(q) for k >= 1.
ClosedFormValue T_even_closed(int k, double q);
ClosedFormValue L1_closed(double q);
/// L_{2k+1}(q); k = 0 is answered by L1_closed.
ClosedFormValue L_odd_closed(int k, double q);
/// L_{2k+1}(q) from the general negapolygamma formula, also at k = 0.
ClosedFormValue L_odd_general(int k, double q);

enum class ValueSource { ClosedForm, Oracle };

/// Residual of the I_k recursion of order m, relative to its largest term.
double I_recursion_check(int m, double q, ValueSource source = ValueSource::ClosedForm);

/// Residual of the linear relation tying T_0..T_2k, L_1..L_{2k+1} and A_{m+1},
/// relative to its largest term.
double jplusk_residual(int m, double q, ValueSource source = ValueSource::ClosedForm);

/// F(q) - 2F(2q) for FermiPlus, 2F(q) - 2F(2q) for Csch, where F is a Bose
/// kernel integral as a function of q.
double transform_kernel(const std::function<double(double)>& base, double q, KernelKind target);

/// I_k against the FermiPlus or Csch kernel, k >= 1, from the explicit
/// polygamma formulas at q and 2q.
ClosedFormValue I_variant_closed(int k, double q, KernelKind target);
/// T_2k against the FermiPlus or Csch kernel, k >= 0.
ClosedFormValue T_even_variant_closed(int k, double q, KernelKind target);
/// L_{2k+1} against the FermiPlus or Csch kernel, k >= 0.
ClosedFormValue L_odd_variant_closed(int k, double q, KernelKind target);

/// d T_0 / dq.
ClosedFormValue T0_derivative(double q);

/// (integral of t atan t / sinh^2(pi t), integral of t atan t / sinh^2(2 pi t)).
std::pair<double, double> sinh_sq_integrals();
/// The same two integrals by plain adaptive quadrature.
std::pair<QuadratureResult, QuadratureResult> sinh_sq_oracle();

/// -(m+1) zeta(-m, q) - B_{m+1}(q), with zeta from Hermite's formula and the
/// terminating sine polynomial integrated by the oracle.
double bernoulli_from_hurwitz_check(int m, double q);

/// Quadrature of r^n psi(r) over (0, q] minus its negapolygamma evaluation.
double intpoly_check(int n, double q);

struct SpecialValueRow {
  std::string name;
  std::string expression;
  double q = 0;
  double closed = 0;
  double symbolic = 0;
  double oracle = 0;
  double oracle_error = 0;
};

/// The printed special values: closed form, constant expression, oracle.
std::vector<SpecialValueRow> special_value_table(bool with_oracle = true);

}  // namespace negapoly
