#include "negapoly/closed_forms.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "negapoly/combinatorics.hpp"
#include "negapoly/constants.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/expansions.hpp"
#include "negapoly/generic/hurwitz.hpp"
#include "negapoly/hurwitz.hpp"
#include "negapoly/special.hpp"

namespace negapoly {

namespace {

using X = Extended;
namespace gs = generic;

X xln(const X& x) { return gs::detail::ln(x); }
X xpow(const X& x, int n) { return boost::multiprecision::pow(x, n); }
X rat(const Rational& r) { return r.to<X>(); }
X xbinom(long long n, long long k) { return X(binomial(n, k)); }
X sign(int e) { return (e % 2 == 0) ? X(1) : X(-1); }

/// Labelled terms accumulated in extended precision.
class Terms {
 public:
  void add(const std::string& label, const X& v) {
    for (auto& [name, value] : items_) {
      if (name == label) {
        value += v;
        return;
      }
    }
    items_.emplace_back(label, v);
  }
  void scale(const X& factor) {
    for (auto& item : items_) item.second *= factor;
  }
  void absorb(const Terms& other, const X& factor) {
    for (const auto& [name, value] : other.items_) add(name, value * factor);
  }
  X total() const {
    X s = 0;
    for (const auto& item : items_) s += item.second;
    return s;
  }
  ClosedFormValue finish() const {
    ClosedFormValue out;
    out.value = to_double(total());
    for (const auto& [name, value] : items_) out.terms.emplace_back(name, to_double(value));
    return out;
  }

 private:
  std::vector<std::pair<std::string, X>> items_;
};

const BasicSpecialConstants<X>& xc() { return special_constants_as<X>(); }

X psi_neg(int j, const X& q) { return gs::negapolygamma<X>(j + 1, q); }

void check_q(double q, const char* what) { require_positive(q, what); }

void check_variant_kernel(KernelKind target, const char* what) {
  if (target == KernelKind::BoseMinus) {
    throw ArgumentError(std::string(what) + ": target kernel must be fermi or csch");
  }
}

// ---- I family ----

Terms i_terms(int k, const X& q) {
  Terms t;
  if (k == 0) {
    t.add("elementary", xln(q) / 2 - 1 / (4 * q));
    t.add("polygamma", -gs::digamma(q) / 2);
    return t;
  }
  const X four_k = xpow(X(2), 2 * k);
  t.add("elementary", X(-1) / (4 * k) - xbinom(2 * k, k) / (4 * four_k * q));
  X sum = 0;
  for (int j = 1; j <= k; ++j) {
    sum += sign(j + 1) / factorial_as<X>(j - 1) * xbinom(2 * k - j - 1, k - j) * xpow(X(2), j - 1) * xpow(q, j) *
           gs::polygamma(j, q);
  }
  t.add("polygamma", sum / (k * four_k));
  return t;
}

Terms i_variant_terms(int k, const X& q, KernelKind target) {
  Terms t;
  const X four_k = xpow(X(2), 2 * k);
  const X q2 = 2 * q;
  const bool fermi = target == KernelKind::FermiPlus;
  if (fermi) {
    t.add("elementary", X(1) / (4 * k));
  } else {
    t.add("elementary", -xbinom(2 * k, k) / (4 * four_k * q));
  }
  X sum = 0;
  for (int j = 1; j <= k; ++j) {
    const X bracket = gs::polygamma(j, q) - xpow(X(2), fermi ? j + 1 : j) * gs::polygamma(j, q2);
    sum += sign(j + 1) / factorial_as<X>(j - 1) * xbinom(2 * k - j - 1, k - j) * xpow(X(2), j) * xpow(q, j) *
           bracket;
  }
  t.add("polygamma", fermi ? sum / (2 * k * four_k) : sum / (k * four_k));
  return t;
}

// ---- T family ----

Terms t0_terms(const X& q) {
  Terms t;
  const X lq = xln(q);
  t.add("elementary", X(1) / 2 - lq / 2 + lq / (4 * q) - xc().ln_sqrt_2pi / (2 * q));
  t.add("log_gamma", gs::log_gamma(q) / (2 * q));
  return t;
}

// (-1)^k T_2k(q), k >= 1
Terms t_even_signed(int k, const X& q) {
  Terms t;
  const int n = 2 * k + 1;
  t.add("elementary", X(1) / (2 * n * n) - xln(q) / (2 * n) + 1 / (8 * k * q));
  X bsum = 0;
  for (int j = 0; j < k; ++j) {
    bsum += rat(bernoulli_number(2 * j + 2)) / (X(j + 1) * (2 * k - 2 * j - 1) * xpow(q, 2 * j + 2));
  }
  t.add("bernoulli", bsum / 4);
  X nsum = 0;
  for (int j = 0; j <= 2 * k; ++j) {
    nsum += sign(j) * factorial_as<X>(2 * k) / factorial_as<X>(2 * k - j) * psi_neg(j, q) / xpow(q, j + 1);
  }
  t.add("negapolygamma", nsum / 2);
  return t;
}

Terms t0_variant_terms(const X& q, KernelKind target) {
  Terms t;
  const X lq = xln(q);
  const X l2 = xc().ln2;
  if (target == KernelKind::FermiPlus) {
    t.add("elementary", l2 - X(1) / 2 + lq / 2 - l2 / (4 * q));
    t.add("log_gamma", (gs::log_gamma(q) - gs::log_gamma(X(2 * q))) / (2 * q));
  } else {
    t.add("elementary", l2 - (2 * l2 + xc().ln_pi) / (4 * q) + lq / (4 * q));
    t.add("log_gamma", gs::log_gamma(q) / q - gs::log_gamma(X(2 * q)) / (2 * q));
  }
  return t;
}

// (-1)^k times the FermiPlus / Csch T_2k integral, k >= 1
Terms t_even_variant_signed(int k, const X& q, KernelKind target) {
  Terms t;
  const int n = 2 * k + 1;
  const X l2 = xc().ln2;
  const bool fermi = target == KernelKind::FermiPlus;
  if (fermi) {
    t.add("elementary", X(-1) / (2 * n * n) + l2 / n + xln(q) / (2 * n));
  } else {
    t.add("elementary", l2 / n + 1 / (8 * k * q));
  }
  X bsum = 0;
  for (int j = 0; j < k; ++j) {
    const X damp = 1 - xpow(X(2), fermi ? -2 * j - 1 : -2 * j - 2);
    bsum += rat(bernoulli_number(2 * j + 2)) * damp / (X(j + 1) * (2 * k - 2 * j - 1) * xpow(q, 2 * j + 2));
  }
  t.add("bernoulli", fermi ? bsum / 4 : bsum / 2);
  const X q2 = 2 * q;
  X nsum = 0;
  for (int j = 0; j <= 2 * k; ++j) {
    const X bracket = psi_neg(j, q) - psi_neg(j, q2) / xpow(X(2), fermi ? j : j + 1);
    nsum += sign(j) * factorial_as<X>(2 * k) / (factorial_as<X>(2 * k - j) * xpow(q, j + 1)) * bracket;
  }
  t.add("negapolygamma", fermi ? nsum / 2 : nsum);
  return t;
}

// ---- L family ----

Terms l1_terms(const X& q) {
  Terms t;
  const X lq = xln(q);
  const X q2 = q * q;
  t.add("elementary", xc().ln_sqrt_2pi / q - (1 / (12 * q2) - X(1) / 2) * lq - X(3) / 4);
  t.add("log_gamma", -gs::log_gamma(q) / q);
  t.add("zeta_prime", gs::hurwitz_zeta_prime(X(-1), q) / q2);
  return t;
}

// (-1)^(k+1) L_{2k+1}(q)
Terms l_odd_signed(int k, const X& q) {
  Terms t;
  const int n = 2 * k + 2;
  const X lq = xln(q);
  t.add("elementary", X(1) / (n * n) - lq / n + 1 / (2 * q * (2 * k + 1)));
  X bsum = 0;
  for (int j = 0; j < k; ++j) {
    bsum += rat(bernoulli_number(2 * j + 2)) / (X(j + 1) * (2 * k - 2 * j) * xpow(q, 2 * j + 2));
  }
  bsum /= 2;
  bsum += rat(bernoulli_number(n)) / (n * xpow(q, n)) * (lq - rat(harmonic(2 * k + 1)));
  t.add("bernoulli", bsum);
  X nsum = 0;
  for (int j = 0; j <= 2 * k + 1; ++j) {
    nsum += sign(j) * factorial_as<X>(2 * k + 1) / factorial_as<X>(2 * k + 1 - j) * psi_neg(j, q) / xpow(q, j + 1);
  }
  t.add("negapolygamma", nsum);
  return t;
}

// (-1)^(k+1) times the FermiPlus / Csch L_{2k+1} integral
Terms l_odd_variant_signed(int k, const X& q, KernelKind target) {
  Terms t;
  const int n = 2 * k + 2;
  const X lq = xln(q);
  const X l2 = xc().ln2;
  const bool fermi = target == KernelKind::FermiPlus;
  if (fermi) {
    t.add("elementary", X(-1) / (n * n) + 2 * l2 / n + lq / n);
  } else {
    t.add("elementary", 2 * l2 / n + 1 / (2 * q * (2 * k + 1)));
  }
  X bsum = 0;
  for (int j = 0; j < k; ++j) {
    const X damp = 1 - xpow(X(2), fermi ? -2 * j - 1 : -2 * j - 2);
    bsum += rat(bernoulli_number(2 * j + 2)) * damp / (X(j + 1) * (2 * k - 2 * j) * xpow(q, 2 * j + 2));
  }
  if (fermi) bsum /= 2;
  const X p = xpow(X(2), fermi ? -(2 * k + 1) : -(2 * k + 2));
  const X block = (1 - p) * lq - l2 * p - (1 - p) * rat(harmonic(2 * k + 1));
  bsum += (fermi ? X(1) : X(2)) * rat(bernoulli_number(n)) / (n * xpow(q, n)) * block;
  t.add("bernoulli", bsum);
  const X q2 = 2 * q;
  X nsum = 0;
  for (int j = 0; j <= 2 * k + 1; ++j) {
    const X bracket = psi_neg(j, q) - psi_neg(j, q2) / xpow(X(2), fermi ? j : j + 1);
    nsum += sign(j) * factorial_as<X>(2 * k + 1) / (factorial_as<X>(2 * k + 1 - j) * xpow(q, j + 1)) * bracket;
  }
  t.add("negapolygamma", fermi ? nsum : 2 * nsum);
  return t;
}

Terms t0_derivative_terms(const X& q) {
  Terms t;
  const X q2 = q * q;
  t.add("elementary", -1 / (2 * q) + (1 - xln(q)) / (4 * q2) + xc().ln_sqrt_2pi / (2 * q2));
  t.add("polygamma", gs::digamma(q) / (2 * q));
  t.add("log_gamma", -gs::log_gamma(q) / (2 * q2));
  return t;
}

ClosedFormValue signed_result(Terms t, int parity_exponent) {
  if (parity_exponent % 2 != 0) t.scale(X(-1));
  return t.finish();
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::T: return "T";
    case Family::L: return "L";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'I': return Family::I;
      case 'T': return Family::T;
      case 'L': return Family::L;
      default: break;
    }
  }
  throw ArgumentError("unknown family '" + std::string(text) + "' (expected I, T or L)");
}

IntegrandSpec family_integrand(Family family, int index) {
  if (index < 0) throw ArgumentError("family index must be >= 0");
  switch (family) {
    case Family::I:
      return {[index](double t) { return t * std::pow(1 + t * t, -(index + 1)); }, 0.0};
    case Family::T:
      return {[index](double t) { return std::pow(t, index) * std::atan(t); }, index + 0.5};
    case Family::L:
      return {[index](double t) { return std::pow(t, index) * std::log1p(t * t); }, index + 0.5};
  }
  throw ArgumentError("unknown family");
}

bool has_closed_form(const FamilyId& id) {
  if (id.index < 0) return false;
  switch (id.family) {
    case Family::I: return id.kernel == KernelKind::BoseMinus || id.index >= 1;
    case Family::T: return id.index % 2 == 0;
    case Family::L: return id.index % 2 == 1;
  }
  return false;
}

ClosedFormValue closed_form(const FamilyId& id, double q) {
  if (!has_closed_form(id)) {
    throw NoClosedFormError("no closed form for " + std::string(to_string(id.family)) + "_" +
                            std::to_string(id.index) + " with the " + std::string(to_string(id.kernel)) +
                            " kernel, use the oracle");
  }
  const bool bose = id.kernel == KernelKind::BoseMinus;
  switch (id.family) {
    case Family::I: return bose ? I_closed(id.index, q) : I_variant_closed(id.index, q, id.kernel);
    case Family::T: {
      const int k = id.index / 2;
      if (!bose) return T_even_variant_closed(k, q, id.kernel);
      return k == 0 ? T0_closed(q) : T_even_closed(k, q);
    }
    case Family::L: {
      const int k = id.index / 2;
      return bose ? L_odd_closed(k, q) : L_odd_variant_closed(k, q, id.kernel);
    }
  }
  throw ArgumentError("unknown family");
}

QuadratureResult oracle(const FamilyId& id, double q, double rel_tol) {
  return integrate(family_integrand(id.family, id.index), id.kernel, q, rel_tol);
}

ClosedFormValue I_closed(int k, double q) {
  if (k < 0) throw ArgumentError("I_closed: k must be >= 0");
  check_q(q, "I_closed");
  return i_terms(k, X(q)).finish();
}

ClosedFormValue T0_closed(double q) {
  check_q(q, "T0_closed");
  return t0_terms(X(q)).finish();
}

ClosedFormValue T_even_closed(int k, double q) {
  if (k < 1) throw ArgumentError("T_even_closed: k must be >= 1 (T0_closed covers k = 0)");
  check_q(q, "T_even_closed");
  return signed_result(t_even_signed(k, X(q)), k);
}

ClosedFormValue L1_closed(double q) {
  check_q(q, "L1_closed");
  return l1_terms(X(q)).finish();
}

ClosedFormValue L_odd_closed(int k, double q) {
  if (k < 0) throw ArgumentError("L_odd_closed: k must be >= 0");
  if (k == 0) return L1_closed(q);
  return L_odd_general(k, q);
}

ClosedFormValue L_odd_general(int k, double q) {
  if (k < 0) throw ArgumentError("L_odd_general: k must be >= 0");
  check_q(q, "L_odd_general");
  return signed_result(l_odd_signed(k, X(q)), k + 1);
}

double I_recursion_check(int m, double q, ValueSource source) {
  if (m < 1) throw ArgumentError("I_recursion_check: m must be >= 1");
  check_q(q, "I_recursion_check");
  const X x(q);
  X residual = 0;
  X scale = 0;
  for (int p = (m + 1) / 2; p <= m; ++p) {
    const X ip = source == ValueSource::ClosedForm ? i_terms(p, x).total()
                                                   : X(oracle({Family::I, p, KernelKind::BoseMinus}, q).value);
    const X term = sign(p) * xpow(X(2), 2 * p) * xbinom(p, m - p) * ip;
    residual += term;
    scale = std::max(scale, abs(term));
  }
  const X rhs = xpow(X(2), m - 1) *
                (xpow(x, m) * gs::polygamma(m, x) / factorial_as<X>(m) + sign(m) / (2 * x) + sign(m) / m);
  residual += rhs;
  scale = std::max(scale, abs(rhs));
  return to_double(residual / scale);
}

double jplusk_residual(int m, double q, ValueSource source) {
  if (m < 0) throw ArgumentError("jplusk_residual: m must be >= 0");
  check_q(q, "jplusk_residual");
  const X x(q);
  const bool closed = source == ValueSource::ClosedForm;
  X residual = 0;
  X scale = 0;
  auto add = [&](const X& term) {
    residual += term;
    scale = std::max(scale, abs(term));
  };
  for (int k = 0; 2 * k <= m; ++k) {
    X tk;
    if (closed) {
      tk = k == 0 ? t0_terms(x).total() : sign(k) * t_even_signed(k, x).total();
    } else {
      tk = X(oracle({Family::T, 2 * k, KernelKind::BoseMinus}, q).value);
    }
    add(2 * sign(k) * xbinom(m, 2 * k) * tk);
  }
  for (int k = 0; 2 * k + 1 <= m; ++k) {
    X lk;
    if (closed) {
      lk = k == 0 ? l1_terms(x).total() : sign(k + 1) * l_odd_signed(k, x).total();
    } else {
      lk = X(oracle({Family::L, 2 * k + 1, KernelKind::BoseMinus}, q).value);
    }
    add(sign(k) * xbinom(m, 2 * k + 1) * lk);
  }
  const X a = gs::balanced_A(m + 1, x);
  const X b = gs::bernoulli_polynomial(m + 1, x);
  const X denom = X(m + 1) * xpow(x, m + 1);
  add(-a / denom);
  add(b * xln(x) / denom);
  add(-X(1) / ((m + 1) * (m + 1)));
  return to_double(residual / scale);
}

double transform_kernel(const std::function<double(double)>& base, double q, KernelKind target) {
  check_variant_kernel(target, "transform_kernel");
  check_q(q, "transform_kernel");
  const double f1 = base(q);
  const double f2 = base(2 * q);
  return target == KernelKind::FermiPlus ? f1 - 2 * f2 : 2 * f1 - 2 * f2;
}

ClosedFormValue I_variant_closed(int k, double q, KernelKind target) {
  if (k < 1) throw ArgumentError("I_variant_closed: k must be >= 1");
  check_variant_kernel(target, "I_variant_closed");
  check_q(q, "I_variant_closed");
  return i_variant_terms(k, X(q), target).finish();
}

ClosedFormValue T_even_variant_closed(int k, double q, KernelKind target) {
  if (k < 0) throw ArgumentError("T_even_variant_closed: k must be >= 0");
  check_variant_kernel(target, "T_even_variant_closed");
  check_q(q, "T_even_variant_closed");
  if (k == 0) return t0_variant_terms(X(q), target).finish();
  return signed_result(t_even_variant_signed(k, X(q), target), k);
}

ClosedFormValue L_odd_variant_closed(int k, double q, KernelKind target) {
  if (k < 0) throw ArgumentError("L_odd_variant_closed: k must be >= 0");
  check_variant_kernel(target, "L_odd_variant_closed");
  check_q(q, "L_odd_variant_closed");
  return signed_result(l_odd_variant_signed(k, X(q), target), k + 1);
}

ClosedFormValue T0_derivative(double q) {
  check_q(q, "T0_derivative");
  return t0_derivative_terms(X(q)).finish();
}

std::pair<double, double> sinh_sq_integrals() {
  // d/dq T_0(q) = -(pi/2) * integral of t atan t / sinh^2(pi q t)
  const X factor = -2 / pi<X>();
  return {to_double(factor * t0_derivative_terms(X(1)).total()),
          to_double(factor * t0_derivative_terms(X(2)).total())};
}

std::pair<QuadratureResult, QuadratureResult> sinh_sq_oracle() {
  auto integrand = [](double c) {
    return [c](double t) {
      const double s = std::sinh(c * t);
      return t * std::atan(t) / (s * s);
    };
  };
  QuadratureOptions options;
  options.rel_tol = 1e-13;
  // the integrands fall below 1e-40 of their peak well before these cutoffs
  return {integrate_interval(integrand(std::numbers::pi), 0, 16, options),
          integrate_interval(integrand(2 * std::numbers::pi), 0, 8, options)};
}

double bernoulli_from_hurwitz_check(int m, double q) {
  if (m < 0) throw ArgumentError("bernoulli_from_hurwitz_check: m must be >= 0");
  check_q(q, "bernoulli_from_hurwitz_check");
  double integral = 0;
  if (m >= 1) {
    // sin(-m atan t) (1+t^2)^(m/2) is minus the terminating sine polynomial
    const TrigPolynomial poly = trig_poly_in_t(m, Parity::SineLike);
    std::vector<double> c;
    for (const auto& r : poly.coeffs) c.push_back(r.to_double());
    IntegrandSpec spec{[c](double t) {
                         const double t2 = t * t;
                         double acc = 0;
                         for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t2 + *it;
                         return -acc * t;
                       },
                       static_cast<double>(m)};
    integral = integrate(spec, KernelKind::BoseMinus, q, 1e-13).value;
  }
  const double qm1 = std::pow(q, m + 1);
  const double zeta = 0.5 * std::pow(q, m) - qm1 / (m + 1) + 2 * qm1 * integral;
  return -(m + 1) * zeta - bernoulli_polynomial(m + 1, q);
}

double intpoly_check(int n, double q) {
  if (n < 1) throw ArgumentError("intpoly_check: n must be >= 1");
  check_q(q, "intpoly_check");
  QuadratureOptions options;
  options.rel_tol = 1e-13;
  const auto lhs = integrate_interval([n](double r) { return std::pow(r, n) * digamma(r); }, 0, q, options);
  const X x(q);
  X rhs = 0;
  for (int j = 0; j <= n; ++j) rhs += sign(j) / factorial_as<X>(n - j) * xpow(x, n - j) * psi_neg(j, x);
  rhs -= sign(n) * gs::negapolygamma_at_zero<X>(n);
  rhs *= factorial_as<X>(n);
  return lhs.value - to_double(rhs);
}

std::vector<SpecialValueRow> special_value_table(bool with_oracle) {
  const auto& c = special_constants();
  const double pi_d = std::numbers::pi;
  const double ls = c.ln_sqrt_2pi;
  const double zp = c.zeta_prime_minus1;
  const double lg = c.ln_gamma_quarter;
  const KernelKind bose = KernelKind::BoseMinus;
  const KernelKind fermi = KernelKind::FermiPlus;
  const KernelKind csch = KernelKind::Csch;

  std::vector<SpecialValueRow> rows;
  auto family_row = [&](const std::string& name, const std::string& expr, Family f, int index, KernelKind kernel,
                        double q, double symbolic) {
    SpecialValueRow r{name, expr, q, closed_form({f, index, kernel}, q).value, symbolic, 0, 0};
    if (with_oracle) {
      const auto o = oracle({f, index, kernel}, q);
      r.oracle = o.value;
      r.oracle_error = o.abs_error_estimate;
    }
    rows.push_back(r);
  };

  family_row("T0_bose_q1", "1/2 - ln sqrt(2 pi)/2", Family::T, 0, bose, 1, 0.5 - ls / 2);
  family_row("T0_bose_q1/2", "1/2 - ln 2/2", Family::T, 0, bose, 0.5, 0.5 - c.ln2 / 2);
  family_row("T0_bose_q1/4", "1/2 - ln pi - 2 ln 2 + 2 ln Gamma(1/4)", Family::T, 0, bose, 0.25,
             0.5 - c.ln_pi - 2 * c.ln2 + 2 * lg);

  auto zeta_row = [&](const std::string& name, const std::string& expr, double q, double symbolic) {
    SpecialValueRow r{name, expr, q, hurwitz_zeta_prime(-1, q, HurwitzBackend::EulerMaclaurin), symbolic, 0, 0};
    if (with_oracle) {
      r.oracle = hurwitz_zeta_prime(-1, q, HurwitzBackend::HermiteQuadrature);
      r.oracle_error = 1e-13 * std::abs(r.oracle);
    }
    rows.push_back(r);
  };
  zeta_row("zeta_prime(-1,1/2)", "-zeta'(-1)/2 - ln 2/24", 0.5, -zp / 2 - c.ln2 / 24);
  zeta_row("zeta_prime(-1,1/4)", "-zeta'(-1)/8 + G/(4 pi)", 0.25, -zp / 8 + c.catalan / (4 * pi_d));

  family_row("L1_bose_q1", "zeta'(-1) + ln sqrt(2 pi) - 3/4", Family::L, 1, bose, 1, zp + ls - 0.75);
  family_row("L1_bose_q1/2", "-2 zeta'(-1) + (2/3) ln 2 - 3/4", Family::L, 1, bose, 0.5,
             -2 * zp + 2.0 / 3 * c.ln2 - 0.75);
  family_row("L1_bose_q1/4", "-2 zeta'(-1) + (5/3) ln 2 - 3/4 + 4G/pi - 4 ln Gamma(1/4) + 4 ln sqrt(2 pi)",
             Family::L, 1, bose, 0.25, -2 * zp + 5.0 / 3 * c.ln2 - 0.75 + 4 * c.catalan / pi_d - 4 * lg + 4 * ls);

  family_row("T0_fermi_q1", "(3/4) ln 2 - 1/2", Family::T, 0, fermi, 1, 0.75 * c.ln2 - 0.5);
  family_row("T0_fermi_q1/2", "ln pi/2 - 1/2", Family::T, 0, fermi, 0.5, c.ln_pi / 2 - 0.5);
  family_row("T0_fermi_q1/4", "-1/2 - ln 2 + 2 ln Gamma(1/4) - ln pi", Family::T, 0, fermi, 0.25,
             -0.5 - c.ln2 + 2 * lg - c.ln_pi);
  family_row("T0_csch_q1", "ln 2/2 - ln pi/4", Family::T, 0, csch, 1, c.ln2 / 2 - c.ln_pi / 4);
  family_row("T0_csch_q1/2", "ln pi/2 - ln 2/2", Family::T, 0, csch, 0.5, c.ln_pi / 2 - c.ln2 / 2);
  family_row("T0_csch_q1/4", "4 ln Gamma(1/4) - 2 ln pi - 3 ln 2", Family::T, 0, csch, 0.25,
             4 * lg - 2 * c.ln_pi - 3 * c.ln2);

  family_row("L1_csch_q1", "-(11/24) ln 2 + ln pi/2 + (3/2) zeta'(-1)", Family::L, 1, csch, 1,
             -11.0 / 24 * c.ln2 + c.ln_pi / 2 + 1.5 * zp);
  family_row("L1_csch_q1/2", "(1/3) ln 2 - ln pi - 6 zeta'(-1)", Family::L, 1, csch, 0.5,
             c.ln2 / 3 - c.ln_pi - 6 * zp);
  family_row("L1_csch_q1/4", "6 ln 2 + 4 ln pi + 8G/pi - 8 ln Gamma(1/4)", Family::L, 1, csch, 0.25,
             6 * c.ln2 + 4 * c.ln_pi + 8 * c.catalan / pi_d - 8 * lg);

  const auto [v1, v2] = sinh_sq_integrals();
  SpecialValueRow s1{"sinh2_pi", "1/(2 pi) + gamma/pi - ln sqrt(2 pi)/pi", 1, v1,
                     1 / (2 * pi_d) + c.euler_gamma / pi_d - ls / pi_d, 0, 0};
  SpecialValueRow s2{"sinh2_2pi", "-1/(8 pi) + gamma/(2 pi) - ln pi/(8 pi)", 2, v2,
                     -1 / (8 * pi_d) + c.euler_gamma / (2 * pi_d) - c.ln_pi / (8 * pi_d), 0, 0};
  if (with_oracle) {
    const auto [o1, o2] = sinh_sq_oracle();
    s1.oracle = o1.value;
    s1.oracle_error = o1.abs_error_estimate;
    s2.oracle = o2.value;
    s2.oracle_error = o2.abs_error_estimate;
  }
  rows.push_back(s1);
  rows.push_back(s2);
  return rows;
}

}  // namespace negapoly
