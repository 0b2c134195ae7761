#include "negapoly/special.hpp"

#include <cmath>

#include "negapoly/generic/special.hpp"

namespace negapoly {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

}  // namespace

double bernoulli_polynomial(int m, double q) {
  require_finite(q, "bernoulli_polynomial");
  return to_double(generic::bernoulli_polynomial<Extended>(m, Extended(q)));
}

double pochhammer(double z, int n) {
  require_finite(z, "pochhammer");
  return to_double(generic::pochhammer<Extended>(Extended(z), n));
}

double log_gamma(double q) { return to_double(generic::log_gamma<Extended>(Extended(q))); }

double digamma(double q) { return to_double(generic::digamma<Extended>(Extended(q))); }

double polygamma(int m, double q) { return to_double(generic::polygamma<Extended>(m, Extended(q))); }

double riemann_zeta(double s) { return to_double(generic::riemann_zeta<Extended>(Extended(s))); }

double zeta_prime_neg(int n) { return to_double(generic::zeta_prime_neg<Extended>(n)); }

}  // namespace negapoly
