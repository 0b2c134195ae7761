#include "negapoly/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "negapoly/combinatorics.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/generic/special.hpp"
#include "negapoly/scalar.hpp"

namespace negapoly {

std::string_view to_string(KernelKind k) {
  switch (k) {
    case KernelKind::BoseMinus: return "bose";
    case KernelKind::FermiPlus: return "fermi";
    case KernelKind::Csch: return "csch";
  }
  return "?";
}

KernelKind parse_kernel(std::string_view text) {
  if (text == "bose" || text == "BoseMinus") return KernelKind::BoseMinus;
  if (text == "fermi" || text == "FermiPlus") return KernelKind::FermiPlus;
  if (text == "csch" || text == "Csch") return KernelKind::Csch;
  throw ArgumentError("unknown kernel '" + std::string(text) + "' (expected bose, fermi or csch)");
}

double kernel_value(KernelKind kind, double q, double t) {
  const double x = 2 * std::numbers::pi * q * t;
  switch (kind) {
    case KernelKind::BoseMinus: return 1.0 / std::expm1(x);
    case KernelKind::FermiPlus: {
      const double e = std::exp(-x);
      return e / (1 + e);
    }
    case KernelKind::Csch: return 2 * std::exp(-x) / -std::expm1(-2 * x);
  }
  return 0;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule on [-1, 1].
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a = 0;
  double b = 0;
  double value = 0;
  double error = 0;
  double resabs = 0;
};

template <class F>
Panel gauss_kronrod21(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double resg = 0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  double fv1[10];
  double fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  p.resabs = resabs * std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  if (p.resabs > std::numeric_limits<double>::min() / (50 * kEps)) err = std::max(50 * kEps * p.resabs, err);
  p.error = err;
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

/// Global adaptive bisection over a growing set of panels.
class AdaptiveIntegrator {
 public:
  AdaptiveIntegrator(std::function<double(double)> f, std::size_t max_panels)
      : f_(std::move(f)), max_panels_(max_panels) {}

  void add_interval(double a, double b, int pieces) {
    const double h = (b - a) / pieces;
    for (int i = 0; i < pieces; ++i) {
      const double lo = a + i * h;
      const double hi = (i + 1 == pieces) ? b : a + (i + 1) * h;
      push(evaluate(lo, hi));
    }
  }

  /// Bisects the worst panel until the summed error meets the target.
  /// Returns false when the panel budget is exhausted first.
  bool refine(double rel_tol, double extra_error = 0) {
    while (true) {
      const double value = running_value_;
      const double target = std::max(rel_tol * std::abs(value), 100 * kEps * running_resabs_);
      if (running_error_ + extra_error <= target) return true;
      if (active_.empty()) return true;
      if (active_.size() + done_.size() >= max_panels_) return false;
      Panel worst = active_.top();
      active_.pop();
      remove(worst);
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 1e-13 * std::abs(mid)) {
        // no further resolution possible at this scale
        done_.push_back(worst);
        add_totals(worst);
        continue;
      }
      push(evaluate(worst.a, mid));
      push(evaluate(mid, worst.b));
    }
  }

  /// Value and error summed in left-to-right panel order.
  QuadratureResult result(double extra_error = 0) const {
    std::vector<Panel> all = done_;
    auto copy = active_;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum<double> value;
    CompensatedSum<double> error;
    for (const auto& p : all) {
      value.add(p.value);
      error.add(p.error);
    }
    return {value.value(), error.value() + extra_error, evaluations_};
  }

  double current_value() const { return running_value_; }
  double current_resabs() const { return running_resabs_; }

 private:
  Panel evaluate(double a, double b) {
    evaluations_ += 21;
    return gauss_kronrod21(f_, a, b);
  }
  void push(const Panel& p) {
    active_.push(p);
    add_totals(p);
  }
  void add_totals(const Panel& p) {
    running_value_ += p.value;
    running_error_ += p.error;
    running_resabs_ += p.resabs;
  }
  void remove(const Panel& p) {
    running_value_ -= p.value;
    running_error_ -= p.error;
    running_resabs_ -= p.resabs;
  }

  std::function<double(double)> f_;
  std::size_t max_panels_;
  std::priority_queue<Panel, std::vector<Panel>, ByError> active_;
  std::vector<Panel> done_;
  double running_value_ = 0;
  double running_error_ = 0;
  double running_resabs_ = 0;
  std::size_t evaluations_ = 0;
};

/// f(t) K(q, t), with t K(q, t) treated as the smooth factor for the kernels
/// that are singular at the origin.
double weighted_integrand(const std::function<double(double)>& f, KernelKind kind, double q, double t) {
  const double two_pi_q = 2 * std::numbers::pi * q;
  const double x = two_pi_q * t;
  switch (kind) {
    case KernelKind::BoseMinus: {
      const double tk = (t < 1e-8) ? (1 - 0.5 * x) / two_pi_q : t / std::expm1(x);
      return tk == 0 ? 0.0 : (f(t) / t) * tk;
    }
    case KernelKind::Csch: {
      const double tk = (t < 1e-8) ? (1 - x * x / 6) / two_pi_q : 2 * t * std::exp(-x) / -std::expm1(-2 * x);
      return tk == 0 ? 0.0 : (f(t) / t) * tk;
    }
    case KernelKind::FermiPlus: {
      const double e = std::exp(-x);
      return e == 0 ? 0.0 : f(t) * (e / (1 + e));
    }
  }
  return 0;
}

/// Kernel bound K(q,t) <= c exp(-2 pi q t) for t >= T.
double kernel_envelope(KernelKind kind, double x_cut) {
  switch (kind) {
    case KernelKind::BoseMinus: return 1 / -std::expm1(-x_cut);
    case KernelKind::FermiPlus: return 1;
    case KernelKind::Csch: return 2 / -std::expm1(-2 * x_cut);
  }
  return 2;
}

void check_tolerance(double rel_tol) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-3)) {
    throw DomainError("integrate: target_rel_tol must lie in [1e-14, 1e-3], got " + std::to_string(rel_tol));
  }
}

}  // namespace

QuadratureResult integrate(const IntegrandSpec& spec, KernelKind kernel, double q, double target_rel_tol) {
  require_positive(q, "integrate");
  check_tolerance(target_rel_tol);
  if (!spec.f) throw ArgumentError("integrate: empty integrand");
  const double p = std::max(0.0, spec.growth_exponent);
  const double two_pi_q = 2 * std::numbers::pi * q;

  // x - p ln x - ln Gamma(p+1) >= ln(100 / tol): the relative weight of the
  // tail for a t^p numerator is below a hundredth of the tolerance.
  const double goal = std::log(100 / target_rel_tol) + std::lgamma(p + 1);
  double x_cut = goal;
  for (int i = 0; i < 50; ++i) x_cut = goal + p * std::log(std::max(x_cut, 1.0));
  x_cut = std::max(x_cut, 2 * p + 8);
  double t_cut = x_cut / two_pi_q;

  const std::function<double(double)> g = [&](double t) {
    return weighted_integrand(spec.f, kernel, q, t);
  };
  AdaptiveIntegrator integrator(g, 10000);
  integrator.add_interval(0, t_cut, 16);

  double tail = 0;
  for (int extension = 0;; ++extension) {
    // tail bound: |f(t)| <= F (t/T)^p beyond T, integrated against c exp(-2 pi q t)
    double envelope_f = 0;
    for (double frac : {1.0, 0.95, 0.9, 0.85, 0.8}) {
      const double t = frac * t_cut;
      envelope_f = std::max(envelope_f, std::abs(spec.f(t)) * std::pow(1 / frac, p));
    }
    const double rate = two_pi_q - p / t_cut;
    tail = rate > 0 ? envelope_f * kernel_envelope(kernel, two_pi_q * t_cut) * std::exp(-two_pi_q * t_cut) / rate
                    : std::numeric_limits<double>::infinity();
    const auto tail_small = [&] {
      const double scale = std::max(std::abs(integrator.current_value()), 100 * kEps * integrator.current_resabs());
      return tail <= 1e-2 * target_rel_tol * scale || extension >= 40;
    };
    if (tail_small()) {
      if (!integrator.refine(target_rel_tol, tail)) {
        const auto best = integrator.result(tail);
        throw AccuracyError("integrate: panel budget exhausted before reaching rel_tol", best.value,
                            best.abs_error_estimate);
      }
      if (tail_small()) break;
    }
    const double next = 1.5 * t_cut;
    integrator.add_interval(t_cut, next, 4);
    t_cut = next;
  }
  return integrator.result(tail);
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw DomainError("integrate_interval: need finite a < b");
  }
  check_tolerance(options.rel_tol);
  AdaptiveIntegrator integrator(f, options.max_panels);
  integrator.add_interval(a, b, 4);
  if (!integrator.refine(options.rel_tol)) {
    const auto best = integrator.result();
    throw AccuracyError("integrate_interval: panel budget exhausted before reaching rel_tol", best.value,
                        best.abs_error_estimate);
  }
  return integrator.result();
}

double moment_bose(int k, double q) {
  if (k < 0) throw ArgumentError("moment_bose: k must be >= 0");
  require_positive(q, "moment_bose");
  Rational c = bernoulli_number(2 * k + 2) / Rational(4 * (k + 1));
  if (k % 2 == 1) c = -c;
  return c.to_double() / std::pow(q, 2 * k + 2);
}

double moment_gamma_zeta(double nu, double mu) {
  if (!(nu > 1) || !std::isfinite(nu)) throw DomainError("moment_gamma_zeta: nu must be > 1");
  require_positive(mu, "moment_gamma_zeta");
  const Extended n(nu);
  const Extended log_factor = generic::log_gamma(n) - n * generic::detail::ln(Extended(mu));
  return to_double(generic::detail::expo(log_factor) * generic::riemann_zeta(n));
}

}  // namespace negapoly
