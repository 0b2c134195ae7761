#pragma once

// Floating scalar support shared by the generic numeric kernels.
//
// Every special function is written once as a template over the scalar type
// and instantiated for `double` (the public surface) and `Extended`, a 50
// decimal digit MPFR type used wherever the closed forms cancel heavily.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <type_traits>

#include "negapoly/errors.hpp"

namespace negapoly {

using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_supported_scalar_v = std::is_same_v<T, double> || std::is_same_v<T, Extended>;

template <class T>
T epsilon() {
  return std::numeric_limits<T>::epsilon();
}

/// Decimal digits carried by T.
template <class T>
int decimal_digits() {
  return std::numeric_limits<T>::digits10;
}

template <class T>
T from_string(const char* text) {
  if constexpr (std::is_same_v<T, double>) {
    return std::strtod(text, nullptr);
  } else {
    return T(text);
  }
}

template <class T>
double to_double(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

template <class T>
bool is_finite(const T& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

template <class T>
T pi() {
  return boost::math::constants::pi<T>();
}

/// sin(pi x) with exact reduction of the argument modulo 2.
template <class T>
T sin_pi(const T& x) {
  using std::fmod;
  using std::sin;
  using boost::multiprecision::fmod;
  using boost::multiprecision::sin;
  T r = fmod(x, T(2));
  if (r < 0) r += 2;
  if (r == 0 || r == 1) return T(0);
  if (r == T(0.5)) return T(1);
  if (r == T(1.5)) return T(-1);
  return sin(pi<T>() * r);
}

/// Running sum with Neumaier compensation.
template <class T>
class CompensatedSum {
 public:
  void add(const T& x) {
    using std::abs;
    using boost::multiprecision::abs;
    T t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + carry_; }

 private:
  T sum_ = 0;
  T carry_ = 0;
};

inline void require_positive(double q, const char* what) {
  if (!(q > 0) || !std::isfinite(q)) {
    throw DomainError(std::string(what) + ": argument must be finite and > 0, got " + std::to_string(q));
  }
}

}  // namespace negapoly
