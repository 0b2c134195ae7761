#pragma once

#include "negapoly/scalar.hpp"

namespace negapoly {

/// Reference values to 40 significant digits, produced by an independent
/// arbitrary-precision package. They are stored as text so that no part of
/// this library's own evaluation path feeds into them.
namespace constant_text {
inline constexpr const char* kLn2 = "0.6931471805599453094172321214581765680755";
inline constexpr const char* kLnPi = "1.144729885849400174143427351353058711647";
inline constexpr const char* kEulerGamma = "0.5772156649015328606065120900824024310422";
inline constexpr const char* kCatalan = "0.9159655941772190150546035149323841107741";
inline constexpr const char* kZetaPrimeMinus1 = "-0.1654211437004509292139196602427806427640";
inline constexpr const char* kLnGammaQuarter = "1.288022524698077457370610440219717295925";
}  // namespace constant_text

template <class T>
struct BasicSpecialConstants {
  T ln2;
  T ln_pi;
  T euler_gamma;
  T catalan;            // G
  T zeta_prime_minus1;  // zeta'(-1)
  T ln_gamma_quarter;   // ln Gamma(1/4)
  T ln_sqrt_2pi;        // (ln 2 + ln pi) / 2

  static BasicSpecialConstants load() {
    BasicSpecialConstants c;
    c.ln2 = from_string<T>(constant_text::kLn2);
    c.ln_pi = from_string<T>(constant_text::kLnPi);
    c.euler_gamma = from_string<T>(constant_text::kEulerGamma);
    c.catalan = from_string<T>(constant_text::kCatalan);
    c.zeta_prime_minus1 = from_string<T>(constant_text::kZetaPrimeMinus1);
    c.ln_gamma_quarter = from_string<T>(constant_text::kLnGammaQuarter);
    c.ln_sqrt_2pi = (c.ln2 + c.ln_pi) / 2;
    return c;
  }
};

using SpecialConstants = BasicSpecialConstants<double>;

template <class T>
const BasicSpecialConstants<T>& special_constants_as() {
  static const BasicSpecialConstants<T> c = BasicSpecialConstants<T>::load();
  return c;
}

inline const SpecialConstants& special_constants() { return special_constants_as<double>(); }

}  // namespace negapoly
