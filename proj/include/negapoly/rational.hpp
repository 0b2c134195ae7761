#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

#include "negapoly/scalar.hpp"

namespace negapoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact ratio of arbitrary-size integers, always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(Raw{-value_}); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" for integers.
  std::string to_string() const;

  double to_double() const { return value_.convert_to<double>(); }

  template <class T>
  T to() const {
    if constexpr (std::is_same_v<T, double>) {
      return to_double();
    } else {
      return T(numerator()) / T(denominator());
    }
  }

 private:
  using Impl = boost::multiprecision::cpp_rational;
  struct Raw {
    Impl v;
  };
  explicit Rational(Raw r) : value_(std::move(r.v)) {}

  Impl value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace negapoly
