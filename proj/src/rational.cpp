#include "negapoly/rational.hpp"

namespace negapoly {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArgumentError("Rational: zero denominator");
  value_ = Impl(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw ArgumentError("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace negapoly
