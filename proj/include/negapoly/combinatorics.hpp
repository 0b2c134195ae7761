#pragma once

#include <vector>

#include "negapoly/rational.hpp"

namespace negapoly {

/// Bernoulli number B_k (B_1 = -1/2). Exact; cached, safe for concurrent callers.
Rational bernoulli_number(int k);

/// Harmonic number H_n, with H_0 = 0.
Rational harmonic(int n);

/// C(n, k) for any integers; zero when k < 0, or when 0 <= n < k.
/// Negative n follows the usual extension C(n, k) = (-1)^k C(k - n - 1, k).
BigInt binomial(long long n, long long k);

BigInt factorial(int n);

/// Largest index for which `bernoulli_table<T>()` holds values.
inline constexpr int kBernoulliTableSize = 160;

/// B_0 .. B_{kBernoulliTableSize-1} converted to T once, on first use.
template <class T>
const std::vector<T>& bernoulli_table() {
  static const std::vector<T> table = [] {
    std::vector<T> t;
    t.reserve(kBernoulliTableSize);
    for (int k = 0; k < kBernoulliTableSize; ++k) t.push_back(bernoulli_number(k).to<T>());
    return t;
  }();
  return table;
}

/// n! converted to T (exact for the integer range used here).
template <class T>
T factorial_as(int n) {
  T r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace negapoly
