#include "negapoly/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace negapoly {

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli_number(int k) {
  if (k < 0) throw ArgumentError("bernoulli_number: k must be >= 0, got " + std::to_string(k));
  {
    std::shared_lock lock(bernoulli_mutex);
    if (k < static_cast<int>(bernoulli_cache.size())) return bernoulli_cache[k];
  }
  std::unique_lock lock(bernoulli_mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  for (int n = static_cast<int>(bernoulli_cache.size()); n <= k; ++n) {
    if (n > 1 && n % 2 == 1) {
      bernoulli_cache.emplace_back(0);
      continue;
    }
    Rational acc;
    BigInt c = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      if (!bernoulli_cache[j].is_zero()) acc += Rational(c) * bernoulli_cache[j];
      c = c * (n + 1 - j) / (j + 1);
    }
    bernoulli_cache.push_back(-acc / Rational(n + 1));
  }
  return bernoulli_cache[k];
}

Rational harmonic(int n) {
  if (n < 0) throw ArgumentError("harmonic: n must be >= 0, got " + std::to_string(n));
  Rational h;
  for (int r = 1; r <= n; ++r) h += Rational(1, r);
  return h;
}

BigInt binomial(long long n, long long k) {
  if (k < 0) return 0;
  if (n < 0) {
    BigInt c = binomial(k - n - 1, k);
    return (k % 2 == 0) ? c : BigInt(-c);
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (long long i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

BigInt factorial(int n) {
  if (n < 0) throw ArgumentError("factorial: n must be >= 0");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace negapoly
