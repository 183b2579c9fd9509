#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sumdiff {

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Positive divisors of n in ascending order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw domain_error("divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> small, large;
  for (std::int64_t q = 1; q * q <= n; ++q) {
    if (n % q != 0) continue;
    small.push_back(q);
    if (q != n / q) large.push_back(n / q);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Prime factorization as (p, a) pairs with p ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw domain_error("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Exponent of p in n (n >= 1).
inline int valuation(std::int64_t n, std::int64_t p) {
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// All partitions of n as weakly decreasing lists, in reverse lexicographic
/// order ({n} first, {1,...,1} last). n = 0 yields the single empty partition.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Binomial coefficient as a double (saturates gracefully for large inputs).
inline double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace sumdiff
