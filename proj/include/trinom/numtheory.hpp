#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace trinom::nt {

/// Least nonnegative residue of `a` modulo `m` (m > 0).
inline std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = a % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [prime, e] : factorize(n)) phi = phi / prime * (prime - 1);
  return phi;
}

/// Positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Writes q = p^t when q is a prime power; nullopt otherwise.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(f[0].first), f[0].second);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t order = euler_phi(m);
  for (auto [prime, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % prime == 0; ++i) {
      if (pow_mod(a, order / prime, m) != 1) break;
      order /= prime;
    }
  }
  return order;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace trinom::nt
