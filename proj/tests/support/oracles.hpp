#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// root finding, lifting or CRT code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Roots of the polynomial with ascending coefficients `c` modulo n, by
/// evaluating every residue.
inline std::vector<u64> brute_roots(const std::vector<i64>& c, u64 n) {
  std::vector<u64> out;
  for (u64 x = 0; x < n; ++x) {
    __int128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = (acc * static_cast<__int128>(x) + *it) % static_cast<__int128>(n);
    }
    if (acc < 0) acc += n;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 trial_spf(u64 n) {
  if (n < 2) return n;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

inline std::complex<long double> exp_sum(const std::vector<u64>& roots, i64 h, u64 n) {
  std::complex<long double> acc = 0;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const i64 hn = ((h % static_cast<i64>(n)) + static_cast<i64>(n)) % static_cast<i64>(n);
  for (u64 mu : roots) {
    const u64 k = static_cast<u64>((static_cast<__int128>(hn) * mu) % n);
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(n);
    acc += std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

struct Pair {
  u64 a, b, n;
};

/// Every pair (mu, nu) of roots of f and g modulo n for n <= x, in (n, mu, nu) order.
inline std::vector<Pair> brute_pairs(const std::vector<i64>& f, const std::vector<i64>& g, u64 x, bool primes_only = false) {
  std::vector<Pair> out;
  for (u64 n = 1; n <= x; ++n) {
    if (primes_only && !is_prime(n)) continue;
    const auto rf = brute_roots(f, n);
    const auto rg = brute_roots(g, n);
    for (u64 a : rf)
      for (u64 b : rg) out.push_back({a, b, n});
  }
  return out;
}

/// Discriminant of a x^3 + b x^2 + c x + d by the closed formula.
inline i64 cubic_discriminant(i64 a, i64 b, i64 c, i64 d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

}  // namespace oracle
