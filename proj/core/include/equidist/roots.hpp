#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equidist/factorize.hpp"
#include "equidist/polynomial.hpp"

namespace equidist {

/// Roots of a polynomial modulo `modulus`, strictly increasing in [0, modulus).
struct RootSet {
  u64 modulus = 1;
  std::vector<u64> roots;

  std::size_t count() const { return roots.size(); }
  friend bool operator==(const RootSet&, const RootSet&) = default;
};

/// Roots divided by their modulus. Numerators stay exact; value() converts.
struct NormalizedRoots {
  u64 modulus = 1;
  std::vector<u64> numerators;

  double value(std::size_t i) const { return static_cast<double>(numerators[i]) / static_cast<double>(modulus); }
  std::size_t size() const { return numerators.size(); }
};

NormalizedRoots normalize(const RootSet& rs);

/// Primes up to this bound are handled by scanning all residues; above it
/// roots are split out of gcd(f, x^p - x).
inline constexpr u64 kDefaultBruteForceThreshold = 2048;

/// Largest prime power lift_roots accepts.
inline constexpr u64 kPrimePowerCap = u64{1} << 62;

/// Exhaustive scan of [0, n). Reference implementation for small n.
RootSet brute_force_roots(const IntPolynomial& f, u64 n);

/// Sorted roots of f modulo the prime p. Throws std::domain_error
/// ("polynomial vanishes mod p") when every coefficient is divisible by p.
std::vector<u64> roots_mod_p(const IntPolynomial& f, u64 p, u64 brute_force_threshold = kDefaultBruteForceThreshold);

/// Sorted roots of f modulo p^k, obtained by lifting roots level by level.
/// Throws std::overflow_error("prime power too large") above kPrimePowerCap.
std::vector<u64> lift_roots(const IntPolynomial& f, u64 p, unsigned k,
                            u64 brute_force_threshold = kDefaultBruteForceThreshold);

/// Combines per-prime-power root lists into the sorted roots modulo their
/// product. `parts` holds (prime power, roots mod that prime power).
std::vector<u64> crt_assemble(std::span<const std::pair<u64, const std::vector<u64>*>> parts);

/// Roots of f modulo n given the factorization of n. n == 1 yields {0}.
RootSet roots_mod_n(const IntPolynomial& f, u64 n, const Factorization& fac);

/// Roots of f modulo every prime power up to a limit, computed once up front
/// (split across `threads` workers by prime). Immutable afterwards and safe
/// for concurrent reads.
class RootCache {
 public:
  RootCache(const IntPolynomial& f, const FactorTable& table,
            u64 brute_force_threshold = kDefaultBruteForceThreshold, unsigned threads = 1);

  /// Takes prime-power entries from `seed` instead of recomputing them.
  /// Seeded roots are checked against f; a mismatch throws std::runtime_error.
  RootCache(const IntPolynomial& f, const FactorTable& table, const std::map<u64, RootSet>& seed,
            u64 brute_force_threshold = kDefaultBruteForceThreshold, unsigned threads = 1);

  const IntPolynomial& polynomial() const { return f_; }
  u64 limit() const { return limit_; }

  /// Roots modulo the prime power q = p^k (q <= limit).
  const std::vector<u64>& prime_power_roots(u64 q) const;

  std::size_t count_mod_n(const Factorization& fac) const;
  RootSet roots_mod_n(u64 n, const Factorization& fac) const;
  void roots_mod_n_into(u64 n, const Factorization& fac, RootSet& out) const;

  std::size_t entries() const { return by_prime_power_.size(); }
  std::size_t seeded_entries() const { return seeded_; }

  /// All cached prime-power root sets, ascending by modulus.
  std::vector<RootSet> prime_power_sets() const;

 private:
  IntPolynomial f_;
  u64 limit_;
  std::unordered_map<u64, std::vector<u64>> by_prime_power_;
  std::size_t seeded_ = 0;
};

/// r(n) for every modulus of the table accepted by the filter, ascending.
std::vector<std::pair<u64, std::size_t>> root_counts_up_to(const IntPolynomial& f, const FactorTable& table,
                                                           ModulusFilter filter);

/// True when every listed root satisfies f(mu) == 0 (mod n) and the list is
/// strictly increasing inside [0, n).
bool roots_are_sound(const IntPolynomial& f, const RootSet& rs);

}  // namespace equidist
