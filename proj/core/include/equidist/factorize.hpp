#pragma once

#include <cstdint>
#include <iterator>
#include <string_view>
#include <vector>

#include "equidist/modarith.hpp"

namespace equidist {

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  u64 value() const {
    u64 v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The factorization of 1 is empty.
using Factorization = std::vector<PrimePower>;

u64 product(const Factorization& fac);
bool is_squarefree(const Factorization& fac);

/// Trial-division factorization for isolated moduli (tests, twisted
/// multiplicativity checks). Not meant for large inputs.
Factorization factor_trial(u64 n);

enum class ModulusFilter { all, prime, squarefree };

ModulusFilter parse_filter(std::string_view text);
std::string_view to_string(ModulusFilter f);

inline constexpr u64 kDefaultSieveCap = u64{1} << 31;

/// Smallest-prime-factor table over [0, limit]. spf(1) == 1, spf(p) == p for
/// primes. Immutable after construction.
class FactorTable {
 public:
  /// Throws std::length_error("limit too large") above `cap`,
  /// std::invalid_argument when limit == 0.
  explicit FactorTable(u64 limit, u64 cap = kDefaultSieveCap);

  u64 limit() const { return limit_; }
  u64 spf(u64 n) const;
  bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }

  /// Throws std::out_of_range for n outside [1, limit].
  Factorization factor(u64 n) const;

  /// Same as factor() but reuses `out`'s storage.
  void factor_into(u64 n, Factorization& out) const;

  bool accepts(u64 n, ModulusFilter filter) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

struct Modulus {
  u64 n = 0;
  Factorization factors;
};

/// Ordered moduli of a table matching a filter, yielded with their
/// factorizations. `for (const Modulus& m : ModulusStream(table, filter))`.
class ModulusStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Modulus;
    using difference_type = std::ptrdiff_t;
    using pointer = const Modulus*;
    using reference = const Modulus&;

    iterator() = default;
    iterator(const FactorTable* table, ModulusFilter filter, u64 start, u64 stop);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.current_.n == b.current_.n; }

   private:
    void settle();
    const FactorTable* table_ = nullptr;
    ModulusFilter filter_ = ModulusFilter::all;
    u64 stop_ = 0;
    Modulus current_;
  };

  ModulusStream(const FactorTable& table, ModulusFilter filter);
  ModulusStream(const FactorTable& table, ModulusFilter filter, u64 first, u64 last);

  iterator begin() const { return iterator(table_, filter_, first_, last_ + 1); }
  iterator end() const { return iterator(table_, filter_, last_ + 1, last_ + 1); }

 private:
  const FactorTable* table_;
  ModulusFilter filter_;
  u64 first_;
  u64 last_;
};

}  // namespace equidist
