#include "equidist/factorize.hpp"

#include <stdexcept>
#include <string>

namespace equidist {

u64 product(const Factorization& fac) {
  u64 v = 1;
  for (const auto& pp : fac) v *= pp.value();
  return v;
}

bool is_squarefree(const Factorization& fac) {
  for (const auto& pp : fac)
    if (pp.exponent > 1) return false;
  return true;
}

Factorization factor_trial(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  Factorization out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.push_back({d, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

ModulusFilter parse_filter(std::string_view text) {
  if (text == "all") return ModulusFilter::all;
  if (text == "prime") return ModulusFilter::prime;
  if (text == "squarefree") return ModulusFilter::squarefree;
  throw std::invalid_argument("unknown moduli filter '" + std::string(text) + "' (expected all|prime|squarefree)");
}

std::string_view to_string(ModulusFilter f) {
  switch (f) {
    case ModulusFilter::all:
      return "all";
    case ModulusFilter::prime:
      return "prime";
    case ModulusFilter::squarefree:
      return "squarefree";
  }
  return "all";
}

FactorTable::FactorTable(u64 limit, u64 cap) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("limit must be at least 1");
  if (limit > cap || limit >= (u64{1} << 32)) throw std::length_error("limit too large");
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

u64 FactorTable::spf(u64 n) const {
  if (n > limit_) throw std::out_of_range("modulus " + std::to_string(n) + " outside factor table");
  return spf_[n];
}

void FactorTable::factor_into(u64 n, Factorization& out) const {
  if (n == 0 || n > limit_)
    throw std::out_of_range("modulus " + std::to_string(n) + " outside [1, " + std::to_string(limit_) + "]");
  out.clear();
  while (n > 1) {
    const u64 p = spf_[n];
    unsigned k = 0;
    do {
      n /= p;
      ++k;
    } while (n % p == 0);
    out.push_back({p, k});
  }
}

Factorization FactorTable::factor(u64 n) const {
  Factorization out;
  factor_into(n, out);
  return out;
}

bool FactorTable::accepts(u64 n, ModulusFilter filter) const {
  switch (filter) {
    case ModulusFilter::all:
      return true;
    case ModulusFilter::prime:
      return is_prime(n);
    case ModulusFilter::squarefree: {
      while (n > 1) {
        const u64 p = spf_[n];
        n /= p;
        if (n % p == 0) return false;
      }
      return true;
    }
  }
  return false;
}

ModulusStream::iterator::iterator(const FactorTable* table, ModulusFilter filter, u64 start, u64 stop)
    : table_(table), filter_(filter), stop_(stop) {
  current_.n = start;
  settle();
}

void ModulusStream::iterator::settle() {
  while (current_.n < stop_ && !table_->accepts(current_.n, filter_)) ++current_.n;
  if (current_.n < stop_)
    table_->factor_into(current_.n, current_.factors);
  else
    current_.factors.clear();
}

ModulusStream::iterator& ModulusStream::iterator::operator++() {
  ++current_.n;
  settle();
  return *this;
}

ModulusStream::ModulusStream(const FactorTable& table, ModulusFilter filter)
    : ModulusStream(table, filter, 1, table.limit()) {}

ModulusStream::ModulusStream(const FactorTable& table, ModulusFilter filter, u64 first, u64 last)
    : table_(&table), filter_(filter), first_(first == 0 ? 1 : first), last_(last) {
  if (last_ > table.limit()) throw std::out_of_range("modulus range exceeds factor table");
}

}  // namespace equidist
