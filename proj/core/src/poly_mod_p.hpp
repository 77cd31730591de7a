#pragma once

// Dense polynomial arithmetic over Z/pZ for prime p. Internal helper for
// root finding and irreducibility checks; polynomials are ascending and
// trimmed (no trailing zeros, zero polynomial is empty).

#include <utility>
#include <vector>

#include "equidist/modarith.hpp"

namespace equidist::detail {

using PolyP = std::vector<u64>;

inline void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

inline PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

inline PolyP sub(PolyP a, const PolyP& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
inline std::pair<PolyP, PolyP> divrem(PolyP a, const PolyP& b, u64 p) {
  const int db = deg(b);
  if (deg(a) < db) return {{}, std::move(a)};
  const u64 inv_lead = invmod(b.back(), p);
  PolyP q(a.size() - b.size() + 1, 0);
  for (int i = deg(a); i >= db; --i) {
    const u64 c = mulmod(a[i], inv_lead, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = submod(a[i - db + j], mulmod(c, b[j], p), p);
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

inline PolyP rem(const PolyP& a, const PolyP& b, u64 p) { return divrem(a, b, p).second; }

inline PolyP make_monic(PolyP a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

inline PolyP gcd(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

inline PolyP mulmod_poly(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) { return rem(mul(a, b, p), m, p); }

inline PolyP powmod_poly(PolyP base, u64 e, const PolyP& m, u64 p) {
  PolyP result{1};
  result = rem(result, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) result = mulmod_poly(result, base, m, p);
    base = mulmod_poly(base, base, m, p);
    e >>= 1;
  }
  return result;
}

inline PolyP derivative(const PolyP& a, u64 p) {
  if (a.size() <= 1) return {};
  PolyP d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

}  // namespace equidist::detail
