#include "equidist/roots.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "poly_mod_p.hpp"

namespace equidist {

namespace {

std::vector<u64> scan_residues(const std::vector<u64>& reduced, u64 n) {
  std::vector<u64> out;
  for (u64 x = 0; x < n; ++x)
    if (eval_reduced(reduced, x, n) == 0) out.push_back(x);
  return out;
}

// Collects the roots of a monic squarefree polynomial g that splits into
// distinct linear factors mod an odd prime p.
void split_linear(const detail::PolyP& g, u64 p, std::vector<u64>& out) {
  const int d = detail::deg(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(submod(0, g[0], p));
    return;
  }
  const u64 half = (p - 1) / 2;
  for (u64 delta = 0;; ++delta) {
    detail::PolyP shifted{delta % p, 1};
    detail::PolyP pw = detail::powmod_poly(shifted, half, g, p);
    detail::PolyP h = detail::gcd(g, detail::sub(pw, {1}, p), p);
    const int dh = detail::deg(h);
    if (dh > 0 && dh < d) {
      split_linear(h, p, out);
      split_linear(detail::divrem(g, h, p).first, p, out);
      return;
    }
  }
}

std::vector<u64> split_roots(const std::vector<u64>& reduced, u64 p) {
  detail::PolyP f(reduced.begin(), reduced.end());
  detail::trim(f);
  f = detail::make_monic(std::move(f), p);
  const detail::PolyP x{0, 1};
  detail::PolyP xp = detail::powmod_poly(x, p, f, p);
  detail::PolyP g = detail::gcd(f, detail::sub(xp, x, p), p);
  std::vector<u64> out;
  split_linear(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of distinct roots mod p, as deg gcd(f, x^p - x).
std::size_t count_roots_mod_p(const std::vector<u64>& reduced, u64 p) {
  if (p == 2) return scan_residues(reduced, p).size();
  detail::PolyP f(reduced.begin(), reduced.end());
  detail::trim(f);
  if (detail::deg(f) <= 0) return 0;
  f = detail::make_monic(std::move(f), p);
  const detail::PolyP x{0, 1};
  const detail::PolyP g = detail::gcd(f, detail::sub(detail::powmod_poly(x, p, f, p), x, p), p);
  return static_cast<std::size_t>(detail::deg(g));
}

// Roots mod q*p from roots mod q, where q = p^(k-1) and f is reduced mod a
// power of p at least q*p.
std::vector<u64> lift_one_level(const std::vector<u64>& f_red, const std::vector<u64>& df_red, u64 p, u64 q,
                                const std::vector<u64>& roots) {
  const u64 qp = q * p;
  std::vector<u64> fq(f_red.size()), dfq(df_red.size());
  for (std::size_t i = 0; i < f_red.size(); ++i) fq[i] = f_red[i] % qp;
  for (std::size_t i = 0; i < df_red.size(); ++i) dfq[i] = df_red[i] % qp;
  std::vector<u64> out;
  for (u64 mu : roots) {
    const u64 slope = eval_reduced(dfq, mu, qp);
    if (slope % p != 0) {
      const u64 value = eval_reduced(fq, mu, qp);
      const u64 step = mulmod(value, invmod(slope, qp), qp);
      out.push_back(submod(mu, step, qp));
    } else {
      for (u64 t = 0; t < p; ++t) {
        const u64 cand = mu + t * q;
        if (eval_reduced(fq, cand, qp) == 0) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> derivative_reduced(const IntPolynomial& f, u64 m) { return f.derivative().reduce_mod(m); }

}  // namespace

NormalizedRoots normalize(const RootSet& rs) { return {rs.modulus, rs.roots}; }

RootSet brute_force_roots(const IntPolynomial& f, u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  return {n, scan_residues(f.reduce_mod(n), n)};
}

std::vector<u64> roots_mod_p(const IntPolynomial& f, u64 p, u64 brute_force_threshold) {
  auto reduced = f.reduce_mod(p);
  if (std::all_of(reduced.begin(), reduced.end(), [](u64 c) { return c == 0; }))
    throw std::domain_error("polynomial vanishes mod p");
  if (p <= brute_force_threshold || p == 2) return scan_residues(reduced, p);
  detail::PolyP trimmed(reduced.begin(), reduced.end());
  detail::trim(trimmed);
  if (detail::deg(trimmed) == 0) return {};
  return split_roots(reduced, p);
}

std::vector<u64> lift_roots(const IntPolynomial& f, u64 p, unsigned k, u64 brute_force_threshold) {
  if (k == 0) throw std::invalid_argument("exponent must be at least 1");
  u64 pk = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (static_cast<u128>(pk) * p > kPrimePowerCap) throw std::overflow_error("prime power too large");
    pk *= p;
  }
  std::vector<u64> roots = roots_mod_p(f, p, brute_force_threshold);
  if (k == 1 || roots.empty()) return roots;
  const auto f_red = f.reduce_mod(pk);
  const auto df_red = derivative_reduced(f, pk);
  u64 q = p;
  for (unsigned level = 2; level <= k && !roots.empty(); ++level) {
    roots = lift_one_level(f_red, df_red, p, q, roots);
    q *= p;
  }
  return roots;
}

std::vector<u64> crt_assemble(std::span<const std::pair<u64, const std::vector<u64>*>> parts) {
  std::vector<u64> cur{0};
  u64 m = 1;
  std::vector<u64> next;
  for (const auto& [q, roots] : parts) {
    if (roots->empty()) return {};
    const u64 inv = m == 1 ? 0 : invmod(m % q, q);
    next.clear();
    next.reserve(cur.size() * roots->size());
    for (u64 a : cur) {
      const u64 a_mod_q = a % q;
      for (u64 b : *roots) {
        const u64 t = mulmod(submod(b, a_mod_q, q), inv, q);
        next.push_back(m == 1 ? b : a + m * t);
      }
    }
    m *= q;
    cur.swap(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

RootSet roots_mod_n(const IntPolynomial& f, u64 n, const Factorization& fac) {
  if (product(fac) != n) throw std::invalid_argument("factorization does not match modulus " + std::to_string(n));
  std::vector<std::vector<u64>> lists;
  lists.reserve(fac.size());
  for (const auto& pp : fac) lists.push_back(lift_roots(f, pp.prime, pp.exponent));
  std::vector<std::pair<u64, const std::vector<u64>*>> parts;
  for (std::size_t i = 0; i < fac.size(); ++i) parts.emplace_back(fac[i].value(), &lists[i]);
  return {n, crt_assemble(parts)};
}

RootCache::RootCache(const IntPolynomial& f, const FactorTable& table, u64 brute_force_threshold, unsigned threads)
    : RootCache(f, table, {}, brute_force_threshold, threads) {}

RootCache::RootCache(const IntPolynomial& f, const FactorTable& table, const std::map<u64, RootSet>& seed,
                     u64 brute_force_threshold, unsigned threads)
    : f_(f), limit_(table.limit()) {
  std::vector<u64> primes;
  for (u64 p = 2; p <= limit_; ++p)
    if (table.is_prime(p)) primes.push_back(p);

  // Each prime is independent; results land in per-chunk slots and are merged
  // in prime order, so the outcome (including which error is reported) does
  // not depend on the thread count.
  struct Chunk {
    std::vector<std::pair<u64, std::vector<u64>>> entries;
    std::size_t seeded = 0;
    std::exception_ptr error;
  };
  constexpr std::size_t kChunk = 512;
  std::vector<Chunk> chunks((primes.size() + kChunk - 1) / kChunk);

  auto build_chunk = [&](std::size_t c) {
    Chunk& out = chunks[c];
    try {
      const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) {
        const u64 p = primes[i];
        u64 top = p;
        while (static_cast<u128>(top) * p <= limit_) top *= p;
        const auto f_red = f.reduce_mod(top);
        const auto df_red = top > p ? derivative_reduced(f, top) : std::vector<u64>{};

        std::vector<u64> roots;
        u64 q = p;
        while (true) {
          if (auto it = seed.find(q); it != seed.end()) {
            const auto f_q = f.reduce_mod(q);
            const auto& given = it->second.roots;
            bool ok = std::is_sorted(given.begin(), given.end()) &&
                      std::adjacent_find(given.begin(), given.end()) == given.end();
            for (u64 mu : given) ok = ok && mu < q && eval_reduced(f_q, mu, q) == 0;
            // Completeness: a prime is checked by root count, a higher power
            // against the (cheap) lift of the level below.
            if (ok && q == p) ok = given.size() == count_roots_mod_p(f_q, p);
            if (ok && q > p) ok = given == (roots.empty() ? roots : lift_one_level(f_red, df_red, p, q / p, roots));
            if (!ok) throw std::runtime_error("root cache does not match polynomial at modulus " + std::to_string(q));
            roots = given;
            ++out.seeded;
          } else if (q == p) {
            roots = roots_mod_p(f, p, brute_force_threshold);
          } else if (!roots.empty()) {
            roots = lift_one_level(f_red, df_red, p, q / p, roots);
          }
          out.entries.emplace_back(q, roots);
          if (q == top) break;
          q *= p;
        }
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks.size())));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks.size(); ++c) build_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks.size(); c = next++) build_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  std::size_t total = 0;
  for (const auto& ch : chunks) total += ch.entries.size();
  by_prime_power_.reserve(total);
  for (auto& ch : chunks) {
    if (ch.error) std::rethrow_exception(ch.error);
    for (auto& [q, roots] : ch.entries) by_prime_power_.emplace(q, std::move(roots));
    seeded_ += ch.seeded;
  }
}

std::vector<RootSet> RootCache::prime_power_sets() const {
  std::vector<RootSet> out;
  out.reserve(by_prime_power_.size());
  for (const auto& [q, roots] : by_prime_power_) out.push_back({q, roots});
  std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) { return a.modulus < b.modulus; });
  return out;
}

const std::vector<u64>& RootCache::prime_power_roots(u64 q) const {
  auto it = by_prime_power_.find(q);
  if (it == by_prime_power_.end()) throw std::out_of_range("prime power " + std::to_string(q) + " not cached");
  return it->second;
}

std::size_t RootCache::count_mod_n(const Factorization& fac) const {
  std::size_t c = 1;
  for (const auto& pp : fac) {
    c *= prime_power_roots(pp.value()).size();
    if (c == 0) break;
  }
  return c;
}

void RootCache::roots_mod_n_into(u64 n, const Factorization& fac, RootSet& out) const {
  out.modulus = n;
  std::pair<u64, const std::vector<u64>*> parts[16];
  std::size_t k = 0;
  for (const auto& pp : fac) {
    const u64 q = pp.value();
    parts[k++] = {q, &prime_power_roots(q)};
  }
  out.roots = crt_assemble(std::span(parts, k));
}

RootSet RootCache::roots_mod_n(u64 n, const Factorization& fac) const {
  RootSet out;
  roots_mod_n_into(n, fac, out);
  return out;
}

std::vector<std::pair<u64, std::size_t>> root_counts_up_to(const IntPolynomial& f, const FactorTable& table,
                                                           ModulusFilter filter) {
  const RootCache cache(f, table);
  std::vector<std::pair<u64, std::size_t>> out;
  for (const Modulus& m : ModulusStream(table, filter)) out.emplace_back(m.n, cache.count_mod_n(m.factors));
  return out;
}

bool roots_are_sound(const IntPolynomial& f, const RootSet& rs) {
  const auto reduced = f.reduce_mod(rs.modulus);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.roots[i] >= rs.modulus) return false;
    if (i > 0 && rs.roots[i] <= rs.roots[i - 1]) return false;
    if (eval_reduced(reduced, rs.roots[i], rs.modulus) != 0) return false;
  }
  return true;
}

}  // namespace equidist
