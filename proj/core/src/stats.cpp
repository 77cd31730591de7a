#include "equidist/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "equidist/expsum.hpp"
#include "equidist/roots.hpp"

namespace equidist {

namespace {

constexpr std::size_t kMaxGridResolution = 4096;

struct BlockPartial {
  u64 pairs = 0;
  std::vector<std::complex<double>> weyl;
  std::vector<u64> box;
  std::vector<u64> diagonal;
  std::vector<std::uint32_t> cells;

  u64 pairs_all = 0;
  double log_prime_product = 0;
  u64 primes = 0;
  u64 split_f = 0;
  u64 split_g = 0;
  u64 split_joint = 0;
};

struct ScanContext {
  const SequenceSpec& spec;
  const ScanOptions& options;
  const FactorTable& table;
  const RootCache& cache_f;
  const RootCache& cache_g;
  bool same;
  bool needs_roots;
  std::size_t deg_f;
  std::size_t deg_g;
};

std::size_t count_inside(const std::vector<u64>& roots, u64 n, const Rational& lo, const Rational& hi) {
  std::size_t c = 0;
  for (u64 mu : roots)
    if (compare_fraction(mu, n, lo) > 0 && compare_fraction(mu, n, hi) < 0) ++c;
  return c;
}

std::complex<double> sum_phases(const std::vector<u64>& roots, u64 n, i64 h) {
  std::complex<double> acc{0.0, 0.0};
  const u64 hr = reduce_signed(h, n);
  for (u64 mu : roots) acc += unit_root(mulmod(hr, mu, n), n);
  return acc;
}

// Smallest distance from (mu/n, nu/n) to y = x or y = 1 - x on the torus,
// scaled by n.
u64 diagonal_distance(u64 mu, u64 nu, u64 n) {
  const u64 diff = mu > nu ? mu - nu : nu - mu;
  const u64 sum = mu + nu;
  const u64 anti = sum > n ? sum - n : n - sum;
  return std::min({diff, n - diff, anti, sum, 2 * n - sum});
}

void process_block(const ScanContext& ctx, u64 lo, u64 hi, BlockPartial& out) {
  const auto& opt = ctx.options;
  out.weyl.assign(opt.frequencies.size(), {0.0, 0.0});
  out.box.assign(opt.rects.size(), 0);
  out.diagonal.assign(opt.diagonal_widths.size(), 0);
  const u64 grid = opt.grid_resolution;

  Factorization fac;
  RootSet rf, rg;
  for (u64 n = lo; n <= hi; ++n) {
    ctx.table.factor_into(n, fac);
    const std::size_t r = ctx.cache_f.count_mod_n(fac);
    const std::size_t s = ctx.same ? r : ctx.cache_g.count_mod_n(fac);
    const u64 rs = static_cast<u64>(r) * s;
    out.pairs_all += rs;
    if (fac.size() == 1 && fac[0].exponent == 1) {
      ++out.primes;
      out.log_prime_product += std::log1p(static_cast<double>(rs) / static_cast<double>(n));
      const bool sf = r == ctx.deg_f;
      const bool sg = s == ctx.deg_g;
      out.split_f += sf;
      out.split_g += sg;
      out.split_joint += (sf && sg);
    }
    if (rs == 0 || !ctx.table.accepts(n, ctx.spec.filter)) continue;
    out.pairs += rs;
    if (!ctx.needs_roots) continue;

    ctx.cache_f.roots_mod_n_into(n, fac, rf);
    if (!ctx.same) ctx.cache_g.roots_mod_n_into(n, fac, rg);
    const RootSet& g_roots = ctx.same ? rf : rg;

    for (std::size_t i = 0; i < opt.frequencies.size(); ++i) {
      const auto& fr = opt.frequencies[i];
      out.weyl[i] += sum_phases(rf.roots, n, fr.h1) * sum_phases(g_roots.roots, n, fr.h2);
    }
    for (std::size_t i = 0; i < opt.rects.size(); ++i) {
      const auto& rect = opt.rects[i];
      out.box[i] += static_cast<u64>(count_inside(rf.roots, n, rect.a, rect.b)) *
                    count_inside(g_roots.roots, n, rect.c, rect.d);
    }
    for (std::size_t i = 0; i < opt.diagonal_widths.size(); ++i) {
      const Rational& eps = opt.diagonal_widths[i];
      const __int128 bound = static_cast<__int128>(eps.num) * static_cast<__int128>(n);
      u64 hits = 0;
      for (u64 mu : rf.roots)
        for (u64 nu : g_roots.roots)
          if (static_cast<__int128>(diagonal_distance(mu, nu, n)) * eps.den <= bound) ++hits;
      out.diagonal[i] += hits;
    }
    if (grid > 0) {
      for (u64 mu : rf.roots) {
        const u64 ca = static_cast<u64>(static_cast<u128>(mu) * grid / n);
        for (u64 nu : g_roots.roots) {
          const u64 cb = static_cast<u64>(static_cast<u128>(nu) * grid / n);
          out.cells.push_back(static_cast<std::uint32_t>(ca * grid + cb));
        }
      }
    }
  }
}

struct RunningTotals {
  CheckpointStats stats;
  std::vector<u64> histogram;
};

void merge(RunningTotals& acc, const BlockPartial& part) {
  auto& s = acc.stats;
  s.pairs += part.pairs;
  for (std::size_t i = 0; i < part.weyl.size(); ++i) s.weyl_sums[i] += part.weyl[i];
  for (std::size_t i = 0; i < part.box.size(); ++i) s.box_counts[i] += part.box[i];
  for (std::size_t i = 0; i < part.diagonal.size(); ++i) s.diagonal_counts[i] += part.diagonal[i];
  for (std::uint32_t c : part.cells) ++acc.histogram[c];
  s.pairs_all_moduli += part.pairs_all;
  s.log_prime_product += part.log_prime_product;
  s.primes += part.primes;
  s.split_f += part.split_f;
  s.split_g += part.split_g;
  s.split_joint += part.split_joint;
}

void run_blocks(const ScanContext& ctx, const std::vector<std::pair<u64, u64>>& ranges,
                std::vector<BlockPartial>& partials) {
  partials.assign(ranges.size(), {});
  const unsigned threads = std::max(1u, std::min<unsigned>(ctx.options.threads, static_cast<unsigned>(ranges.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) process_block(ctx, ranges[i].first, ranges[i].second, partials[i]);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < ranges.size(); i = next++)
          process_block(ctx, ranges[i].first, ranges[i].second, partials[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<u64> normalized_checkpoints(const SequenceSpec& spec, const ScanOptions& options) {
  std::vector<u64> cps = options.checkpoints;
  if (cps.empty()) cps.push_back(spec.limit);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == 0) throw std::invalid_argument("checkpoints must be positive");
    if (i > 0 && cps[i] <= cps[i - 1]) throw std::invalid_argument("checkpoints must be strictly ascending");
  }
  if (cps.back() != spec.limit) throw std::invalid_argument("last checkpoint must equal the limit");
  return cps;
}

void validate_options(const ScanOptions& options) {
  for (const auto& r : options.rects) r.validate();
  if (options.grid_resolution == 1 || options.grid_resolution > kMaxGridResolution)
    throw std::invalid_argument("grid resolution must be in [2, " + std::to_string(kMaxGridResolution) + "]");
  for (const auto& eps : options.diagonal_widths)
    if (eps.num < 0) throw std::invalid_argument("diagonal width must be non-negative");
}

}  // namespace

void Rect::validate() const {
  const Rational zero(0, 1), one(1, 1);
  if (!(zero <= a && a < b && b <= one && zero <= c && c < d && d <= one))
    throw std::invalid_argument("malformed rectangle (" + a.to_string() + "," + b.to_string() + ")x(" + c.to_string() +
                                "," + d.to_string() + ")");
}

std::complex<double> CheckpointStats::weyl_average(std::size_t i) const {
  if (pairs == 0) throw std::domain_error("no root pairs below cutoff");
  return weyl_sums.at(i) / static_cast<double>(pairs);
}

double CheckpointStats::box_fraction(std::size_t i) const {
  if (pairs == 0) throw std::domain_error("no root pairs below cutoff");
  return static_cast<double>(box_counts.at(i)) / static_cast<double>(pairs);
}

double CheckpointStats::diagonal_fraction(std::size_t i) const {
  if (pairs == 0) throw std::domain_error("no root pairs below cutoff");
  return static_cast<double>(diagonal_counts.at(i)) / static_cast<double>(pairs);
}

double CheckpointStats::counting_ratio() const {
  if (x < 3 || pairs_all_moduli == 0) return std::numeric_limits<double>::quiet_NaN();
  const double lx = std::log(static_cast<double>(x));
  return std::exp(std::log(static_cast<double>(x)) + log_prime_product - std::log(lx) -
                  std::log(static_cast<double>(pairs_all_moduli)));
}

std::vector<CheckpointStats> scan_sequence(const SequenceSpec& spec, const ScanOptions& options) {
  require_pipeline_polynomial(spec.f, "f");
  require_pipeline_polynomial(spec.g, "g");
  if (spec.limit == 0) throw std::invalid_argument("limit must be at least 1");
  validate_options(options);
  normalized_checkpoints(spec, options);

  const FactorTable table(spec.limit);
  const RootCache cache_f(spec.f, table, kDefaultBruteForceThreshold, options.threads);
  std::optional<RootCache> own_g;
  if (!spec.same_polynomial()) own_g.emplace(spec.g, table, kDefaultBruteForceThreshold, options.threads);
  return scan_sequence(spec, options, table, cache_f, own_g ? *own_g : cache_f);
}

std::vector<CheckpointStats> scan_sequence(const SequenceSpec& spec, const ScanOptions& options,
                                           const FactorTable& table, const RootCache& cache_f,
                                           const RootCache& cache_g) {
  require_pipeline_polynomial(spec.f, "f");
  require_pipeline_polynomial(spec.g, "g");
  validate_options(options);
  const auto checkpoints = normalized_checkpoints(spec, options);
  if (table.limit() != spec.limit || cache_f.limit() != spec.limit || cache_g.limit() != spec.limit)
    throw std::invalid_argument("factor table and root caches must cover exactly the sequence limit");
  if (!(cache_f.polynomial() == spec.f) || !(cache_g.polynomial() == spec.g))
    throw std::invalid_argument("root caches do not match the sequence polynomials");
  const bool same = spec.same_polynomial() && &cache_f == &cache_g;

  const bool needs_roots = !options.frequencies.empty() || !options.rects.empty() || options.grid_resolution > 0 ||
                           !options.diagonal_widths.empty();
  const ScanContext ctx{spec,
                        options,
                        table,
                        cache_f,
                        cache_g,
                        same,
                        needs_roots,
                        static_cast<std::size_t>(spec.f.degree()),
                        static_cast<std::size_t>(spec.g.degree())};

  RunningTotals acc;
  acc.stats.weyl_sums.assign(options.frequencies.size(), {0.0, 0.0});
  acc.stats.box_counts.assign(options.rects.size(), 0);
  acc.stats.diagonal_counts.assign(options.diagonal_widths.size(), 0);
  if (options.grid_resolution > 0) acc.histogram.assign(options.grid_resolution * options.grid_resolution, 0);

  const std::size_t wave = std::max<std::size_t>(8, 4 * static_cast<std::size_t>(std::max(1u, options.threads)));
  std::vector<CheckpointStats> out;
  std::vector<std::pair<u64, u64>> ranges;
  std::vector<BlockPartial> partials;
  u64 start = 1;
  for (u64 cp : checkpoints) {
    // Blocks are aligned to multiples of kScanBlockSize and cut at checkpoints.
    while (start <= cp) {
      ranges.clear();
      while (start <= cp && ranges.size() < wave) {
        const u64 block_end = std::min(cp, ((start - 1) / kScanBlockSize + 1) * kScanBlockSize);
        ranges.emplace_back(start, block_end);
        start = block_end + 1;
      }
      run_blocks(ctx, ranges, partials);
      for (const auto& part : partials) merge(acc, part);
    }
    CheckpointStats snap = acc.stats;
    snap.x = cp;
    if (options.grid_resolution > 0) {
      snap.has_discrepancy = true;
      snap.discrepancy = snap.pairs == 0 ? DiscrepancyBracket{}
                                         : discrepancy_from_histogram(acc.histogram, options.grid_resolution, snap.pairs);
    }
    out.push_back(std::move(snap));
  }
  return out;
}

std::complex<double> weyl_average(const SequenceSpec& spec, i64 h1, i64 h2, unsigned threads) {
  ScanOptions opt;
  opt.frequencies = {{h1, h2}};
  opt.threads = threads;
  return scan_sequence(spec, opt).back().weyl_average(0);
}

double box_count(const SequenceSpec& spec, const Rect& rect) {
  ScanOptions opt;
  opt.rects = {rect};
  return scan_sequence(spec, opt).back().box_fraction(0);
}

DiscrepancyBracket star_discrepancy_2d(const SequenceSpec& spec, std::size_t grid_resolution) {
  if (grid_resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  ScanOptions opt;
  opt.grid_resolution = grid_resolution;
  const auto stats = scan_sequence(spec, opt).back();
  if (stats.pairs == 0) throw std::domain_error("no root pairs below cutoff");
  return stats.discrepancy;
}

DiscrepancyBracket discrepancy_from_histogram(std::span<const u64> cells, std::size_t grid_resolution, u64 total) {
  const std::size_t r = grid_resolution;
  if (cells.size() != r * r) throw std::invalid_argument("histogram size does not match grid resolution");
  if (total == 0) throw std::invalid_argument("empty point set");
  // running[l] = points with cell_a < k and cell_b < l, updated row by row.
  std::vector<u64> column(r + 1, 0);
  double worst = 0;
  const double inv_total = 1.0 / static_cast<double>(total);
  const double inv_r2 = 1.0 / (static_cast<double>(r) * static_cast<double>(r));
  for (std::size_t k = 1; k <= r; ++k) {
    u64 row_prefix = 0;
    for (std::size_t l = 1; l <= r; ++l) {
      row_prefix += cells[(k - 1) * r + (l - 1)];
      column[l] += row_prefix;
      const double empirical = static_cast<double>(column[l]) * inv_total;
      const double area = static_cast<double>(k) * static_cast<double>(l) * inv_r2;
      worst = std::max(worst, std::abs(empirical - area));
    }
  }
  return {worst, std::min(1.0, worst + 2.0 / static_cast<double>(r))};
}

DiscrepancyBracket star_discrepancy_2d(std::span<const RationalPoint> points, std::size_t grid_resolution) {
  if (grid_resolution < 2 || grid_resolution > kMaxGridResolution)
    throw std::invalid_argument("grid resolution out of range");
  const std::size_t r = grid_resolution;
  std::vector<u64> cells(r * r, 0);
  for (const auto& p : points) {
    if (p.n == 0 || p.a >= p.n || p.b >= p.n) throw std::invalid_argument("point outside [0,1)^2");
    const u64 ca = static_cast<u64>(static_cast<u128>(p.a) * r / p.n);
    const u64 cb = static_cast<u64>(static_cast<u128>(p.b) * r / p.n);
    ++cells[ca * r + cb];
  }
  return discrepancy_from_histogram(cells, r, points.size());
}

double counting_ratio(const SequenceSpec& spec) {
  if (spec.limit < 3) throw std::domain_error("counting ratio needs x >= 3");
  return scan_sequence(spec, {}).back().counting_ratio();
}

SplitDensities split_prime_density(const IntPolynomial& f, const IntPolynomial& g, u64 x) {
  if (x < 100) throw std::domain_error("split density needs x >= 100");
  const auto stats = scan_sequence(SequenceSpec{f, g, x, ModulusFilter::prime}, {}).back();
  const double primes = static_cast<double>(stats.primes);
  return {stats.primes, static_cast<double>(stats.split_f) / primes, static_cast<double>(stats.split_g) / primes,
          static_cast<double>(stats.split_joint) / primes};
}

double diagonal_concentration(const SequenceSpec& spec, const Rational& eps) {
  if (!spec.same_polynomial()) throw std::invalid_argument("counterexample requires identical polynomials");
  ScanOptions opt;
  opt.diagonal_widths = {eps};
  return scan_sequence(spec, opt).back().diagonal_fraction(0);
}

NormalizationBracket normalization_bracket(const SequenceSpec& spec, u64 m) {
  if (m == 0) throw std::invalid_argument("pair count must be at least 1");
  require_pipeline_polynomial(spec.f, "f");
  require_pipeline_polynomial(spec.g, "g");
  const FactorTable table(spec.limit);
  const RootCache cache_f(spec.f, table);
  const RootCache cache_g(spec.g, table);

  // Route 1: walk Z pair by pair until the m-th pair and note its modulus.
  u64 index = 0;
  u64 last = 0;
  for (const Modulus& mod : ModulusStream(table, spec.filter)) {
    const RootSet rf = cache_f.roots_mod_n(mod.n, mod.factors);
    const RootSet rg = cache_g.roots_mod_n(mod.n, mod.factors);
    for (std::size_t i = 0; i < rf.count() && index < m; ++i)
      for (std::size_t j = 0; j < rg.count() && index < m; ++j) ++index;
    if (index == m) {
      last = mod.n;
      break;
    }
  }
  if (last == 0) throw std::out_of_range("sequence has fewer than m pairs below the limit");

  // Route 2: multiplicative counts.
  NormalizationBracket out{m, last, 0, 0};
  for (const Modulus& mod : ModulusStream(table, spec.filter, 1, last)) {
    const u64 rs = static_cast<u64>(cache_f.count_mod_n(mod.factors)) * cache_g.count_mod_n(mod.factors);
    out.pair_total += rs;
    if (mod.n == last) out.last_block = rs;
  }
  if (!(m <= out.pair_total && out.pair_total <= m + out.last_block))
    throw std::logic_error("normalization bracket violated: ordering of Z is inconsistent");
  return out;
}

}  // namespace equidist
