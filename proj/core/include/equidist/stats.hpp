#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equidist/factorize.hpp"
#include "equidist/polynomial.hpp"
#include "equidist/rational.hpp"
#include "equidist/roots.hpp"

namespace equidist {

/// The pair sequence Z for f, g over moduli n <= limit. Within a modulus the
/// pairs are ordered by f-root value, then g-root value.
struct SequenceSpec {
  IntPolynomial f;
  IntPolynomial g;
  u64 limit = 0;
  ModulusFilter filter = ModulusFilter::all;

  bool same_polynomial() const { return f == g; }
  /// deg(f) * deg(g).
  int joint_degree() const { return f.degree() * g.degree(); }
};

struct Frequency {
  i64 h1 = 0;
  i64 h2 = 0;
  friend bool operator==(const Frequency&, const Frequency&) = default;
};

/// Open rectangle (a, b) x (c, d) inside the unit square.
struct Rect {
  Rational a, b, c, d;

  /// Throws std::invalid_argument unless 0 <= a < b <= 1 and 0 <= c < d <= 1.
  void validate() const;
  double area() const { return (b.to_double() - a.to_double()) * (d.to_double() - c.to_double()); }
};

/// Normalized point (a/n, b/n) kept as exact numerators.
struct RationalPoint {
  u64 a = 0;
  u64 b = 0;
  u64 n = 1;
};

struct DiscrepancyBracket {
  double lower = 0;
  double upper = 0;
};

struct ScanOptions {
  std::vector<Frequency> frequencies;
  std::vector<Rect> rects;
  /// Grid resolution for the star discrepancy estimate; 0 disables it.
  std::size_t grid_resolution = 0;
  /// Torus widths around the diagonals y = x and y = 1 - x.
  std::vector<Rational> diagonal_widths;
  /// Ascending cutoffs; the last one must equal the sequence limit. Empty means
  /// just the limit.
  std::vector<u64> checkpoints;
  unsigned threads = 1;
};

/// Everything measured for the prefix of Z with moduli n <= x.
struct CheckpointStats {
  u64 x = 0;
  /// M: pairs with filtered moduli n <= x.
  u64 pairs = 0;
  /// Weyl numerators sum_n S(h1, h2; n), one per frequency.
  std::vector<std::complex<double>> weyl_sums;
  std::vector<u64> box_counts;
  std::vector<u64> diagonal_counts;
  DiscrepancyBracket discrepancy;
  bool has_discrepancy = false;

  /// Unfiltered quantities over all n <= x, used by the counting ratio.
  u64 pairs_all_moduli = 0;
  double log_prime_product = 0;
  u64 primes = 0;
  u64 split_f = 0;
  u64 split_g = 0;
  u64 split_joint = 0;

  std::complex<double> weyl_average(std::size_t i) const;
  double box_fraction(std::size_t i) const;
  double diagonal_fraction(std::size_t i) const;
  /// x prod_{p<=x}(1 + r(p)s(p)/p) / (log x sum_{n<=x} r(n)s(n)); NaN for x < 3.
  double counting_ratio() const;
};

/// Single pass over the moduli computing every requested statistic at every
/// checkpoint. Moduli are processed in fixed blocks; block partials are
/// reduced in ascending order, so results do not depend on `threads`.
std::vector<CheckpointStats> scan_sequence(const SequenceSpec& spec, const ScanOptions& options);

/// Same, reusing caller-owned tables (e.g. caches seeded from a file). The
/// table limit must equal spec.limit and the caches must match f and g.
std::vector<CheckpointStats> scan_sequence(const SequenceSpec& spec, const ScanOptions& options,
                                           const FactorTable& table, const RootCache& cache_f,
                                           const RootCache& cache_g);

/// Moduli per block in scan_sequence.
inline constexpr u64 kScanBlockSize = 2048;

std::complex<double> weyl_average(const SequenceSpec& spec, i64 h1, i64 h2, unsigned threads = 1);

/// Fraction of pairs inside the open rectangle.
double box_count(const SequenceSpec& spec, const Rect& rect);

DiscrepancyBracket star_discrepancy_2d(const SequenceSpec& spec, std::size_t grid_resolution);

/// Grid-anchored estimate over boxes [0, k/R) x [0, l/R). Upper bound adds 2/R.
DiscrepancyBracket star_discrepancy_2d(std::span<const RationalPoint> points, std::size_t grid_resolution);

/// Same estimate from a histogram of grid cell counts (row-major by the
/// first coordinate's cell, R*R entries).
DiscrepancyBracket discrepancy_from_histogram(std::span<const u64> cells, std::size_t grid_resolution, u64 total);

double counting_ratio(const SequenceSpec& spec);

struct SplitDensities {
  u64 primes = 0;
  double f = 0;
  double g = 0;
  double joint = 0;
};

SplitDensities split_prime_density(const IntPolynomial& f, const IntPolynomial& g, u64 x);

/// Fraction of pairs within torus distance eps of y = x or y = 1 - x.
/// Requires f == g.
double diagonal_concentration(const SequenceSpec& spec, const Rational& eps);

struct NormalizationBracket {
  u64 m = 0;
  /// Largest modulus contributing a pair among the first m.
  u64 last_modulus = 0;
  /// sum_{n <= last_modulus} r(n) s(n)
  u64 pair_total = 0;
  /// r(N) s(N) with N = last_modulus
  u64 last_block = 0;
};

/// Checks m <= sum_{n<=N} r(n)s(n) <= m + r(N)s(N) for the first m pairs.
/// Throws std::logic_error on violation, std::out_of_range if the sequence
/// has fewer than m pairs below the limit.
NormalizationBracket normalization_bracket(const SequenceSpec& spec, u64 m);

}  // namespace equidist
