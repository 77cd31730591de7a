#pragma once

#include <string>
#include <vector>

#include "equidist/stats.hpp"

namespace equidist {

struct EquidistReport {
  SequenceSpec spec;
  ScanOptions options;
  std::vector<CheckpointStats> checkpoints;
};

/// Runs scan_sequence and keeps the inputs alongside the results.
EquidistReport build_report(const SequenceSpec& spec, const ScanOptions& options);

/// 12 significant digits, "%.12g" style; "nan" for NaN.
std::string format_number(double v);

/// Value rounded to 12 significant digits, so JSON and CSV print the same number.
double round12(double v);

/// One row per checkpoint: x, M, |W| per frequency, box fractions and
/// deviations, discrepancy bracket, counting ratio, split densities and
/// diagonal fractions.
std::string to_csv(const EquidistReport& report);

/// Nested JSON with run metadata and per-checkpoint results.
std::string to_json(const EquidistReport& report);

/// Weyl rows: x, h1, h2, re, im, abs, M.
std::string weyl_csv(const EquidistReport& report);
std::string weyl_json(const EquidistReport& report);

}  // namespace equidist
