#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "equidist/stats.hpp"

namespace equidist::cli {

enum class OutputFormat { csv, json };

/// Parsed command-line configuration shared by all subcommands.
struct RunConfig {
  std::string f_text;
  std::string g_text;
  u64 x = 0;
  std::vector<u64> checkpoints;
  ModulusFilter filter = ModulusFilter::all;
  std::vector<Frequency> frequencies;
  std::vector<Rect> rects;
  std::size_t grid = 256;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;
  std::string cache_path;
  unsigned threads = 1;
  std::optional<Rational> eps;
  bool allow_zero = false;
};

/// "h1:h2,h1:h2"; duplicates dropped, first occurrence wins.
std::vector<Frequency> parse_frequencies(const std::string& text);
/// "a:b:c:d,..." with each endpoint a decimal or fraction.
std::vector<Rect> parse_rects(const std::string& text);
/// Comma-separated ascending cutoffs, completed with x when missing.
std::vector<u64> parse_checkpoints(const std::string& text, u64 x);
/// Powers of ten below x, then x.
std::vector<u64> default_checkpoints(u64 x);

enum class Fault { none, omit_root };

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

/// Exact-identity suites: brute-force roots, multiplicativity of r,
/// Parseval, twisted multiplicativity, thread-count determinism.
std::vector<SuiteResult> run_selftest(unsigned threads, Fault fault);

/// Entry point used by main(); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equidist::cli
