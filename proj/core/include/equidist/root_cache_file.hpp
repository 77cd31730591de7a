#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "equidist/roots.hpp"

namespace equidist {

/// Text root-set cache: one line per modulus, "n:r:mu1,mu2,..." in decimal.
/// A modulus without roots is written "n:0:".
std::string format_root_line(const RootSet& rs);
void write_root_sets(std::ostream& out, const std::vector<RootSet>& sets);

/// Parses cache lines. Throws std::runtime_error with the line number on
/// malformed input (bad digits, count mismatch, unsorted or out-of-range roots).
std::map<u64, RootSet> read_root_sets(std::istream& in);

std::map<u64, RootSet> load_root_cache(const std::filesystem::path& path);
void save_root_cache(const std::filesystem::path& path, const std::vector<RootSet>& sets);

}  // namespace equidist
