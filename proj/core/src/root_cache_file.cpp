#include "equidist/root_cache_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace equidist {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("root cache line " + std::to_string(line) + ": " + what);
}

u64 parse_u64(std::string_view s, std::size_t line) {
  u64 v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) fail(line, "invalid number '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string format_root_line(const RootSet& rs) {
  std::string out = std::to_string(rs.modulus) + ":" + std::to_string(rs.count()) + ":";
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rs.roots[i]);
  }
  return out;
}

void write_root_sets(std::ostream& out, const std::vector<RootSet>& sets) {
  for (const auto& rs : sets) out << format_root_line(rs) << '\n';
}

std::map<u64, RootSet> read_root_sets(std::istream& in) {
  std::map<u64, RootSet> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos) fail(line, "expected n:r:roots");
    const std::string_view view(text);
    RootSet rs;
    rs.modulus = parse_u64(view.substr(0, c1), line);
    if (rs.modulus == 0) fail(line, "modulus must be positive");
    const u64 count = parse_u64(view.substr(c1 + 1, c2 - c1 - 1), line);
    std::string_view rest = view.substr(c2 + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      rs.roots.push_back(parse_u64(rest.substr(0, comma), line));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) fail(line, "trailing comma");
    }
    if (rs.roots.size() != count) fail(line, "root count does not match list");
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (rs.roots[i] >= rs.modulus) fail(line, "root outside [0, n)");
      if (i && rs.roots[i] <= rs.roots[i - 1]) fail(line, "roots not strictly increasing");
    }
    if (!out.emplace(rs.modulus, rs).second) fail(line, "duplicate modulus " + std::to_string(rs.modulus));
  }
  return out;
}

std::map<u64, RootSet> load_root_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open root cache '" + path.string() + "'");
  try {
    return read_root_sets(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void save_root_cache(const std::filesystem::path& path, const std::vector<RootSet>& sets) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write root cache '" + path.string() + "'");
  write_root_sets(out, sets);
  if (!out) throw std::runtime_error("failed writing root cache '" + path.string() + "'");
}

}  // namespace equidist
