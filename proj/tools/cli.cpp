#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "equidist/expsum.hpp"
#include "equidist/polynomial.hpp"
#include "equidist/report.hpp"
#include "equidist/root_cache_file.hpp"
#include "equidist/roots.hpp"

namespace equidist::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

i64 parse_i64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + " '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("invalid " + what + " '" + s + "'");
  return v;
}

IntPolynomial parse_polynomial(const std::string& text, const char* flag) {
  try {
    return IntPolynomial::parse(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::runtime_error("cannot open output '" + cfg.out_path + "'");
  file << body;
  if (!file) throw std::runtime_error("failed writing output '" + cfg.out_path + "'");
}

std::string resolve_cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("EQUIDIST_CACHE"); env && *env) return env;
  return {};
}

std::map<u64, RootSet> load_if_present(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return {};
  return load_root_cache(path);
}

void save_merged(const std::string& path, std::map<u64, RootSet> existing, const std::vector<RootSet>& fresh) {
  for (const auto& rs : fresh) existing.insert_or_assign(rs.modulus, rs);
  std::vector<RootSet> all;
  all.reserve(existing.size());
  for (auto& [n, rs] : existing) all.push_back(std::move(rs));
  save_root_cache(path, all);
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  const IntPolynomial f = parse_polynomial(cfg.f_text, "--f");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() < 1) throw std::invalid_argument("--f: degree too small");
  if (cfg.x == 0) throw std::invalid_argument("--x must be at least 1");
  const std::string cache_path = resolve_cache_path(cfg);
  auto cached = load_if_present(cache_path);

  const FactorTable table(cfg.x);
  std::map<u64, RootSet> seed;
  for (const auto& [n, rs] : cached)
    if (n <= cfg.x) seed.emplace(n, rs);
  // The prime-power cache accepts only prime-power keys; others are used directly below.
  std::map<u64, RootSet> prime_power_seed;
  for (const auto& [n, rs] : seed) {
    const auto fac = table.factor(n);
    if (fac.size() == 1) prime_power_seed.emplace(n, rs);
  }
  const RootCache cache(f, table, prime_power_seed);

  std::vector<RootSet> rows;
  for (const Modulus& m : ModulusStream(table, cfg.filter)) {
    if (auto it = seed.find(m.n); it != seed.end()) {
      if (!roots_are_sound(f, it->second))
        throw std::runtime_error("root cache does not match polynomial at modulus " + std::to_string(m.n));
      rows.push_back(it->second);
    } else {
      rows.push_back(cache.roots_mod_n(m.n, m.factors));
    }
  }

  std::string body;
  if (cfg.format == OutputFormat::csv) {
    body = "n,r,roots\n";
    for (const auto& rs : rows) {
      body += std::to_string(rs.modulus) + "," + std::to_string(rs.count()) + ",";
      for (std::size_t i = 0; i < rs.roots.size(); ++i) body += (i ? " " : "") + std::to_string(rs.roots[i]);
      body += '\n';
    }
  } else {
    std::string json = "[";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& rs = rows[k];
      json += (k ? ",\n " : "\n ") + std::string("{\"n\": ") + std::to_string(rs.modulus) +
              ", \"r\": " + std::to_string(rs.count()) + ", \"roots\": [";
      for (std::size_t i = 0; i < rs.roots.size(); ++i) json += (i ? ", " : "") + std::to_string(rs.roots[i]);
      json += "]}";
    }
    body = json + "\n]\n";
  }
  emit(cfg, body, out);
  if (!cache_path.empty()) save_merged(cache_path, std::move(cached), rows);
  return 0;
}

struct Pipeline {
  SequenceSpec spec;
  ScanOptions options;
};

Pipeline make_pipeline(const RunConfig& cfg) {
  Pipeline p;
  p.spec.f = parse_polynomial(cfg.f_text, "--f");
  p.spec.g = cfg.g_text.empty() ? p.spec.f : parse_polynomial(cfg.g_text, "--g");
  require_pipeline_polynomial(p.spec.f, "--f");
  require_pipeline_polynomial(p.spec.g, "--g");
  if (cfg.x == 0) throw std::invalid_argument("--x must be at least 1");
  p.spec.limit = cfg.x;
  p.spec.filter = cfg.filter;
  p.options.frequencies = cfg.frequencies;
  p.options.checkpoints = cfg.checkpoints.empty() ? default_checkpoints(cfg.x) : cfg.checkpoints;
  p.options.threads = cfg.threads;
  for (const auto& fr : p.options.frequencies)
    if (fr.h1 == 0 && fr.h2 == 0 && !cfg.allow_zero)
      throw std::invalid_argument("frequency 0:0 requires --allow-zero");
  return p;
}

EquidistReport run_pipeline(const RunConfig& cfg, const Pipeline& p) {
  const std::string cache_path = resolve_cache_path(cfg);
  const FactorTable table(p.spec.limit);
  const bool same = p.spec.same_polynomial();
  const std::string g_path = cache_path.empty() ? std::string{} : cache_path + ".g";
  auto seed_f = load_if_present(cache_path);
  auto seed_g = same ? std::map<u64, RootSet>{} : load_if_present(g_path);
  const RootCache cache_f(p.spec.f, table, seed_f, kDefaultBruteForceThreshold, cfg.threads);
  std::optional<RootCache> cache_g;
  if (!same) cache_g.emplace(p.spec.g, table, seed_g, kDefaultBruteForceThreshold, cfg.threads);
  EquidistReport report{p.spec, p.options,
                        scan_sequence(p.spec, p.options, table, cache_f, cache_g ? *cache_g : cache_f)};
  if (!cache_path.empty()) {
    save_merged(cache_path, std::move(seed_f), cache_f.prime_power_sets());
    if (!same) save_merged(g_path, std::move(seed_g), cache_g->prime_power_sets());
  }
  return report;
}

int cmd_weyl(const RunConfig& cfg, std::ostream& out) {
  Pipeline p = make_pipeline(cfg);
  if (p.options.frequencies.empty()) throw std::invalid_argument("at least one frequency is required");
  const EquidistReport report = run_pipeline(cfg, p);
  if (report.checkpoints.front().pairs == 0)
    throw std::runtime_error("no root pairs below cutoff " + std::to_string(report.checkpoints.front().x));
  emit(cfg, cfg.format == OutputFormat::csv ? weyl_csv(report) : weyl_json(report), out);
  return 0;
}

int cmd_equidist(const RunConfig& cfg, std::ostream& out) {
  Pipeline p = make_pipeline(cfg);
  p.options.rects = cfg.rects;
  p.options.grid_resolution = cfg.grid;
  if (p.spec.same_polynomial()) p.options.diagonal_widths = {cfg.eps.value_or(Rational(0, 1))};
  const EquidistReport report = run_pipeline(cfg, p);
  emit(cfg, cfg.format == OutputFormat::csv ? to_csv(report) : to_json(report), out);
  return 0;
}

std::vector<IntPolynomial> selftest_polynomials() {
  return {IntPolynomial{1, 0, 1}, IntPolynomial{-2, 0, 1}, IntPolynomial{-1, -1, 0, 1}};
}

}  // namespace

std::vector<Frequency> parse_frequencies(const std::string& text) {
  std::vector<Frequency> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw std::invalid_argument("invalid frequency '" + item + "' (expected h1:h2)");
    const Frequency fr{parse_i64(parts[0], "frequency"), parse_i64(parts[1], "frequency")};
    if (std::find(out.begin(), out.end(), fr) == out.end()) out.push_back(fr);
  }
  return out;
}

std::vector<Rect> parse_rects(const std::string& text) {
  std::vector<Rect> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 4) throw std::invalid_argument("invalid rectangle '" + item + "' (expected a:b:c:d)");
    Rect r{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]), Rational::parse(parts[3])};
    r.validate();
    out.push_back(r);
  }
  return out;
}

std::vector<u64> parse_checkpoints(const std::string& text, u64 x) {
  std::vector<u64> out;
  for (const auto& item : split(text, ',')) {
    const i64 v = parse_i64(item, "checkpoint");
    if (v <= 0) throw std::invalid_argument("checkpoints must be positive");
    out.push_back(static_cast<u64>(v));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw std::invalid_argument("checkpoints must be strictly ascending");
  if (!out.empty() && out.back() > x) throw std::invalid_argument("checkpoint beyond --x");
  if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

std::vector<u64> default_checkpoints(u64 x) {
  std::vector<u64> out;
  for (u64 p = 10; p < x; p *= 10) out.push_back(p);
  out.push_back(x);
  return out;
}

std::vector<SuiteResult> run_selftest(unsigned threads, Fault fault) {
  std::vector<SuiteResult> results;
  const auto polys = selftest_polynomials();

  {
    SuiteResult s{"brute-force roots (n <= 600)"};
    const FactorTable table(600);
    for (const auto& f : polys) {
      const RootCache cache(f, table);
      for (u64 n = 1; n <= 600; ++n) {
        RootSet got = cache.roots_mod_n(n, table.factor(n));
        if (fault == Fault::omit_root && !got.roots.empty()) got.roots.pop_back();
        ++s.total;
        s.passed += got == brute_force_roots(f, n);
      }
    }
    results.push_back(s);
  }
  {
    SuiteResult s{"multiplicativity of r (mn <= 10^4)"};
    const FactorTable table(10000);
    std::mt19937_64 rng(20240611);
    for (const auto& f : polys) {
      const RootCache cache(f, table);
      std::size_t done = 0;
      while (done < 100) {
        const u64 m = std::uniform_int_distribution<u64>(1, 100)(rng);
        const u64 n = std::uniform_int_distribution<u64>(1, 10000 / m)(rng);
        if (std::gcd(m, n) != 1) continue;
        ++done;
        ++s.total;
        s.passed += cache.count_mod_n(table.factor(m * n)) ==
                    cache.count_mod_n(table.factor(m)) * cache.count_mod_n(table.factor(n));
      }
    }
    results.push_back(s);
  }
  {
    SuiteResult s{"Parseval identity (n <= 200)"};
    const FactorTable table(200);
    for (const auto& f : polys) {
      const RootCache cache(f, table);
      for (u64 n = 1; n <= 200; ++n) {
        const RootSet rs = cache.roots_mod_n(n, table.factor(n));
        ++s.total;
        s.passed += verify_parseval(rs) <= parseval_tolerance(rs);
      }
    }
    results.push_back(s);
  }
  {
    SuiteResult s{"twisted multiplicativity (nn' <= 10^6)"};
    std::mt19937_64 rng(77);
    for (const auto& f : polys) {
      std::size_t done = 0;
      while (done < 40) {
        const u64 n = std::uniform_int_distribution<u64>(1, 1000)(rng);
        const u64 n2 = std::uniform_int_distribution<u64>(1, 1000000 / n)(rng);
        if (std::gcd(n, n2) != 1) continue;
        ++done;
        const i64 h = std::uniform_int_distribution<i64>(-50, 50)(rng);
        const i64 h2 = std::uniform_int_distribution<i64>(-50, 50)(rng);
        const auto res = verify_twisted_mult(f, n, n2, h, h2);
        ++s.total;
        s.passed += res.product_rule <= res.tolerance() && res.split_rule <= res.tolerance();
      }
    }
    results.push_back(s);
  }
  {
    SuiteResult s{"thread-count determinism"};
    SequenceSpec spec{polys[0], polys[1], 5000, ModulusFilter::all};
    ScanOptions opt;
    opt.frequencies = {{1, 0}, {1, 1}, {2, -3}};
    opt.rects = {{Rational(0, 1), Rational(1, 2), Rational(0, 1), Rational(1, 2)}};
    opt.grid_resolution = 64;
    opt.checkpoints = {1000, 5000};
    opt.threads = 1;
    const std::string base = to_json(build_report(spec, opt));
    for (unsigned t : {2u, std::max(threads, 3u)}) {
      opt.threads = t;
      ++s.total;
      s.passed += to_json(build_report(spec, opt)) == base;
    }
    results.push_back(s);
  }
  return results;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots of polynomial congruences and joint equidistribution experiments", "equidist"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string moduli = "all", freq, rects, checkpoints, format = "csv", eps, fault = "none";
  const std::string default_freqs = "1:0,0:1,1:1,2:-3";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f_text, "Ascending coefficients of f, e.g. 1,0,1 for x^2+1")->required();
    sub->add_option("--x", cfg.x, "Largest modulus")->required();
    sub->add_option("--moduli", moduli, "all|prime|squarefree");
    sub->add_option("--format", format, "csv|json");
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    sub->add_option("--cache", cfg.cache_path, "Root-set cache file (default $EQUIDIST_CACHE)");
    sub->add_option("--threads", cfg.threads, "Worker threads");
  };
  auto add_pipeline = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--g", cfg.g_text, "Ascending coefficients of g (default: f)");
    sub->add_option("--checkpoints", checkpoints, "Comma-separated ascending cutoffs (default powers of 10, then x)");
    sub->add_option("--freq", freq, "Frequencies h1:h2[,...] (default " + default_freqs + ")");
    sub->add_flag("--allow-zero", cfg.allow_zero, "Permit the trivial frequency 0:0");
  };

  auto* roots = app.add_subcommand("roots", "Print root sets of f modulo each n <= x");
  add_common(roots);
  auto* weyl = app.add_subcommand("weyl", "Normalized Weyl sums per checkpoint and frequency");
  add_pipeline(weyl);
  auto* equidist = app.add_subcommand("equidist", "Full equidistribution report");
  add_pipeline(equidist);
  equidist->add_option("--rect", rects, "Open rectangles a:b:c:d[,...] (default 0:1/2:0:1/2)");
  equidist->add_option("--grid", cfg.grid, "Grid resolution for the discrepancy bracket (0 disables)");
  equidist->add_option("--eps", eps, "Diagonal width (used when f == g, default 0)");
  auto* selftest = app.add_subcommand("selftest", "Run the exact-identity suites");
  selftest->add_option("--threads", cfg.threads, "Threads for the determinism suite");
  selftest->add_option("--inject-fault", fault, "none|omit-root (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cfg.threads == 0) throw std::invalid_argument("--threads must be at least 1");
    if (*selftest) {
      if (fault != "none" && fault != "omit-root") throw std::invalid_argument("unknown fault '" + fault + "'");
      const auto results = run_selftest(cfg.threads, fault == "omit-root" ? Fault::omit_root : Fault::none);
      bool ok = true;
      for (const auto& r : results) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.total << "\n";
        ok = ok && r.ok();
      }
      out << (ok ? "selftest passed\n" : "selftest FAILED\n");
      return ok ? 0 : 1;
    }

    cfg.filter = parse_filter(moduli);
    if (format == "csv")
      cfg.format = OutputFormat::csv;
    else if (format == "json")
      cfg.format = OutputFormat::json;
    else
      throw std::invalid_argument("unknown format '" + format + "' (expected csv|json)");

    if (*roots) return cmd_roots(cfg, out);

    cfg.frequencies = parse_frequencies(freq.empty() ? default_freqs : freq);
    if (!checkpoints.empty()) cfg.checkpoints = parse_checkpoints(checkpoints, cfg.x);
    if (*weyl) return cmd_weyl(cfg, out);

    cfg.rects = parse_rects(rects.empty() ? "0:1/2:0:1/2" : rects);
    if (!eps.empty()) cfg.eps = Rational::parse(eps);
    return cmd_equidist(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace equidist::cli
