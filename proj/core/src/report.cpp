#include "equidist/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <string>

namespace equidist {

namespace {

using Json = nlohmann::ordered_json;

std::string rect_label(const Rect& r) {
  return r.a.to_string() + ":" + r.b.to_string() + ":" + r.c.to_string() + ":" + r.d.to_string();
}

std::string freq_label(const Frequency& f) { return std::to_string(f.h1) + ":" + std::to_string(f.h2); }

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

}  // namespace

EquidistReport build_report(const SequenceSpec& spec, const ScanOptions& options) {
  return {spec, options, scan_sequence(spec, options)};
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.12g}", v);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_number(v));
}

std::string to_csv(const EquidistReport& report) {
  const auto& opt = report.options;
  std::string out = "x,M";
  for (const auto& f : opt.frequencies) out += ",abs_w[" + freq_label(f) + "]";
  for (const auto& r : opt.rects) out += ",box[" + rect_label(r) + "],box_dev[" + rect_label(r) + "]";
  if (opt.grid_resolution > 0) out += ",disc_lower,disc_upper";
  out += ",counting_ratio,split_f,split_g,split_joint";
  for (const auto& e : opt.diagonal_widths) out += ",diagonal[" + e.to_string() + "]";
  out += '\n';
  for (const auto& cp : report.checkpoints) {
    out += std::to_string(cp.x) + "," + std::to_string(cp.pairs);
    const double m = static_cast<double>(cp.pairs);
    const double nan = std::nan("");
    for (std::size_t i = 0; i < opt.frequencies.size(); ++i)
      out += "," + format_number(cp.pairs ? std::abs(cp.weyl_sums[i]) / m : nan);
    for (std::size_t i = 0; i < opt.rects.size(); ++i) {
      const double frac = cp.pairs ? static_cast<double>(cp.box_counts[i]) / m : nan;
      out += "," + format_number(frac) + "," + format_number(frac - opt.rects[i].area());
    }
    if (opt.grid_resolution > 0)
      out += "," + format_number(cp.pairs ? cp.discrepancy.lower : nan) + "," +
             format_number(cp.pairs ? cp.discrepancy.upper : nan);
    const double primes = static_cast<double>(cp.primes);
    out += "," + format_number(cp.counting_ratio());
    out += "," + format_number(cp.primes ? static_cast<double>(cp.split_f) / primes : nan);
    out += "," + format_number(cp.primes ? static_cast<double>(cp.split_g) / primes : nan);
    out += "," + format_number(cp.primes ? static_cast<double>(cp.split_joint) / primes : nan);
    for (std::size_t i = 0; i < opt.diagonal_widths.size(); ++i)
      out += "," + format_number(cp.pairs ? static_cast<double>(cp.diagonal_counts[i]) / m : nan);
    out += '\n';
  }
  return out;
}

std::string to_json(const EquidistReport& report) {
  const auto& opt = report.options;
  const auto& spec = report.spec;
  Json root;
  root["f"] = spec.f.to_string();
  root["g"] = spec.g.to_string();
  root["moduli"] = std::string(to_string(spec.filter));
  root["limit"] = spec.limit;
  root["joint_degree"] = spec.joint_degree();
  Json freqs = Json::array();
  for (const auto& f : opt.frequencies) freqs.push_back({f.h1, f.h2});
  root["frequencies"] = freqs;
  Json rects = Json::array();
  for (const auto& r : opt.rects) rects.push_back(rect_label(r));
  root["rects"] = rects;
  root["grid"] = opt.grid_resolution;
  Json widths = Json::array();
  for (const auto& e : opt.diagonal_widths) widths.push_back(e.to_string());
  root["diagonal_widths"] = widths;

  Json cps = Json::array();
  for (const auto& cp : report.checkpoints) {
    const double m = static_cast<double>(cp.pairs);
    Json c;
    c["x"] = cp.x;
    c["M"] = cp.pairs;
    Json weyl = Json::array();
    for (std::size_t i = 0; i < opt.frequencies.size(); ++i) {
      Json w;
      w["h1"] = opt.frequencies[i].h1;
      w["h2"] = opt.frequencies[i].h2;
      if (cp.pairs) {
        const auto avg = cp.weyl_sums[i] / m;
        w["re"] = number(avg.real());
        w["im"] = number(avg.imag());
        w["abs"] = number(std::abs(cp.weyl_sums[i]) / m);
      } else {
        w["re"] = w["im"] = w["abs"] = nullptr;
      }
      weyl.push_back(w);
    }
    c["weyl"] = weyl;
    Json boxes = Json::array();
    for (std::size_t i = 0; i < opt.rects.size(); ++i) {
      Json b;
      b["rect"] = rect_label(opt.rects[i]);
      b["count"] = cp.box_counts[i];
      const double frac = cp.pairs ? static_cast<double>(cp.box_counts[i]) / m : std::nan("");
      b["fraction"] = number(frac);
      b["area"] = number(opt.rects[i].area());
      b["deviation"] = number(frac - opt.rects[i].area());
      boxes.push_back(b);
    }
    c["box"] = boxes;
    if (opt.grid_resolution > 0 && cp.pairs)
      c["discrepancy"] = {{"lower", number(cp.discrepancy.lower)}, {"upper", number(cp.discrepancy.upper)}};
    else
      c["discrepancy"] = nullptr;
    c["counting_ratio"] = number(cp.counting_ratio());
    const double primes = static_cast<double>(cp.primes);
    Json split;
    split["primes"] = cp.primes;
    split["f"] = number(cp.primes ? static_cast<double>(cp.split_f) / primes : std::nan(""));
    split["g"] = number(cp.primes ? static_cast<double>(cp.split_g) / primes : std::nan(""));
    split["joint"] = number(cp.primes ? static_cast<double>(cp.split_joint) / primes : std::nan(""));
    c["split_density"] = split;
    Json diag = Json::array();
    for (std::size_t i = 0; i < opt.diagonal_widths.size(); ++i) {
      Json d;
      d["eps"] = opt.diagonal_widths[i].to_string();
      d["count"] = cp.diagonal_counts[i];
      d["fraction"] = number(cp.pairs ? static_cast<double>(cp.diagonal_counts[i]) / m : std::nan(""));
      diag.push_back(d);
    }
    c["diagonal"] = diag;
    cps.push_back(c);
  }
  root["checkpoints"] = cps;
  return root.dump(1) + "\n";
}

std::string weyl_csv(const EquidistReport& report) {
  std::string out = "x,h1,h2,re,im,abs,M\n";
  for (const auto& cp : report.checkpoints) {
    for (std::size_t i = 0; i < report.options.frequencies.size(); ++i) {
      const auto& f = report.options.frequencies[i];
      const double m = static_cast<double>(cp.pairs);
      const auto avg = cp.pairs ? cp.weyl_sums[i] / m : std::complex<double>(std::nan(""), std::nan(""));
      out += fmt::format("{},{},{},{},{},{},{}\n", cp.x, f.h1, f.h2, format_number(avg.real()),
                         format_number(avg.imag()), format_number(cp.pairs ? std::abs(cp.weyl_sums[i]) / m : std::nan("")),
                         cp.pairs);
    }
  }
  return out;
}

std::string weyl_json(const EquidistReport& report) {
  Json rows = Json::array();
  for (const auto& cp : report.checkpoints) {
    for (std::size_t i = 0; i < report.options.frequencies.size(); ++i) {
      const auto& f = report.options.frequencies[i];
      const double m = static_cast<double>(cp.pairs);
      Json r;
      r["x"] = cp.x;
      r["h1"] = f.h1;
      r["h2"] = f.h2;
      if (cp.pairs) {
        r["re"] = number((cp.weyl_sums[i] / m).real());
        r["im"] = number((cp.weyl_sums[i] / m).imag());
        r["abs"] = number(std::abs(cp.weyl_sums[i]) / m);
      } else {
        r["re"] = r["im"] = r["abs"] = nullptr;
      }
      r["M"] = cp.pairs;
      rows.push_back(r);
    }
  }
  Json root;
  root["f"] = report.spec.f.to_string();
  root["g"] = report.spec.g.to_string();
  root["moduli"] = std::string(to_string(report.spec.filter));
  root["rows"] = rows;
  return root.dump(1) + "\n";
}

}  // namespace equidist
