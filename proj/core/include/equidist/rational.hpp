#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "equidist/modarith.hpp"

namespace equidist {

/// Exact rational num/den with den > 0, kept in lowest terms. Used for
/// interval endpoints so membership tests on a/n never touch floating point.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d);

  /// Accepts "3", "-0.25", "1/3", "1e-9", "2.5E-3".
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    return l <=> r;
  }
};

/// Sign of a/n - r, for 0 <= a and n > 0.
inline int compare_fraction(u64 a, u64 n, const Rational& r) {
  const __int128 l = static_cast<__int128>(a) * r.den;
  const __int128 rr = static_cast<__int128>(r.num) * static_cast<__int128>(n);
  return l < rr ? -1 : (l > rr ? 1 : 0);
}

}  // namespace equidist
