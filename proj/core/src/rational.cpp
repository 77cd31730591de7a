#include "equidist/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace equidist {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("invalid number '" + std::string(text) + "'");
}

i64 checked_mul10(i64 v, std::string_view text) {
  if (v > std::numeric_limits<i64>::max() / 10) bad(text);
  return v * 10;
}

}  // namespace

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view t = text.substr(b, e - b);
  if (t.empty()) bad(text);

  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const Rational n = parse(t.substr(0, slash));
    const Rational d = parse(t.substr(slash + 1));
    if (n.den != 1 || d.den != 1) bad(text);
    return Rational(n.num, d.num);
  }

  std::size_t i = 0;
  bool negative = false;
  if (t[i] == '+' || t[i] == '-') negative = t[i++] == '-';
  i64 num = 0;
  i64 den = 1;
  bool any_digit = false;
  bool fraction = false;
  for (; i < t.size(); ++i) {
    const char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num = checked_mul10(num, text) + (c - '0');
      if (fraction) den = checked_mul10(den, text);
      any_digit = true;
    } else if (c == '.' && !fraction) {
      fraction = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad(text);
  if (i < t.size()) {
    if (t[i] != 'e' && t[i] != 'E') bad(text);
    ++i;
    bool neg_exp = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg_exp = t[i++] == '-';
    if (i == t.size()) bad(text);
    int exp = 0;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i])) || exp > 30) bad(text);
      exp = exp * 10 + (t[i] - '0');
    }
    for (int k = 0; k < exp; ++k) {
      if (neg_exp)
        den = checked_mul10(den, text);
      else
        num = checked_mul10(num, text);
    }
  }
  return Rational(negative ? -num : num, den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace equidist
