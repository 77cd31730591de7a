#include "equidist/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "poly_mod_p.hpp"

namespace equidist {

namespace {

using Coeffs = std::vector<BigInt>;

void trim_coeffs(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int degree_of(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt content_of(const Coeffs& c) {
  BigInt g = 0;
  for (const auto& v : c) g = gcd_big(g, v);
  return g;
}

BigInt pow_big(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

// lc(b)^(deg a - deg b + 1) * a mod b over Z.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const int db = degree_of(b);
  int e = degree_of(a) - db + 1;
  const BigInt& lb = b.back();
  while (!a.empty() && degree_of(a) >= db) {
    const BigInt la = a.back();
    const int shift = degree_of(a) - db;
    for (auto& v : a) v *= lb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim_coeffs(a);
    --e;
  }
  if (e > 0) {
    const BigInt scale = pow_big(lb, static_cast<unsigned>(e));
    for (auto& v : a) v *= scale;
  }
  return a;
}

std::vector<u64> divisors_u64(u64 n) {
  std::vector<std::pair<u64, int>> fac;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    fac.emplace_back(d, k);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<u64> divs{1};
  for (auto [p, k] : fac) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

// Degrees of the irreducible factors of a monic squarefree polynomial mod p.
std::vector<int> degree_pattern(detail::PolyP f, u64 p) {
  std::vector<int> pattern;
  const detail::PolyP x{0, 1};
  detail::PolyP h = detail::rem(x, f, p);
  for (int i = 1; 2 * i <= detail::deg(f); ++i) {
    h = detail::powmod_poly(h, p, f, p);
    detail::PolyP g = detail::gcd(f, detail::sub(h, x, p), p);
    if (detail::deg(g) > 0) {
      for (int k = 0; k < detail::deg(g) / i; ++k) pattern.push_back(i);
      f = detail::divrem(f, g, p).first;
      h = detail::rem(h, f, p);
    }
  }
  if (detail::deg(f) > 0) pattern.push_back(detail::deg(f));
  return pattern;
}

std::set<int> subset_degree_sums(const std::vector<int>& pattern) {
  std::set<int> sums{0};
  for (int d : pattern) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() { trim_coeffs(coeffs_); }

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t b = pos, e = end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string_view token = text.substr(b, e - b);
    std::size_t digits = 0;
    if (!token.empty() && (token[0] == '-' || token[0] == '+')) digits = 1;
    const bool ok = token.size() > digits &&
                    std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits), token.end(),
                                [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
    if (!ok) {
      std::ostringstream msg;
      msg << "invalid coefficient '" << token << "' at index " << index << " (column " << b + 1 << ")";
      throw std::invalid_argument(msg.str());
    }
    BigInt v(std::string(token[0] == '+' ? token.substr(1) : token));
    coeffs.push_back(std::move(v));
    ++index;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long long>(i));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::scaled(const BigInt& k) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

std::vector<u64> IntPolynomial::reduce_mod(u64 m) const {
  std::vector<u64> out(coeffs_.size());
  const BigInt mm = m;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt r = coeffs_[i] % mm;
    if (r < 0) r += mm;
    out[i] = r.convert_to<u64>();
  }
  return out;
}

u64 IntPolynomial::eval_mod(u64 x, u64 m) const { return eval_reduced(reduce_mod(m), x % m, m); }

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

BigInt content(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  return content_of(p.coeffs());
}

BigInt resultant(const IntPolynomial& pa, const IntPolynomial& pb) {
  if (pa.is_zero() || pb.is_zero()) return 0;
  Coeffs a = pa.coeffs();
  Coeffs b = pb.coeffs();
  BigInt sign = 1;
  if (degree_of(a) < degree_of(b)) {
    std::swap(a, b);
    if (degree_of(a) % 2 == 1 && degree_of(b) % 2 == 1) sign = -1;
  }
  if (degree_of(b) == 0) return sign * pow_big(b[0], static_cast<unsigned>(degree_of(a)));

  const BigInt ca = content_of(a);
  const BigInt cb = content_of(b);
  for (auto& v : a) v /= ca;
  for (auto& v : b) v /= cb;
  const BigInt t = pow_big(ca, static_cast<unsigned>(degree_of(b))) * pow_big(cb, static_cast<unsigned>(degree_of(a)));

  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const int delta = degree_of(a) - degree_of(b);
    if (degree_of(a) % 2 == 1 && degree_of(b) % 2 == 1) sign = -sign;
    Coeffs r = pseudo_remainder(a, b);
    a = std::move(b);
    const BigInt divisor = g * pow_big(h, static_cast<unsigned>(delta));
    for (auto& v : r) v /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h^(1-0) g^0 = h
    } else {
      h = pow_big(g, static_cast<unsigned>(delta)) / pow_big(h, static_cast<unsigned>(delta - 1));
    }
    if (b.empty()) return 0;
    if (degree_of(b) == 0) break;
  }
  const int da = degree_of(a);
  const BigInt last = pow_big(b.back(), static_cast<unsigned>(da)) / pow_big(h, static_cast<unsigned>(da - 1));
  return sign * t * last;
}

BigInt discriminant(const IntPolynomial& p) {
  if (p.degree() < 2) throw std::domain_error("degree too small");
  const int d = p.degree();
  BigInt res = resultant(p, p.derivative());
  BigInt disc = res / p.leading();
  if ((static_cast<long long>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

std::string_view to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::proved_irreducible:
      return "proved-irreducible";
    case Irreducibility::proved_reducible:
      return "proved-reducible";
    case Irreducibility::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IrreducibilityEvidence irreducibility_evidence(const IntPolynomial& p, std::size_t prime_budget) {
  require_pipeline_polynomial(p, "polynomial");
  const int d = p.degree();
  const auto& c = p.coeffs();

  // Rational root test. Only run when both end coefficients are small enough
  // to enumerate divisors by trial division.
  bool rational_test_complete = false;
  if (c.front() == 0) return {Irreducibility::proved_reducible, "rational root 0"};
  {
    BigInt a0 = abs(c.front());
    BigInt ad = abs(c.back());
    const BigInt bound = BigInt(1) << 40;
    if (a0 <= bound && ad <= bound) {
      const auto nums = divisors_u64(a0.convert_to<u64>());
      const auto dens = divisors_u64(ad.convert_to<u64>());
      rational_test_complete = true;
      for (u64 u : nums) {
        for (u64 v : dens) {
          if (gcd_big(u, v) != 1) continue;
          for (int s : {1, -1}) {
            // v^d f(s*u/v) = sum c_i (s u)^i v^(d-i)
            const BigInt su = BigInt(s) * u;
            BigInt acc = 0;
            BigInt vpow = 1;
            for (int i = d; i >= 0; --i) {
              acc = acc * su + c[static_cast<std::size_t>(i)] * vpow;
              vpow *= v;
            }
            if (acc == 0) {
              std::ostringstream msg;
              msg << "rational root " << (s < 0 ? "-" : "") << u;
              if (v != 1) msg << "/" << v;
              return {Irreducibility::proved_reducible, msg.str()};
            }
          }
        }
      }
    }
  }

  const BigInt disc = discriminant(p);
  std::set<int> feasible;
  for (int k = 0; k <= d; ++k) feasible.insert(k);
  std::size_t tested = 0;
  for (u64 q = 2; tested < prime_budget; ++q) {
    if (!is_prime_u64(q)) continue;
    if (c.back() % q == 0 || disc % q == 0) continue;
    ++tested;
    auto reduced = p.reduce_mod(q);
    detail::PolyP f(reduced.begin(), reduced.end());
    detail::trim(f);
    f = detail::make_monic(std::move(f), q);
    const auto pattern = degree_pattern(f, q);
    if (pattern.size() == 1) return {Irreducibility::proved_irreducible, "irreducible mod " + std::to_string(q)};
    const auto sums = subset_degree_sums(pattern);
    std::set<int> next;
    std::set_intersection(feasible.begin(), feasible.end(), sums.begin(), sums.end(), std::inserter(next, next.begin()));
    feasible = std::move(next);
    if (feasible.size() == 2) return {Irreducibility::proved_irreducible, "incompatible factor degree patterns"};
  }
  if (rational_test_complete && d <= 3) return {Irreducibility::proved_irreducible, "no rational root and degree <= 3"};
  return {Irreducibility::inconclusive, "no certificate within prime budget"};
}

void require_pipeline_polynomial(const IntPolynomial& p, std::string_view name) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() < 2) throw std::invalid_argument(std::string(name) + ": degree too small");
  if (content(p) != 1) throw std::invalid_argument(std::string(name) + ": polynomial is not primitive");
}

}  // namespace equidist
