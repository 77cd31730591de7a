#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "equidist/modarith.hpp"

namespace equidist {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial with coefficients stored in ascending order
/// (coeffs[0] is the constant term). Trailing zeros are stripped, so the
/// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// Parses "c0,c1,...,cd". Whitespace around entries is allowed.
  /// Throws std::invalid_argument naming the offending position.
  static IntPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t i) const { return coeffs_.at(i); }
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  IntPolynomial scaled(const BigInt& k) const;

  /// Coefficients reduced into [0, m), ascending, untrimmed (size degree+1).
  std::vector<u64> reduce_mod(u64 m) const;

  /// f(x) mod m by Horner's rule with exact modular arithmetic.
  u64 eval_mod(u64 x, u64 m) const;

  /// Comma separated ascending coefficients, the same form parse() accepts.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Horner evaluation over pre-reduced coefficients.
inline u64 eval_reduced(const std::vector<u64>& reduced, u64 x, u64 m) {
  u64 acc = 0;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = addmod(mulmod(acc, x, m), *it, m);
  return acc;
}

/// gcd of all coefficients (positive). Throws on the zero polynomial.
BigInt content(const IntPolynomial& p);

/// Resultant of a and b via the subresultant pseudo-remainder sequence.
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);

/// disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p). Requires degree >= 2.
BigInt discriminant(const IntPolynomial& p);

enum class Irreducibility { proved_irreducible, proved_reducible, inconclusive };

std::string_view to_string(Irreducibility v);

struct IrreducibilityEvidence {
  Irreducibility verdict = Irreducibility::inconclusive;
  /// Human-readable reason, e.g. "irreducible mod 3" or "rational root -1".
  std::string detail;
};

/// Checks the rational root test, then reductions modulo the first
/// `prime_budget` primes not dividing lc(p) * disc(p). A single irreducible
/// reduction or incompatible degree patterns prove irreducibility.
IrreducibilityEvidence irreducibility_evidence(const IntPolynomial& p, std::size_t prime_budget);

/// Validates the standing hypotheses for the equidistribution pipeline:
/// nonzero, degree >= 2, primitive. Throws std::invalid_argument otherwise.
void require_pipeline_polynomial(const IntPolynomial& p, std::string_view name);

}  // namespace equidist
