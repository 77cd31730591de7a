#pragma once

#include <complex>
#include <utility>

#include "equidist/polynomial.hpp"
#include "equidist/roots.hpp"

namespace equidist {

/// e(k/n) = exp(2 pi i k / n) for an exact residue k. The angle is taken in
/// (-pi, pi] so that e(-k/n) is the exact conjugate of e(k/n).
std::complex<double> unit_root(u64 k, u64 n);

/// h*mu mod n computed in integers, h may be negative.
u64 phase_numerator(i64 h, u64 mu, u64 n);

struct ExpSumValue {
  std::complex<double> value;
  u64 modulus = 1;
  i64 h1 = 0;
  i64 h2 = 0;
};

/// S(h; n): sum of e(h mu / n) over the roots mu in rs.
ExpSumValue exp_sum(const RootSet& rs, i64 h);

/// S(h1, h2; n) = S_f(h1; n) * S_g(h2; n). Moduli must match.
ExpSumValue joint_exp_sum(const RootSet& rs_f, const RootSet& rs_g, i64 h1, i64 h2);

/// |sum_{a=1..n} |S(a; n)|^2 - n r(n)|.
double verify_parseval(const RootSet& rs);

/// Tolerance the Parseval residual is held to: 1e-6 * n * max(r(n), 1).
double parseval_tolerance(const RootSet& rs);

struct TwistedResiduals {
  /// |S(h; n) S(h2; n2) - S(h n2 + h2 n; n n2)|
  double product_rule = 0;
  /// |S(h; n n2) - S(h inv(n2, n); n) S(h inv(n, n2); n2)|
  double split_rule = 0;
  std::size_t r_n = 0;
  std::size_t r_n2 = 0;

  double tolerance() const { return 1e-9 * (static_cast<double>(r_n) * static_cast<double>(r_n2) + 1.0); }
};

/// Evaluates both twisted multiplicativity identities for coprime n, n2.
/// Throws std::invalid_argument for non-coprime moduli.
TwistedResiduals verify_twisted_mult(const IntPolynomial& f, u64 n, u64 n2, i64 h, i64 h2);

}  // namespace equidist
