#include "equidist/expsum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace equidist {

std::complex<double> unit_root(u64 k, u64 n) {
  k %= n;
  if (k == 0) return {1.0, 0.0};
  // Signed residue in (-n/2, n/2].
  const double num = (2 * k <= n) ? static_cast<double>(k) : -static_cast<double>(n - k);
  const double angle = 2.0 * std::numbers::pi * num / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

u64 phase_numerator(i64 h, u64 mu, u64 n) { return mulmod(reduce_signed(h, n), mu % n, n); }

ExpSumValue exp_sum(const RootSet& rs, i64 h) {
  std::complex<double> acc{0.0, 0.0};
  const u64 hr = reduce_signed(h, rs.modulus);
  for (u64 mu : rs.roots) acc += unit_root(mulmod(hr, mu, rs.modulus), rs.modulus);
  return {acc, rs.modulus, h, 0};
}

ExpSumValue joint_exp_sum(const RootSet& rs_f, const RootSet& rs_g, i64 h1, i64 h2) {
  if (rs_f.modulus != rs_g.modulus) throw std::invalid_argument("modulus mismatch in joint exponential sum");
  const auto a = exp_sum(rs_f, h1).value;
  const auto b = exp_sum(rs_g, h2).value;
  return {a * b, rs_f.modulus, h1, h2};
}

double verify_parseval(const RootSet& rs) {
  const u64 n = rs.modulus;
  double total = 0;
  for (u64 a = 1; a <= n; ++a) total += std::norm(exp_sum(rs, static_cast<i64>(a % n)).value);
  return std::abs(total - static_cast<double>(n) * static_cast<double>(rs.count()));
}

double parseval_tolerance(const RootSet& rs) {
  const double r = std::max<double>(static_cast<double>(rs.count()), 1.0);
  return 1e-6 * static_cast<double>(rs.modulus) * r;
}

TwistedResiduals verify_twisted_mult(const IntPolynomial& f, u64 n, u64 n2, i64 h, i64 h2) {
  if (n == 0 || n2 == 0) throw std::invalid_argument("moduli must be positive");
  if (std::gcd(n, n2) != 1) throw std::invalid_argument("moduli are not coprime");
  if (static_cast<u128>(n) * n2 > kPrimePowerCap) throw std::overflow_error("product of moduli too large");
  const u64 nn = n * n2;
  const RootSet rs_n = roots_mod_n(f, n, factor_trial(n));
  const RootSet rs_n2 = roots_mod_n(f, n2, factor_trial(n2));
  const RootSet rs_nn = roots_mod_n(f, nn, factor_trial(nn));

  TwistedResiduals out;
  out.r_n = rs_n.count();
  out.r_n2 = rs_n2.count();

  // Frequencies are reduced modulo n*n2 before combining so no product can overflow.
  const u64 hr = reduce_signed(h, nn);
  const u64 h2r = reduce_signed(h2, nn);
  const u64 combined = addmod(mulmod(hr, n2 % nn, nn), mulmod(h2r, n % nn, nn), nn);
  const auto lhs = exp_sum(rs_n, static_cast<i64>(hr % n)).value * exp_sum(rs_n2, static_cast<i64>(h2r % n2)).value;
  const auto rhs = exp_sum(rs_nn, static_cast<i64>(combined)).value;
  out.product_rule = std::abs(lhs - rhs);

  const u64 inv_n2 = invmod(n2 % n, n);
  const u64 inv_n = invmod(n % n2, n2);
  const auto whole = exp_sum(rs_nn, static_cast<i64>(hr)).value;
  const auto split = exp_sum(rs_n, static_cast<i64>(mulmod(hr % n, inv_n2, n))).value *
                     exp_sum(rs_n2, static_cast<i64>(mulmod(hr % n2, inv_n, n2))).value;
  out.split_rule = std::abs(whole - split);
  return out;
}

}  // namespace equidist
