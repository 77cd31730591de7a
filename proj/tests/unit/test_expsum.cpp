#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "equidist/expsum.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using equidist::FactorTable;
using equidist::IntPolynomial;
using equidist::RootCache;
using equidist::RootSet;

namespace {

RootSet roots_of(const IntPolynomial& f, std::uint64_t n) {
  return equidist::roots_mod_n(f, n, equidist::factor_trial(n));
}

}  // namespace

TEST_CASE("exp_sum examples") {
  const IntPolynomial f{1, 0, 1};
  const auto s3 = equidist::exp_sum(roots_of(f, 3), 1).value;
  CHECK(s3 == std::complex<double>(0, 0));

  const auto s5 = equidist::exp_sum(roots_of(f, 5), 1).value;
  CHECK(s5.real() == doctest::Approx(-1.6180339887).epsilon(1e-10));
  CHECK(std::abs(s5.imag()) < 1e-15);
  CHECK(s5.real() == doctest::Approx(2 * std::cos(4 * std::numbers::pi / 5)).epsilon(1e-14));

  const auto s5h5 = equidist::exp_sum(roots_of(f, 5), 5).value;
  CHECK(s5h5 == std::complex<double>(2, 0));
}

TEST_CASE("joint_exp_sum examples") {
  const IntPolynomial f{1, 0, 1}, g{-2, 0, 1};
  for (std::uint64_t n : {1u, 2u, 5u, 7u, 65u, 119u}) {
    const auto rf = roots_of(f, n), rg = roots_of(g, n);
    const auto zero = equidist::joint_exp_sum(rf, rg, 0, 0).value;
    CHECK(zero == std::complex<double>(static_cast<double>(rf.count() * rg.count()), 0));
  }
  const auto r5 = roots_of(f, 5);
  const auto v = equidist::joint_exp_sum(r5, r5, 1, 1).value;
  CHECK(v.real() == doctest::Approx(2.6180339887).epsilon(1e-10));
  CHECK(equidist::joint_exp_sum(roots_of(f, 3), roots_of(g, 3), 4, -9).value == std::complex<double>(0, 0));
  CHECK_THROWS_AS(equidist::joint_exp_sum(roots_of(f, 5), roots_of(g, 7), 1, 1), std::invalid_argument);
}

TEST_CASE("exp_sum agrees with a long double evaluation") {
  const std::vector<oracle::i64> c{-1, -1, 0, 1};
  const IntPolynomial f{-1, -1, 0, 1};
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto roots = oracle::brute_roots(c, n);
    const RootSet rs{n, roots};
    for (long long h : {-7LL, -1LL, 1LL, 3LL, 1000000007LL}) {
      const auto ref = oracle::exp_sum(roots, h, n);
      const auto got = equidist::exp_sum(rs, h).value;
      CHECK(std::abs(std::complex<long double>(got.real(), got.imag()) - ref) < 1e-12L);
    }
  }
}

TEST_CASE("conjugate symmetry, periodicity and the triangle bound") {
  const IntPolynomial f{1, 0, 1}, g{-1, -1, 0, 1};
  const FactorTable table(1000);
  const RootCache cf(f, table), cg(g, table);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto fac = table.factor(n);
    const RootSet rf = cf.roots_mod_n(n, fac), rg = cg.roots_mod_n(n, fac);
    for (long long h : {1LL, 2LL, 5LL, 17LL}) {
      const auto s = equidist::exp_sum(rf, h).value;
      const auto s_neg = equidist::exp_sum(rf, -h).value;
      CHECK(std::abs(s_neg - std::conj(s)) < 1e-12);
      CHECK(equidist::exp_sum(rf, h + static_cast<long long>(n)).value == s);
      CHECK(std::abs(s) <= static_cast<double>(rf.count()) + 1e-12);
      const auto joint = equidist::joint_exp_sum(rf, rg, h, 3 - h).value;
      CHECK(std::abs(joint) <= static_cast<double>(rf.count() * rg.count()) + 1e-9);
    }
    CHECK(equidist::exp_sum(rf, static_cast<long long>(n)).value ==
          std::complex<double>(static_cast<double>(rf.count()), 0));
  }
}

TEST_CASE("Parseval identity") {
  const IntPolynomial f{1, 0, 1};
  auto total = [&](std::uint64_t n) {
    const auto rs = roots_of(f, n);
    double sum = 0;
    for (std::uint64_t a = 1; a <= n; ++a) sum += std::norm(equidist::exp_sum(rs, static_cast<long long>(a)).value);
    return sum;
  };
  CHECK(total(5) == doctest::Approx(10.0));
  CHECK(total(3) == 0.0);
  CHECK(total(65) == doctest::Approx(260.0));
  for (std::uint64_t n : {3u, 5u, 65u, 1105u}) {
    const auto rs = roots_of(f, n);
    CHECK(equidist::verify_parseval(rs) <= equidist::parseval_tolerance(rs));
  }
}

TEST_CASE("mean square of S(ah;n) over a is at most 3 n r(n) gcd(h,n)") {
  const IntPolynomial f{-1, -1, 0, 1};
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto rs = roots_of(f, n);
    for (long long h : {2LL, 3LL, 6LL}) {
      double sum = 0;
      for (std::uint64_t a = 1; a <= n; ++a)
        sum += std::norm(equidist::exp_sum(rs, static_cast<long long>(a) * h).value);
      const double bound = 3.0 * static_cast<double>(n) * static_cast<double>(rs.count()) *
                           static_cast<double>(std::gcd(static_cast<std::uint64_t>(h), n));
      CHECK(sum <= bound + 1e-6);
    }
  }
}

TEST_CASE("twisted multiplicativity examples") {
  const IntPolynomial f{1, 0, 1}, g{-2, 0, 1};
  auto a = equidist::verify_twisted_mult(f, 5, 13, 1, 1);
  CHECK(a.product_rule < 1e-9);
  CHECK(a.split_rule < 1e-9);
  auto b = equidist::verify_twisted_mult(f, 5, 3, 1, 1);
  CHECK(b.product_rule == 0.0);
  CHECK(b.split_rule == 0.0);
  CHECK(b.r_n2 == 0);
  auto c = equidist::verify_twisted_mult(g, 7, 17, 2, 3);
  CHECK(c.product_rule < 1e-9);
  CHECK(c.split_rule < 1e-9);
  CHECK_THROWS_WITH_AS(equidist::verify_twisted_mult(f, 6, 10, 1, 1), "moduli are not coprime",
                       std::invalid_argument);
}

TEST_CASE("twisted multiplicativity on random coprime pairs") {
  std::mt19937_64 rng(1234);
  const IntPolynomial polys[] = {{1, 0, 1}, {-2, 0, 1}, {-1, -1, 0, 1}};
  int done = 0;
  while (done < 150) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 2000)(rng);
    const std::uint64_t n2 = std::uniform_int_distribution<std::uint64_t>(1, 1000000 / n)(rng);
    if (std::gcd(n, n2) != 1) continue;
    const long long h = std::uniform_int_distribution<long long>(-1000, 1000)(rng);
    const long long h2 = std::uniform_int_distribution<long long>(-1000, 1000)(rng);
    const auto res = equidist::verify_twisted_mult(polys[done % 3], n, n2, h, h2);
    CHECK(res.product_rule <= res.tolerance());
    CHECK(res.split_rule <= res.tolerance());
    ++done;
  }
}

TEST_CASE("unit roots") {
  CHECK(equidist::unit_root(0, 7) == std::complex<double>(1, 0));
  CHECK(equidist::unit_root(1, 2) == std::complex<double>(-1, std::sin(std::numbers::pi)));
  CHECK(equidist::unit_root(3, 7) == std::conj(equidist::unit_root(4, 7)));
  CHECK(equidist::phase_numerator(-1, 3, 7) == 4);
}
