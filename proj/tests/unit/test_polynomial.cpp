#include <doctest.h>

#include <random>

#include "equidist/polynomial.hpp"
#include "oracles.hpp"

using equidist::BigInt;
using equidist::Irreducibility;
using equidist::IntPolynomial;

TEST_CASE("content") {
  CHECK(equidist::content(IntPolynomial{1, 0, 1}) == 1);
  CHECK(equidist::content(IntPolynomial{2, 4}) == 2);
  CHECK(equidist::content(IntPolynomial{6, 10, 15}) == 1);
  CHECK(equidist::content(IntPolynomial{-6, 0, -9}) == 3);
  CHECK_THROWS_WITH(equidist::content(IntPolynomial{0, 0}), "zero polynomial");
}

TEST_CASE("content scales with a constant factor") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> coeff(-50, 50), factor(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p{coeff(rng), coeff(rng), coeff(rng) | 1};
    long long k = factor(rng);
    if (k == 0) k = 7;
    CHECK(equidist::content(p.scaled(k)) == equidist::content(p) * (k < 0 ? -k : k));
  }
}

TEST_CASE("parse ascending coefficients") {
  const auto p = IntPolynomial::parse("1, 0,1");
  CHECK(p == IntPolynomial{1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(IntPolynomial::parse("-1,-1,0,1").to_string() == "-1,-1,0,1");
  CHECK(IntPolynomial::parse("123456789012345678901234567890,1").coeff(0) ==
        BigInt("123456789012345678901234567890"));
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK(IntPolynomial::parse("5,0,0").degree() == 0);
  CHECK_THROWS_WITH_AS(IntPolynomial::parse("1,,1"), "invalid coefficient '' at index 1 (column 3)",
                       std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
}

TEST_CASE("discriminant examples") {
  CHECK(equidist::discriminant(IntPolynomial{1, 0, 1}) == -4);
  CHECK(equidist::discriminant(IntPolynomial{-2, 0, 1}) == 8);
  CHECK(equidist::discriminant(IntPolynomial{-1, -1, 0, 1}) == -23);
  CHECK_THROWS_WITH_AS(equidist::discriminant(IntPolynomial{1, 1}), "degree too small", std::domain_error);
}

TEST_CASE("discriminant of quadratics equals b^2 - 4ac") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-1000, 1000);
  for (int trial = 0; trial < 300; ++trial) {
    long long a = d(rng), b = d(rng), c = d(rng);
    if (a == 0) a = 1;
    CHECK(equidist::discriminant(IntPolynomial{c, b, a}) == BigInt(b * b - 4 * a * c));
  }
}

TEST_CASE("discriminant of cubics matches the closed formula") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long long> d(-60, 60);
  for (int trial = 0; trial < 300; ++trial) {
    long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a == 0) a = -3;
    CHECK(equidist::discriminant(IntPolynomial{e, c, b, a}) == oracle::cubic_discriminant(a, b, c, e));
  }
}

TEST_CASE("resultant of polynomials with a common root vanishes") {
  // (x - 2)(x + 3) and (x - 2)(x^2 + 1)
  CHECK(equidist::resultant(IntPolynomial{-6, 1, 1}, IntPolynomial{-2, 1, -2, 1}) == 0);
  // Res(x - a, g) = g(a)
  CHECK(equidist::resultant(IntPolynomial{-3, 1}, IntPolynomial{1, 0, 1}) == 10);
}

TEST_CASE("irreducibility evidence") {
  auto x2p1 = equidist::irreducibility_evidence(IntPolynomial{1, 0, 1}, 5);
  CHECK(x2p1.verdict == Irreducibility::proved_irreducible);
  CHECK(x2p1.detail == "irreducible mod 3");

  auto x2m1 = equidist::irreducibility_evidence(IntPolynomial{-1, 0, 1}, 5);
  CHECK(x2m1.verdict == Irreducibility::proved_reducible);

  for (std::size_t budget : {1u, 5u, 25u, 60u}) {
    auto x4p1 = equidist::irreducibility_evidence(IntPolynomial{1, 0, 0, 0, 1}, budget);
    CHECK(x4p1.verdict == Irreducibility::inconclusive);
  }

  // (x^2 + 1)(x^2 + 2) has no rational root and is reducible.
  CHECK(equidist::irreducibility_evidence(IntPolynomial{2, 0, 3, 0, 1}, 30).verdict == Irreducibility::inconclusive);
  // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
  auto half = equidist::irreducibility_evidence(IntPolynomial{1, -3, 2}, 5);
  CHECK(half.verdict == Irreducibility::proved_reducible);
  // x^3 - x - 1 is irreducible mod 2.
  CHECK(equidist::irreducibility_evidence(IntPolynomial{-1, -1, 0, 1}, 3).verdict ==
        Irreducibility::proved_irreducible);
  // x^4 - 10x^2 + 1 is irreducible over Q but reducible mod every prime.
  CHECK(equidist::irreducibility_evidence(IntPolynomial{1, 0, -10, 0, 1}, 40).verdict ==
        Irreducibility::inconclusive);
  CHECK(equidist::to_string(Irreducibility::proved_reducible) == "proved-reducible");
}

TEST_CASE("certified irreducible polynomials are separable") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> d(-20, 20);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p{d(rng), d(rng), d(rng), 1};
    if (p.coeff(0) == 0) continue;
    auto ev = equidist::irreducibility_evidence(p, 10);
    if (ev.verdict == Irreducibility::proved_irreducible) {
      ++certified;
      CHECK(equidist::discriminant(p) != 0);
    }
  }
  CHECK(certified > 50);
}

TEST_CASE("pipeline hypotheses") {
  CHECK_NOTHROW(equidist::require_pipeline_polynomial(IntPolynomial{1, 0, 1}, "f"));
  CHECK_THROWS_WITH(equidist::require_pipeline_polynomial(IntPolynomial{}, "f"), "zero polynomial");
  CHECK_THROWS_WITH(equidist::require_pipeline_polynomial(IntPolynomial{1, 1}, "f"), "f: degree too small");
  CHECK_THROWS_WITH(equidist::require_pipeline_polynomial(IntPolynomial{2, 0, 2}, "g"),
                    "g: polynomial is not primitive");
}

TEST_CASE("modular evaluation") {
  const IntPolynomial p{-1, -1, 0, 1};
  for (std::uint64_t m : {2u, 7u, 1000003u})
    for (std::uint64_t x = 0; x < 50; ++x) {
      const long long v = static_cast<long long>(x * x * x) - static_cast<long long>(x) - 1;
      const long long mm = static_cast<long long>(m);
      CHECK(p.eval_mod(x, m) == static_cast<std::uint64_t>(((v % mm) + mm) % mm));
    }
}
