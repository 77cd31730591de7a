#pragma once

// Values frozen from tests/oracle/brute_force_oracle.py (exhaustive residue
// scan, run once with x = 100000; raw output in
// tests/oracle/oracle_output_x100000.json).

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fixtures {

inline const std::vector<long long> kXSquaredPlusOne{1, 0, 1};
inline const std::vector<long long> kXSquaredMinusTwo{-2, 0, 1};
inline const std::vector<long long> kCubic{-1, -1, 0, 1};

struct WeylFixture {
  long long h1, h2;
  double abs_1e3;
  double abs_1e4;
  double abs_1e5;
};

struct PairFixture {
  std::string_view name;
  const std::vector<long long>* f;
  const std::vector<long long>* g;
  std::array<std::uint64_t, 3> pairs;       // M at 1e3, 1e4, 1e5
  std::array<std::uint64_t, 3> box_half;    // pairs in (0,1/2)^2
  std::array<std::uint64_t, 3> diagonal;    // pairs on y=x or y=1-x, all moduli
  std::array<double, 3> disc_lower;         // grid 256 lower bracket
  std::array<WeylFixture, 4> weyl;
  double counting_ratio_1e3;
};

inline const std::array<PairFixture, 3> kPairs{{
    {"x^2+1, x^2+1",
     &kXSquaredPlusOne,
     &kXSquaredPlusOne,
     {1370, 16718, 196814},
     {342, 4179, 49203},
     {954, 9542, 95518},
     {0.0615234375, 0.034742608853598145, 0.029299112951594264},
     {{{1, 0, 0.012404689126587421, 0.0001228868663507326, 0.0004091975270117389},
       {0, 1, 0.012404689126587421, 0.0001228868663507326, 0.0004091975270117389},
       {1, 1, 0.30486276154503605, 0.25667981510418847, 0.22140368914356423},
       {2, -3, 0.0053483983999341, 0.004052886719352933, 0.0004840267901503181}}},
     1.7843822884289138},
    {"x^2+1, x^2-2",
     &kXSquaredPlusOne,
     &kXSquaredMinusTwo,
     {254, 2646, 26298},
     {63, 661, 6574},
     {1, 1, 1},
     {0.069091796875, 0.02035792344281462, 0.0063304212104413615},
     {{{1, 0, 0.021048686766225583, 0.0019345275878381806, 0.00020365329704529237},
       {0, 1, 0.013257180320498113, 0.006008338312134185, 0.00037764123036366983},
       {1, 1, 0.049663249905966635, 0.018860455271049355, 0.004576684115774786},
       {2, -3, 0.0002871786304280168, 0.05561827906512222, 0.003910830163936642}}},
     1.839714345481616},
    {"x^3-x-1, x^2-2",
     &kCubic,
     &kXSquaredMinusTwo,
     {209, 2123, 21589},
     {64, 575, 5470},
     {1, 1, 1},
     {0.15909288032203195, 0.060724625877204286, 0.014951774932537631},
     {{{1, 0, 0.15095062576533783, 0.05388971249697401, 0.02318643988883669},
       {0, 1, 0.020627129432425353, 0.03984562925955369, 0.002642641280367041},
       {1, 1, 0.08252516889542474, 0.025399086259870744, 0.007900061175403027},
       {2, -3, 0.10129088136309755, 0.029549535714745744, 0.010251509423341708}}},
     1.7851164756026003},
}};

// Split primes p <= 1e4: 1229 primes; r(p) = 2 for x^2+1 at 609, for x^2-2
// at 603, for both at 295.
inline constexpr std::uint64_t kPrimesTo1e4 = 1229;
inline constexpr std::uint64_t kSplitXSquaredPlusOne = 609;
inline constexpr std::uint64_t kSplitXSquaredMinusTwo = 603;
inline constexpr std::uint64_t kSplitJoint = 295;

}  // namespace fixtures
