#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "equidist/root_cache_file.hpp"

using equidist::RootSet;

TEST_CASE("root cache lines round trip") {
  const std::vector<RootSet> sets{{5, {2, 3}}, {7, {}}, {25, {7, 18}}};
  std::ostringstream out;
  equidist::write_root_sets(out, sets);
  CHECK(out.str() == "5:2:2,3\n7:0:\n25:2:7,18\n");
  std::istringstream in(out.str());
  const auto back = equidist::read_root_sets(in);
  REQUIRE(back.size() == 3);
  CHECK(back.at(25) == sets[2]);
  CHECK(back.at(7).count() == 0);
}

TEST_CASE("malformed cache lines are rejected with a line number") {
  for (const char* bad : {"5:2:2\n", "5:1:7\n", "5:2:3,2\n", "x:0:\n", "5:1:2,\n", "5:2:2,2\n"}) {
    std::istringstream in(std::string("2:1:1\n") + bad);
    CHECK_THROWS_WITH_AS(equidist::read_root_sets(in), doctest::Contains("line 2"), std::runtime_error);
  }
}

TEST_CASE("cache files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "equidist_cache_test.txt";
  equidist::save_root_cache(path, {{13, {5, 8}}});
  CHECK(equidist::load_root_cache(path).at(13).roots == std::vector<equidist::u64>{5, 8});
  std::filesystem::remove(path);
  CHECK_THROWS_AS(equidist::load_root_cache(path), std::runtime_error);
}
