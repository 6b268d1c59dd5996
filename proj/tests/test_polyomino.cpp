#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "fusscat/errors.hpp"
#include "fusscat/polyomino.hpp"
#include "oracles.hpp"

using namespace fusscat;

namespace {

const StairSpec kFirst({3, 3, 3}, {1, 1, 1});
const StairSpec kSecond({3, 3, 3}, {2, 2, 2});

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("stair shapes") {
  CHECK(stair(kFirst).size() == 18);
  CHECK(stair(kSecond).size() == 36);
  CHECK(stair(StairSpec({1}, {1})).cells() == std::vector<Cell>{{1, 1}});
  for (int k = 1; k <= 3; ++k) {
    CHECK(kFirst.top(k) == 1 + 3 * k);
    CHECK(kFirst.right(k) == 1 + k);
    CHECK(kSecond.right(k) == 1 + 2 * k);
  }
  CHECK(kFirst.top(0) == 1);
  CHECK(kFirst.right(0) == 1);
  CHECK(StairSpec::uniform(3, 1, 3) == kFirst);
  CHECK(StairSpec::uniform(3, 2, 3) == kSecond);
}

TEST_CASE("stair cells match a direct construction") {
  for (const auto& [u, r] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{3, 3, 3}, {1, 1, 1}}, {{1, 2}, {3, 1}}, {{2, 1, 3}, {2, 3, 1}}}) {
    std::vector<Cell> expected;
    for (auto [x, y] : oracle::staircase_cells(u, r)) expected.push_back({x, y});
    std::sort(expected.begin(), expected.end());
    CHECK(stair(StairSpec(u, r)).cells() == expected);
  }
}

TEST_CASE("stair spec validation") {
  CHECK_THROWS_AS(StairSpec({}, {}), ValidationError);
  CHECK_THROWS_AS(StairSpec({1, 0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(StairSpec({1, 2}, {1}), ValidationError);
  CHECK_THROWS_AS(StairSpec({1}, {-1}), ValidationError);
}

TEST_CASE("stair spec text round trip") {
  CHECK(kFirst.to_string() == "u=3,3,3;r=1,1,1");
  CHECK(StairSpec::parse(kFirst.to_string()) == kFirst);
  CHECK(StairSpec::parse("u=1,2;r=3,1") == StairSpec({1, 2}, {3, 1}));
  CHECK_THROWS_AS(StairSpec::parse("u=1,2"), ValidationError);
  CHECK_THROWS_AS(StairSpec::parse("u=1,x;r=1,1"), ValidationError);
}

TEST_CASE("vertex sets") {
  CHECK(vertex_set(stair(StairSpec({1}, {1}))) ==
        std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(vertex_set(stair(kFirst)).size() == 31);
  CHECK(vertex_set(stair(kSecond)).size() == 52);
}

TEST_CASE("polyomino validation and convexity") {
  CHECK(is_convex(Polyomino({{1, 1}, {2, 1}, {1, 2}})));
  CHECK_THROWS_AS(Polyomino({{1, 1}, {2, 2}}), ValidationError);
  CHECK_THROWS_AS(Polyomino({}), ValidationError);
  CHECK_THROWS_AS(Polyomino({{0, 1}}), ValidationError);
  CHECK_FALSE(is_convex(Polyomino({{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}})));
  CHECK_FALSE(is_convex(Polyomino({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}})));
  CHECK(Polyomino({{2, 1}, {1, 1}, {2, 1}}).size() == 2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(is_convex(stair(StairSpec({a, b}, {b, a}))));
}

TEST_CASE("inner intervals") {
  CHECK(inner_intervals(Polyomino({{1, 1}})).size() == 1);
  CHECK(inner_intervals(Polyomino({{1, 1}, {2, 1}})).size() == 3);
  CHECK(inner_intervals(Polyomino({{1, 1}, {2, 1}, {1, 2}})).size() == 5);

  const Polyomino poly = stair(kFirst);
  const auto intervals = inner_intervals(poly);
  std::size_t brute = 0;
  const auto vertices = vertex_set(poly);
  for (const auto& a : vertices)
    for (const auto& b : vertices) {
      if (a.x >= b.x || a.y >= b.y) continue;
      bool inside = true;
      for (int x = a.x; x < b.x && inside; ++x)
        for (int y = a.y; y < b.y && inside; ++y) inside = poly.contains({x, y});
      brute += inside;
    }
  CHECK(intervals.size() == brute);
  for (const auto& iv : intervals) {
    CHECK(iv.c == LatticePoint{iv.a.x, iv.b.y});
    CHECK(iv.d == LatticePoint{iv.b.x, iv.a.y});
    for (int x = iv.a.x; x < iv.b.x; ++x)
      for (int y = iv.a.y; y < iv.b.y; ++y) REQUIRE(poly.contains({x, y}));
  }
}

TEST_CASE("krull dimension") {
  CHECK(krull_dim(stair(kFirst)) == 13);
  CHECK(krull_dim(stair(kSecond)) == 16);
  CHECK(krull_dim(Polyomino({{1, 1}})) == 3);
  CHECK_THROWS_AS(krull_dim(Polyomino({{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}})), ValidationError);
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(Polyomino({{1, 1}})) == "#\n");
  CHECK(render_ascii(stair(StairSpec({2, 1}, {1, 1}))) == ".#\n##\n##\n");
  CHECK(render_ascii(stair(kFirst)) == slurp(FUSSCAT_GOLDEN_DIR "/stair_3_3_3_1_1_1.txt"));
}

TEST_CASE("cell text round trip") {
  const Polyomino poly = stair(kSecond);
  CHECK(parse_cell_text(to_cell_text(poly)) == poly);
  CHECK(parse_cell_text("1 1\n2 1\n") == Polyomino({{1, 1}, {2, 1}}));
  CHECK_THROWS_AS(parse_cell_text("1\n"), ValidationError);
  CHECK_THROWS_AS(parse_cell_text("1 1\n3 1\n"), ValidationError);
}
