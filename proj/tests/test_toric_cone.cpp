#include <doctest.h>

#include <set>

#include "fusscat/errors.hpp"
#include "fusscat/exact_arith.hpp"
#include "fusscat/toric_cone.hpp"
#include "oracles.hpp"

using namespace fusscat;

namespace {

const StairSpec kFirst({3, 3, 3}, {1, 1, 1});
const StairSpec kSecond({3, 3, 3}, {2, 2, 2});

ExpVec vec(std::initializer_list<std::int64_t> values) {
  ExpVec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

ExpVec unit(Eigen::Index size, Eigen::Index k) { return ExpVec::Unit(size, k); }

ExpVec sum_of(const std::vector<ExpVec>& vs) {
  ExpVec s = ExpVec::Zero(vs.front().size());
  for (const auto& v : vs) s += v;
  return s;
}

}  // namespace

TEST_CASE("exponent generators") {
  const auto single = exponent_generators(Polyomino({{1, 1}}));
  CHECK(single == std::vector<ExpVec>{vec({1, 0, 1, 0}), vec({1, 0, 0, 1}), vec({0, 1, 1, 0}),
                                      vec({0, 1, 0, 1})});

  const auto first = exponent_generators(stair(kFirst));
  CHECK(first.size() == 31);
  const auto second = exponent_generators(stair(kSecond));
  CHECK(second.size() == 52);
  CHECK(std::find(second.begin(), second.end(), vertex_exponent({7, 10}, 7, 10)) != second.end());

  std::set<std::vector<int>> mine, reference;
  for (const auto& g : first) mine.insert(std::vector<int>(g.data(), g.data() + g.size()));
  for (const auto& g : oracle::corner_vectors(oracle::staircase_cells({3, 3, 3}, {1, 1, 1})))
    reference.insert(g);
  CHECK(mine == reference);
  CHECK_THROWS_AS(vertex_exponent({0, 1}, 3, 3), ValidationError);
}

TEST_CASE("stair normals") {
  const StairNormals n = stair_normals(kFirst);
  ExpVec nu1 = ExpVec::Zero(14);
  nu1(0) = -1;
  nu1.segment(4, 4).setOnes();
  REQUIRE(n.inequalities.size() == 2 + 14);
  CHECK(n.inequalities[0] == nu1);
  CHECK(n.labels[0] == "nu_1");
  CHECK(n.labels[2] == "e_1");
  CHECK(n.equality.head(4) == ExpVec::Ones(4));
  CHECK(n.equality.tail(10) == ExpVec::Constant(10, -1));

  const StairNormals flat = stair_normals(StairSpec({2}, {3}));
  CHECK(flat.inequalities.size() == 4 + 3);
  for (const auto& a : flat.inequalities) CHECK(a.minCoeff() == 0);

  const ConeRep cone = stair_cone(kSecond);
  for (const auto& g : cone.gens) CHECK(g.dot(cone.nu) == 0);
}

TEST_CASE("containment and relative interior") {
  const ConeRep cone = stair_cone(kFirst);
  const ExpVec total = sum_of(cone.gens);
  for (const auto& g : cone.gens) {
    CHECK(contains(cone, g));
    CHECK_FALSE(contains(cone, ExpVec(-g)));
    CHECK_FALSE(in_relint(cone, g));
  }
  CHECK(contains(cone, total));
  CHECK(in_relint(cone, total));

  ExpVec first_generator(14);
  first_generator << 1, 1, 1, 7, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1;
  CHECK(in_relint(cone, first_generator));
  ExpVec too_heavy = first_generator;
  too_heavy << 4, 1, 1, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1;
  CHECK_FALSE(in_relint(cone, too_heavy));
  CHECK(contains(cone, too_heavy));
  ExpVec off_plane = first_generator;
  off_plane(3) = 8;
  CHECK_FALSE(contains(cone, off_plane));
}

TEST_CASE("extreme generators") {
  const ConeRep first = stair_cone(kFirst);
  ExpVec g = ExpVec::Zero(14);
  g(0) = 1;
  g(4) = 1;
  CHECK(is_extreme_generator(first, g));
  for (const auto& gen : first.gens) CHECK(is_extreme_generator(first, gen));
  const ConeRep single = stair_cone(StairSpec({1}, {1}));
  for (const auto& gen : single.gens) CHECK(is_extreme_generator(single, gen));
  CHECK_THROWS_AS(is_extreme_generator(first, ExpVec(2 * g)), ValidationError);
}

TEST_CASE("facet checks") {
  const ConeRep first = stair_cone(kFirst);
  CHECK(facet_check(first, first.normals[0]));
  CHECK(facet_check(first, unit(14, 0)));
  for (const auto& a : first.normals) CHECK(facet_check(first, a));
  const ConeRep single = stair_cone(StairSpec({1}, {1}));
  CHECK(facet_check(single, unit(4, 0)));
  CHECK_THROWS_AS(facet_check(single, vec({1, 1, 0, 0})), ValidationError);
}

TEST_CASE("h-representation certification") {
  const HRepReport first = verify_h_representation(kFirst);
  CHECK(first.passed());
  CHECK(first.cone_dim == 13);
  CHECK(first.extreme_count == 31);
  CHECK(first.facet_count == first.normal_count);

  const HRepReport single = verify_h_representation(StairSpec({1}, {1}));
  CHECK(single.passed());
  CHECK(single.cone_dim == 3);

  const HRepReport second = verify_h_representation(kSecond);
  CHECK(second.passed());
  CHECK(second.cone_dim == 16);
  CHECK(second.failures.empty());
}

TEST_CASE("cone dimension agrees with rational rank") {
  for (const StairSpec& spec : {kFirst, StairSpec({1, 2}, {2, 1}), StairSpec({2, 1, 1}, {1, 3, 1})}) {
    const ConeRep cone = stair_cone(spec);
    oracle::Grid grid;
    for (const auto& g : cone.gens) grid.emplace_back(g.data(), g.data() + g.size());
    CHECK(verify_h_representation(spec).cone_dim ==
          static_cast<Eigen::Index>(oracle::rational_rank(grid)));
  }
}
