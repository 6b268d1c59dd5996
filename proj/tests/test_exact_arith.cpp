#include <doctest.h>

#include <random>

#include "fusscat/canonical_module.hpp"
#include "fusscat/checked_int.hpp"
#include "fusscat/exact_arith.hpp"
#include "fusscat/polyomino.hpp"
#include "fusscat/toric_cone.hpp"
#include "oracles.hpp"

using namespace fusscat;

namespace {

IntMatrix from_grid(const oracle::Grid& g) {
  IntMatrix m(static_cast<Eigen::Index>(g.size()), g.empty() ? 0 : static_cast<Eigen::Index>(g[0].size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) m(i, j) = Integer(g[i][j]);
  return m;
}

// Expression-built Integer matrices do not instantiate, so copy entrywise.
IntMatrix transposed(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

oracle::Grid random_grid(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  oracle::Grid g(rows, std::vector<std::int64_t>(cols));
  for (auto& row : g)
    for (auto& x : row) x = entry(rng);
  return g;
}

}  // namespace

TEST_CASE("binomial values and zero convention") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(12, 4) == 495);
  CHECK(binomial(-2, 2) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(to_decimal(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("binomial agrees with an additive Pascal table") {
  const auto table = oracle::pascal(40);
  for (int m = 0; m <= 40; ++m)
    for (int k = 0; k <= m; ++k) REQUIRE(binomial(m, k) == table[m][k]);
}

TEST_CASE("fuss_catalan") {
  CHECK(fuss_catalan(4, 3) == 55);
  CHECK(fuss_catalan(2, 2) == 2);
  CHECK(fuss_catalan(2, 4) == 4);
  CHECK(fuss_catalan(3, 4) == 22);
  CHECK(fuss_catalan(4, 2) == 14);
  CHECK(fuss_catalan(2, 1) == 1);
  CHECK_THROWS_AS(fuss_catalan(0, 3), ValidationError);
}

TEST_CASE("determinants of fixed matrices") {
  CHECK(det_exact(from_grid({{3, 3, 1}, {1, 5, 10}, {0, 1, 7}})) == 55);
  CHECK(det_exact(to_int_matrix(SmallMatrix::Identity(4, 4))) == 1);
  CHECK(det_exact(from_grid({{3, 3, 1, 0}, {1, 3, 3, 1}, {0, 1, 5, 10}, {0, 0, 1, 5}})) == 53);
  CHECK(det_exact(from_grid({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(from_grid({{1, 2}, {2, 4}})) == 0);
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), ValidationError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const auto g = random_grid(rng, n, n, -9, 9);
    REQUIRE(det_exact(from_grid(g)) == oracle::cofactor_det(g));
  }
}

TEST_CASE("rank agrees with rational elimination and transposition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
    auto g = random_grid(rng, rows, cols, -2, 2);
    if (trial % 3 == 0 && rows > 1) g[rows - 1] = g[0];
    const IntMatrix m = from_grid(g);
    const auto expected = static_cast<Eigen::Index>(oracle::rational_rank(g));
    REQUIRE(rank_exact(m) == expected);
    REQUIRE(rank_exact(transposed(m)) == expected);
    SmallMatrix small = m.unaryExpr([](const Integer& x) { return static_cast<std::int64_t>(x); });
    REQUIRE(rank_exact(small) == expected);
  }
  CHECK(rank_exact(from_grid(oracle::Grid(3, std::vector<std::int64_t>(4, 0)))) == 0);
  CHECK(rank_exact(to_int_matrix(SmallMatrix::Identity(5, 5))) == 5);
}

TEST_CASE("rank of the staircase generator matrix") {
  const auto gens = exponent_generators(stair(StairSpec({3, 3, 3}, {1, 1, 1})));
  REQUIRE(gens.size() == 31);
  const SmallMatrix m = stack_rows(gens, gens.front().size());
  CHECK(m.cols() == 14);
  CHECK(rank_exact(m) == 13);
}

TEST_CASE("checked 64-bit rank falls back on overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  SmallMatrix m(3, 3);
  m << big, 1, 3, 5, big, 7, 11, 13, big + 1;
  oracle::Grid g{{big, 1, 3}, {5, big, 7}, {11, 13, big + 1}};
  CHECK(rank_exact(m) == 3);
  CHECK(det_exact(to_int_matrix(m)) == oracle::cofactor_det(g));

  SmallMatrix dependent(2, 2);
  dependent << big, 2 * big, 3 * big, 6 * big;
  CHECK(rank_exact(dependent) == 1);

  using detail::CheckedInt64;
  CHECK_THROWS_AS(CheckedInt64(big) * CheckedInt64(big), detail::Int64Overflow);
  CHECK_THROWS_AS(CheckedInt64(INT64_MIN) / CheckedInt64(-1), detail::Int64Overflow);
}
