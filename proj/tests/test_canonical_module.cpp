#include <doctest.h>

#include "fusscat/canonical_module.hpp"
#include "fusscat/errors.hpp"
#include "fusscat/gfc.hpp"
#include "fusscat/monomial.hpp"
#include "oracles.hpp"

using namespace fusscat;

namespace {

const StairSpec kFirst({3, 3, 3}, {1, 1, 1});
const StairSpec kSecond({3, 3, 3}, {2, 2, 2});

bool has_alpha(const std::vector<CanonicalGenerator>& gens, const std::vector<int>& alpha) {
  return std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return g.alpha == alpha; });
}

std::vector<std::vector<int>> oracle_generators(const StairSpec& spec) {
  return oracle::corner_vectors(oracle::staircase_cells(spec.rises(), spec.runs()));
}

}  // namespace

TEST_CASE("closed-form generators") {
  const auto first = stair_generators(3, 1, 3);
  CHECK(first.size() == 55);
  CHECK(has_alpha(first, {1, 1, 1, 7}));
  CHECK(has_alpha(first, {3, 3, 3, 1}));
  CHECK(std::none_of(first.begin(), first.end(), [](const auto& g) { return g.alpha[0] >= 4; }));
  CHECK(first.front().monomial() == "x1*x2*x3*x4^7*y");
  CHECK(first.front().y_length == 10);

  const auto second = stair_generators(3, 2, 3);
  CHECK(second.size() == 55);
  CHECK(has_alpha(second, {1, 1, 1, 1, 1, 1, 4}));

  CHECK(cm_type_stair(3, 1, 3) == 55);
  CHECK(cm_type_stair(3, 2, 3) == 55);
  CHECK(cm_type_stair(4, 2, 2) == 53);
  CHECK_THROWS_AS(stair_generators(3, 3, 1), ValidationError);
}

TEST_CASE("shifting generators down by one gives the compositions") {
  for (int n = 2; n <= 5; ++n)
    for (int t = 1; t < n; ++t)
      for (int p = 1; p <= 3; ++p) {
        std::vector<CompositionVector> shifted;
        for (const auto& g : stair_generators(n, t, p)) {
          CompositionVector a = g.alpha;
          for (int& x : a) --x;
          shifted.push_back(a);
        }
        REQUIRE(shifted == enumerate_compositions(n, t, p));
      }
}

TEST_CASE("tex monomial parser") {
  const ParsedMonomial m = parse_tex_monomial("x_{1}^{3}x_{2}x_{4}^{12}y");
  CHECK(m.x_exponents == std::vector<int>{3, 1, 0, 12});
  CHECK(m.has_y);
  CHECK_THROWS_AS(parse_tex_monomial("x_{1}^{}y"), ValidationError);
  CHECK_THROWS_AS(parse_tex_monomial("z"), ValidationError);
}

TEST_CASE("minimal generator search") {
  const auto found = minimal_generators_search(kFirst, 11);
  std::vector<ExpVec> expected;
  for (const auto& g : stair_generators(3, 1, 3)) expected.push_back(g.exponent());
  CHECK(found == expected);
  CHECK(minimal_generators_search(kFirst, 9).empty());

  const auto single = minimal_generators_search(StairSpec({1}, {1}), 4);
  REQUIRE(single.size() == 1);
  CHECK(single.front() == ExpVec::Ones(4));

  SearchLimits tight;
  tight.max_volume = 5;
  CHECK_THROWS_AS(minimal_generators_search(kFirst, 11, tight), CapExceeded);
}

TEST_CASE("hilbert function values") {
  CHECK(hilbert_function(kFirst, 0) == 1);
  CHECK(hilbert_function(kFirst, 1) == 31);
  CHECK(hilbert_function(kSecond, 1) == 52);
  CHECK(hilbert_function(StairSpec({1}, {1}), 2) == 9);
  CHECK_THROWS_AS(hilbert_function(kFirst, -1), ValidationError);
}

TEST_CASE("hilbert function agrees with semigroup closure") {
  for (const StairSpec& spec : {kFirst, StairSpec({1, 2}, {2, 1}), StairSpec({2, 1, 1}, {1, 2, 1}),
                                StairSpec({1}, {3})}) {
    CAPTURE(spec.to_string());
    const int top = spec == kFirst ? 3 : 5;
    const auto reference = oracle::semigroup_hilbert(oracle_generators(spec), top);
    for (int d = 0; d <= top; ++d) REQUIRE(hilbert_function(spec, d) == reference[d]);
  }
}

TEST_CASE("hilbert numerators") {
  CHECK(hilbert_numerator(StairSpec({1}, {1}), 1) == std::vector<Integer>{1, 1});
  CHECK(hilbert_numerator(StairSpec({1}, {1}), 3) == std::vector<Integer>{1, 1, 0, 0});
  CHECK(hilbert_numerator(kFirst, 3) == std::vector<Integer>{1, 18, 66, 55});
  CHECK(hilbert_numerator(kSecond, 6) == std::vector<Integer>{1, 36, 318, 960, 1071, 444, 55});
}
