#include <doctest.h>

#include "fusscat/errors.hpp"
#include "fusscat/gfc.hpp"
#include "oracles.hpp"

using namespace fusscat;

TEST_CASE("composition enumeration") {
  CHECK(enumerate_compositions(2, 1, 1) == std::vector<CompositionVector>{{0, 1}, {1, 0}});
  CHECK(enumerate_compositions(5, 2, 1).size() == 10);
  const auto a = enumerate_compositions(3, 1, 3);
  CHECK(a.size() == 55);
  CHECK(std::is_sorted(a.begin(), a.end()));
  for (const auto& alpha : a) REQUIRE(is_admissible_composition(alpha, 3, 1, 3));
}

TEST_CASE("admissibility boundary") {
  CHECK(is_admissible_composition({2, 0, 2, 2}, 3, 1, 3));
  CHECK_FALSE(is_admissible_composition({3, 0, 0, 3}, 3, 1, 3));
  CHECK_FALSE(is_admissible_composition({2, 3, 0, 1}, 3, 1, 3));
  CHECK_FALSE(is_admissible_composition({1, 1, 1}, 3, 1, 3));
  CHECK_FALSE(is_admissible_composition({2, 2, 2, 1}, 3, 1, 3));
}

TEST_CASE("all methods give the reference values") {
  for (GfcMethod m : kAllGfcMethods) {
    CAPTURE(method_name(m));
    CHECK(generalized_fuss_catalan(3, 1, 3, m) == 55);
    CHECK(generalized_fuss_catalan(3, 2, 3, m) == 55);
    CHECK(generalized_fuss_catalan(4, 2, 2, m) == 53);
    CHECK(generalized_fuss_catalan(4, 1, 2, m) == 22);
  }
}

TEST_CASE("methods agree with box brute force") {
  for (int n = 2; n <= 5; ++n)
    for (int t = 1; t < n; ++t)
      for (int p = 1; p * t + 1 <= 7 && p <= 3; ++p) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(p);
        const Integer expected(oracle::weak_compositions_brute(n, t, p));
        for (GfcMethod m : kAllGfcMethods) REQUIRE(generalized_fuss_catalan(n, t, p, m) == expected);
      }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(generalized_fuss_catalan(3, 5, 1, GfcMethod::Dp), "require 1 <= t < n",
                       ValidationError);
  CHECK_THROWS_AS(generalized_fuss_catalan(3, 0, 1, GfcMethod::Determinant), ValidationError);
  CHECK_THROWS_AS(generalized_fuss_catalan(3, 1, 0, GfcMethod::Enumerate), ValidationError);
  SearchLimits tight;
  tight.max_volume = 10;
  CHECK_THROWS_AS(enumerate_compositions(3, 1, 3, tight), CapExceeded);
  CHECK_THROWS_AS(generalized_fuss_catalan(3, 1, 3, GfcMethod::Canonical, tight), CapExceeded);
  CHECK(generalized_fuss_catalan(3, 1, 3, GfcMethod::Determinant, tight) == 55);
}

TEST_CASE("method names round trip") {
  for (GfcMethod m : kAllGfcMethods) CHECK(parse_method(method_name(m)) == m);
  CHECK_FALSE(parse_method("bogus").has_value());
}

TEST_CASE("symmetry reports") {
  const SymmetryReport three = check_symmetry(3, 3);
  CHECK(three.passed());
  REQUIRE(three.pairs.size() == 2);
  CHECK(three.pairs[0].value == 55);
  CHECK(three.pairs[1].value == 55);

  const SymmetryReport two = check_symmetry(2, 5);
  REQUIRE(two.pairs.size() == 1);
  CHECK(two.pairs[0].t == 1);
  CHECK(two.passed());

  const SymmetryReport four = check_symmetry(4, 2);
  CHECK(four.passed());
  REQUIRE(four.pairs.size() == 3);
  CHECK(four.pairs[0].value == 22);
  CHECK(four.pairs[1].value == 53);
  CHECK(four.pairs[2].value == 22);
}
