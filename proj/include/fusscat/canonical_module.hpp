#pragma once

#include <string>
#include <vector>

#include "fusscat/errors.hpp"
#include "fusscat/integer.hpp"
#include "fusscat/toric_cone.hpp"

namespace fusscat {

/// Monomial x^alpha * y_1 ... y_{y_length}. For the uniform staircase (n, t, p)
/// alpha has pt + 1 positive entries summing to pn + 1, and the first kt
/// entries sum to less than kn + 1 for every k < p.
struct CanonicalGenerator {
  std::vector<int> alpha;
  int y_length = 0;

  ExpVec exponent() const;
  /// "x1*x2*x3*x4^7*y"
  std::string monomial() const;

  friend bool operator==(const CanonicalGenerator&, const CanonicalGenerator&) = default;
};

/// Closed-form generators of the canonical module of the uniform staircase,
/// lexicographically sorted by alpha.
std::vector<CanonicalGenerator> stair_generators(int n, int t, int p,
                                                 const SearchLimits& limits = {});

/// Cohen-Macaulay type of the uniform staircase: |stair_generators(n, t, p)|.
Integer cm_type_stair(int n, int t, int p, const SearchLimits& limits = {});

/// Integer points of the cone's relative interior with x-degree d <= degree_max
/// that are minimal: z - g leaves the relative interior for every generator g.
/// Sorted by degree, then lexicographically.
std::vector<ExpVec> minimal_generators_search(const ConeRep& cone, int degree_max,
                                              const SearchLimits& limits = {});
std::vector<ExpVec> minimal_generators_search(const StairSpec& spec, int degree_max,
                                              const SearchLimits& limits = {});

/// Number of cone lattice points of x-degree d, i.e. the number of degree-d
/// monomials of the (normal) toric ring. The cone's inequalities must be
/// unit vectors or of the form -(x prefix) + (y prefix); anything else is
/// rejected with ValidationError.
Integer hilbert_function(const ConeRep& cone, int d, const SearchLimits& limits = {});
Integer hilbert_function(const StairSpec& spec, int d, const SearchLimits& limits = {});

/// h_0..h_{degree_max} of (sum_d H(d) t^d) * (1 - t)^dim, truncated at degree_max,
/// with dim the Krull dimension of the staircase.
std::vector<Integer> hilbert_numerator(const StairSpec& spec, int degree_max,
                                       const SearchLimits& limits = {});

}  // namespace fusscat
