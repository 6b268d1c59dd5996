#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fusscat/errors.hpp"
#include "fusscat/integer.hpp"

namespace fusscat {

/// Weak composition alpha of p(n - t) into pt + 1 nonnegative parts whose
/// first kt parts sum to at most k(n - t) for every k < p.
using CompositionVector = std::vector<int>;

/// Throws ValidationError unless 1 <= t < n and p >= 1.
void validate_stair_parameters(int n, int t, int p);

bool is_admissible_composition(const CompositionVector& alpha, int n, int t, int p);

/// All admissible compositions for (n, t, p), lexicographically sorted,
/// generated depth-first with the prefix constraints applied as bounds.
std::vector<CompositionVector> enumerate_compositions(int n, int t, int p,
                                                      const SearchLimits& limits = {});

enum class GfcMethod { Enumerate, Dp, Determinant, Canonical };

std::string_view method_name(GfcMethod method);
std::optional<GfcMethod> parse_method(std::string_view name);

inline constexpr GfcMethod kAllGfcMethods[] = {GfcMethod::Enumerate, GfcMethod::Dp,
                                               GfcMethod::Determinant, GfcMethod::Canonical};

/// The generalized Fuss-Catalan number [n t]_p.
///  - Enumerate: size of enumerate_compositions
///  - Dp / Determinant: staircase lattice paths (see lattice_paths.hpp)
///  - Canonical: number of closed-form canonical-module generators
Integer generalized_fuss_catalan(int n, int t, int p, GfcMethod method,
                                 const SearchLimits& limits = {});

struct SymmetryPair {
  int t = 0;
  Integer value;     // [n t]_p
  Integer mirrored;  // [n n-t]_p
  bool equal() const { return value == mirrored; }
};

struct SymmetryReport {
  int n = 0;
  int p = 0;
  std::vector<SymmetryPair> pairs;
  bool passed() const;
};

/// Compares [n t]_p with [n n-t]_p by determinant for every 1 <= t < n.
SymmetryReport check_symmetry(int n, int p);

}  // namespace fusscat
