#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusscat/errors.hpp"
#include "fusscat/exact_arith.hpp"
#include "fusscat/integer.hpp"

namespace fusscat {

/// Per-step height window for lattice paths with unit east and north steps:
/// the i-th horizontal step must run at a height in [lower[i], upper[i]].
struct HeightBounds {
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> lower;

  std::size_t steps() const { return upper.size(); }

  /// All-zero lower bound of matching length.
  static HeightBounds with_floor_zero(std::vector<std::int64_t> upper);

  friend bool operator==(const HeightBounds&, const HeightBounds&) = default;
};

using HeightSequence = std::vector<std::int64_t>;

/// Human-readable list of violated conditions (empty when valid): equal
/// nonzero lengths, both sequences weakly increasing, upper >= lower.
std::vector<std::string> bound_violations(const HeightBounds& bounds);

/// Throws ValidationError carrying every violation.
void validate(const HeightBounds& bounds);

/// Bounds of length pt with upper[i] = ceil(i/t) * (n - t) (1-based i) and a
/// zero floor. Calling with n - t in place of t gives the reflected family.
HeightBounds staircase_bounds(int n, int t, int p);

/// Counts weakly increasing height sequences inside the bounds with a
/// prefix-sum dynamic program over (step, height).
Integer count_paths_dp(const HeightBounds& bounds);

/// The n x n matrix binomial(upper[i] - lower[j] + 1, j - i + 1).
IntMatrix path_count_matrix(const HeightBounds& bounds);

/// Determinant of path_count_matrix; equals count_paths_dp on valid input.
Integer count_paths_det(const HeightBounds& bounds);

inline constexpr std::size_t kMaxEnumeratedSteps = 12;

/// Lexicographically sorted list of every admissible height sequence.
/// Refuses more than kMaxEnumeratedSteps steps, or output volume
/// (count * steps) above the cap.
std::vector<HeightSequence> enumerate_height_sequences(const HeightBounds& bounds,
                                                       const SearchLimits& limits = {});

}  // namespace fusscat
