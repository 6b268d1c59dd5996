#include "fusscat/lattice_paths.hpp"

#include <sstream>

namespace fusscat {

HeightBounds HeightBounds::with_floor_zero(std::vector<std::int64_t> upper) {
  HeightBounds bounds;
  bounds.lower.assign(upper.size(), 0);
  bounds.upper = std::move(upper);
  return bounds;
}

std::vector<std::string> bound_violations(const HeightBounds& bounds) {
  std::vector<std::string> out;
  const auto& a = bounds.upper;
  const auto& b = bounds.lower;
  if (a.empty()) out.emplace_back("at least one step is required");
  if (a.size() != b.size()) {
    out.push_back("upper has " + std::to_string(a.size()) + " entries but lower has " +
                  std::to_string(b.size()));
    return out;
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] < a[i - 1])
      out.push_back("upper decreases at step " + std::to_string(i + 1) + " (" +
                    std::to_string(a[i - 1]) + " > " + std::to_string(a[i]) + ")");
    if (b[i] < b[i - 1])
      out.push_back("lower decreases at step " + std::to_string(i + 1) + " (" +
                    std::to_string(b[i - 1]) + " > " + std::to_string(b[i]) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i])
      out.push_back("upper < lower at step " + std::to_string(i + 1) + " (" +
                    std::to_string(a[i]) + " < " + std::to_string(b[i]) + ")");
  }
  return out;
}

void validate(const HeightBounds& bounds) {
  const auto violations = bound_violations(bounds);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid height bounds: ";
  for (std::size_t i = 0; i < violations.size(); ++i) msg << (i ? "; " : "") << violations[i];
  throw ValidationError(msg.str());
}

HeightBounds staircase_bounds(int n, int t, int p) {
  if (p < 1) throw ValidationError("require p >= 1");
  if (t < 1 || t >= n) throw ValidationError("require 1 <= t < n");
  std::vector<std::int64_t> upper;
  upper.reserve(static_cast<std::size_t>(p) * t);
  for (int block = 1; block <= p; ++block)
    for (int i = 0; i < t; ++i) upper.push_back(static_cast<std::int64_t>(block) * (n - t));
  return HeightBounds::with_floor_zero(std::move(upper));
}

Integer count_paths_dp(const HeightBounds& bounds) {
  validate(bounds);
  const std::int64_t base = bounds.lower.front();
  const std::int64_t span = bounds.upper.back() - base + 1;
  // ways[h - base]: sequences so far ending at height h.
  std::vector<Integer> ways(static_cast<std::size_t>(span), Integer(0));
  for (std::int64_t h = bounds.lower[0]; h <= bounds.upper[0]; ++h) ways[h - base] = 1;
  for (std::size_t i = 1; i < bounds.steps(); ++i) {
    std::vector<Integer> next(ways.size(), Integer(0));
    Integer running(0);
    for (std::int64_t h = base; h <= bounds.upper[i]; ++h) {
      running += ways[h - base];
      if (h >= bounds.lower[i]) next[h - base] = running;
    }
    ways = std::move(next);
  }
  Integer total(0);
  for (const auto& w : ways) total += w;
  return total;
}

IntMatrix path_count_matrix(const HeightBounds& bounds) {
  validate(bounds);
  const auto n = static_cast<Eigen::Index>(bounds.steps());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = binomial(bounds.upper[i] - bounds.lower[j] + 1, j - i + 1);
  return m;
}

Integer count_paths_det(const HeightBounds& bounds) {
  return det_exact(path_count_matrix(bounds));
}

namespace {

void extend(const HeightBounds& bounds, HeightSequence& prefix,
            std::vector<HeightSequence>& out) {
  const std::size_t i = prefix.size();
  if (i == bounds.steps()) {
    out.push_back(prefix);
    return;
  }
  std::int64_t from = bounds.lower[i];
  if (i > 0) from = std::max(from, prefix.back());
  for (std::int64_t h = from; h <= bounds.upper[i]; ++h) {
    prefix.push_back(h);
    extend(bounds, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HeightSequence> enumerate_height_sequences(const HeightBounds& bounds,
                                                       const SearchLimits& limits) {
  validate(bounds);
  if (bounds.steps() > kMaxEnumeratedSteps) {
    throw CapExceeded("height sequence enumeration with " + std::to_string(bounds.steps()) +
                          " steps (at most " + std::to_string(kMaxEnumeratedSteps) + ")",
                      static_cast<std::uint64_t>(bounds.steps()), kMaxEnumeratedSteps);
  }
  const Integer volume = count_paths_dp(bounds) * bounds.steps();
  limits.check("height sequence enumeration", saturating_u64(volume));
  std::vector<HeightSequence> out;
  HeightSequence prefix;
  prefix.reserve(bounds.steps());
  extend(bounds, prefix, out);
  return out;
}

}  // namespace fusscat
