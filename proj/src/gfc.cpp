#include "fusscat/gfc.hpp"

#include <algorithm>
#include <numeric>

#include "fusscat/canonical_module.hpp"
#include "fusscat/lattice_paths.hpp"

namespace fusscat {

void validate_stair_parameters(int n, int t, int p) {
  if (p < 1) throw ValidationError("require p >= 1");
  if (t < 1 || t >= n) throw ValidationError("require 1 <= t < n");
}

bool is_admissible_composition(const CompositionVector& alpha, int n, int t, int p) {
  if (alpha.size() != static_cast<std::size_t>(p * t + 1)) return false;
  if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; })) return false;
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != p * (n - t)) return false;
  for (int k = 1; k < p; ++k) {
    if (std::accumulate(alpha.begin(), alpha.begin() + k * t, 0) > k * (n - t)) return false;
  }
  return true;
}

namespace {

struct CompositionWalk {
  int t;
  int p;
  int rise;  // n - t
  int total;
  std::vector<CompositionVector>* out;
  CompositionVector current;

  // Largest prefix sum allowed once position `index` (0-based) is filled.
  int prefix_cap(int index) const {
    const int checkpoint = index / t + 1;
    return checkpoint <= p - 1 ? checkpoint * rise : total;
  }

  void fill(int index, int prefix) {
    const int last = static_cast<int>(current.size()) - 1;
    if (index == last) {
      current[index] = total - prefix;
      out->push_back(current);
      return;
    }
    const int cap = prefix_cap(index);
    for (int v = 0; prefix + v <= cap; ++v) {
      current[index] = v;
      fill(index + 1, prefix + v);
    }
  }
};

}  // namespace

std::vector<CompositionVector> enumerate_compositions(int n, int t, int p,
                                                      const SearchLimits& limits) {
  validate_stair_parameters(n, t, p);
  const Integer count = count_paths_dp(staircase_bounds(n, t, p));
  limits.check("composition enumeration", saturating_u64(count * (p * t + 1)));

  std::vector<CompositionVector> out;
  out.reserve(count.convert_to<std::size_t>());
  CompositionWalk walk{t, p, n - t, p * (n - t), &out, CompositionVector(p * t + 1, 0)};
  walk.fill(0, 0);
  return out;
}

std::string_view method_name(GfcMethod method) {
  switch (method) {
    case GfcMethod::Enumerate: return "enum";
    case GfcMethod::Dp: return "dp";
    case GfcMethod::Determinant: return "det";
    case GfcMethod::Canonical: return "canonical";
  }
  return "unknown";
}

std::optional<GfcMethod> parse_method(std::string_view name) {
  for (GfcMethod m : kAllGfcMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

Integer generalized_fuss_catalan(int n, int t, int p, GfcMethod method,
                                 const SearchLimits& limits) {
  validate_stair_parameters(n, t, p);
  switch (method) {
    case GfcMethod::Enumerate:
      return Integer(enumerate_compositions(n, t, p, limits).size());
    case GfcMethod::Dp:
      return count_paths_dp(staircase_bounds(n, t, p));
    case GfcMethod::Determinant:
      return count_paths_det(staircase_bounds(n, t, p));
    case GfcMethod::Canonical:
      return cm_type_stair(n, t, p, limits);
  }
  throw ValidationError("unknown method");
}

bool SymmetryReport::passed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const SymmetryPair& s) { return s.equal(); });
}

SymmetryReport check_symmetry(int n, int p) {
  if (n < 2) throw ValidationError("require n >= 2");
  if (p < 1) throw ValidationError("require p >= 1");
  SymmetryReport report{n, p, {}};
  for (int t = 1; t < n; ++t) {
    report.pairs.push_back({t, generalized_fuss_catalan(n, t, p, GfcMethod::Determinant),
                            generalized_fuss_catalan(n, n - t, p, GfcMethod::Determinant)});
  }
  return report;
}

}  // namespace fusscat
