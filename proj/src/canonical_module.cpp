#include "fusscat/canonical_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusscat/exact_arith.hpp"
#include "fusscat/gfc.hpp"
#include "fusscat/polyomino.hpp"

namespace fusscat {

ExpVec CanonicalGenerator::exponent() const {
  ExpVec z(static_cast<Eigen::Index>(alpha.size()) + y_length);
  for (std::size_t i = 0; i < alpha.size(); ++i) z(static_cast<Eigen::Index>(i)) = alpha[i];
  z.tail(y_length).setOnes();
  return z;
}

std::string CanonicalGenerator::monomial() const {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (alpha[i] != 1) out += "^" + std::to_string(alpha[i]);
    out += "*";
  }
  return out + "y";
}

namespace {

struct GeneratorWalk {
  int t;
  int p;
  int n;
  int total;  // pn + 1
  std::vector<CanonicalGenerator>* out;
  std::vector<int> alpha;

  // Largest prefix sum allowed once position `index` (0-based) is filled:
  // strict "< kn + 1" at the next checkpoint kt, or the total minus one per
  // remaining position.
  int prefix_cap(int index) const {
    const int remaining = static_cast<int>(alpha.size()) - 1 - index;
    const int checkpoint = index / t + 1;
    const int cap = checkpoint <= p - 1 ? checkpoint * n : total;
    return std::min(cap, total - remaining);
  }

  void fill(int index, int prefix) {
    const int last = static_cast<int>(alpha.size()) - 1;
    if (index == last) {
      alpha[index] = total - prefix;
      out->push_back({alpha, total});
      return;
    }
    const int cap = prefix_cap(index);
    for (int v = 1; prefix + v <= cap; ++v) {
      alpha[index] = v;
      fill(index + 1, prefix + v);
    }
  }
};

// Inequalities other than the nonnegativity of single coordinates, restricted
// to the shapes the searches below understand.
struct ShapedCone {
  const ConeRep* cone;
  std::vector<const ExpVec*> mixed;  // normals that are not unit vectors
};

ShapedCone shape_of(const ConeRep& cone) {
  const Eigen::Index dim = cone.ambient_dim();
  std::vector<bool> unit_seen(static_cast<std::size_t>(dim), false);
  ShapedCone shaped{&cone, {}};
  for (const ExpVec& a : cone.normals) {
    if (a.size() != dim) throw ValidationError("normal has the wrong length");
    Eigen::Index hot = -1;
    if ((a.array() == 0).count() == dim - 1 && a.maxCoeff() == 1 && a.minCoeff() == 0) {
      a.maxCoeff(&hot);
      unit_seen[static_cast<std::size_t>(hot)] = true;
    } else {
      shaped.mixed.push_back(&a);
    }
  }
  if (!std::all_of(unit_seen.begin(), unit_seen.end(), [](bool b) { return b; })) {
    throw ValidationError("cone must bound every coordinate below (all unit normals present)");
  }
  ExpVec expected_nu(dim);
  expected_nu.head(cone.x_dim).setOnes();
  expected_nu.tail(cone.y_dim).setConstant(-1);
  if (cone.nu != expected_nu) {
    throw ValidationError("equality normal must equate x-degree and y-degree");
  }
  return shaped;
}

Integer positive_compositions(int total, int parts) {
  return binomial(total - 1, parts - 1);
}

// Depth-first walk over y-parts with y_j >= 1 and sum d, pruning on the
// best still-reachable value of every mixed inequality.
class RelintYWalk {
 public:
  RelintYWalk(const ShapedCone& shaped, const ExpVec& z_x_filled, int degree)
      : shaped_(shaped), z_(z_x_filled), degree_(degree), x_dim_(shaped.cone->x_dim),
        y_dim_(shaped.cone->y_dim) {
    const std::size_t m = shaped_.mixed.size();
    partial_.assign(m, 0);
    suffix_sum_.assign(m, std::vector<std::int64_t>(y_dim_ + 1, 0));
    suffix_max_.assign(m, std::vector<std::int64_t>(y_dim_ + 1, 0));
    for (std::size_t k = 0; k < m; ++k) {
      const ExpVec& a = *shaped_.mixed[k];
      partial_[k] = a.head(x_dim_).dot(z_.head(x_dim_));
      std::int64_t best = std::numeric_limits<std::int64_t>::min();
      for (int j = y_dim_ - 1; j >= 0; --j) {
        best = std::max(best, a(x_dim_ + j));
        suffix_sum_[k][j] = suffix_sum_[k][j + 1] + a(x_dim_ + j);
        suffix_max_[k][j] = best;
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    walk(0, degree_, visit);
  }

 private:
  bool reachable(int next, int remaining) const {
    const int slots = y_dim_ - next;
    for (std::size_t k = 0; k < partial_.size(); ++k) {
      std::int64_t best = partial_[k];
      if (slots > 0) best += suffix_sum_[k][next] + (remaining - slots) * suffix_max_[k][next];
      if (best < 1) return false;
    }
    return true;
  }

  template <typename Visit>
  void walk(int j, int remaining, Visit& visit) {
    if (!reachable(j, remaining)) return;
    if (j == y_dim_ - 1) {
      set(j, remaining);
      if (reachable(y_dim_, 0)) visit(z_);
      unset(j);
      return;
    }
    const int slots_after = y_dim_ - 1 - j;
    for (int v = 1; v <= remaining - slots_after; ++v) {
      set(j, v);
      walk(j + 1, remaining - v, visit);
      unset(j);
    }
  }

  void set(int j, int v) {
    z_(x_dim_ + j) = v;
    for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] += (*shaped_.mixed[k])(x_dim_ + j) * v;
  }
  void unset(int j) {
    const std::int64_t v = z_(x_dim_ + j);
    for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] -= (*shaped_.mixed[k])(x_dim_ + j) * v;
    z_(x_dim_ + j) = 0;
  }

  const ShapedCone& shaped_;
  ExpVec z_;
  int degree_;
  int x_dim_;
  int y_dim_;
  std::vector<std::int64_t> partial_;
  std::vector<std::vector<std::int64_t>> suffix_sum_;
  std::vector<std::vector<std::int64_t>> suffix_max_;
};

// Calls visit(x) for each composition of `total` into x.size() parts >= floor,
// in lexicographic order.
template <typename Visit>
void for_each_composition(std::vector<int>& x, int index, int remaining, int floor, Visit& visit) {
  const int last = static_cast<int>(x.size()) - 1;
  if (index == last) {
    x[index] = remaining;
    visit(x);
    return;
  }
  const int after = (last - index) * floor;
  for (int v = floor; v <= remaining - after; ++v) {
    x[index] = v;
    for_each_composition(x, index + 1, remaining - v, floor, visit);
  }
}

bool is_minimal(const ConeRep& cone, const ExpVec& z) {
  for (const ExpVec& g : cone.gens) {
    // z - g can only stay interior if both coordinates of g are at least 2 in z.
    bool room = true;
    for (Eigen::Index k = 0; k < g.size() && room; ++k)
      if (g(k) > 0 && z(k) - g(k) < 1) room = false;
    if (room && in_relint(cone, z - g)) return false;
  }
  return true;
}

}  // namespace

std::vector<CanonicalGenerator> stair_generators(int n, int t, int p, const SearchLimits& limits) {
  validate_stair_parameters(n, t, p);
  const int parts = p * t + 1;
  const int total = p * n + 1;
  limits.check("canonical generator enumeration",
               saturating_u64(positive_compositions(total, parts) * parts));
  std::vector<CanonicalGenerator> out;
  GeneratorWalk walk{t, p, n, total, &out, std::vector<int>(parts, 1)};
  walk.fill(0, 0);
  return out;
}

Integer cm_type_stair(int n, int t, int p, const SearchLimits& limits) {
  return Integer(stair_generators(n, t, p, limits).size());
}

std::vector<ExpVec> minimal_generators_search(const ConeRep& cone, int degree_max,
                                              const SearchLimits& limits) {
  if (degree_max < 0) throw ValidationError("require degree_max >= 0");
  const ShapedCone shaped = shape_of(cone);
  Integer volume(0);
  for (int d = 1; d <= degree_max; ++d)
    volume += positive_compositions(d, cone.x_dim) * positive_compositions(d, cone.y_dim);
  limits.check("canonical module search", saturating_u64(volume));

  std::vector<ExpVec> found;
  for (int d = std::max(cone.x_dim, cone.y_dim); d <= degree_max; ++d) {
    std::vector<ExpVec> at_degree;
    std::vector<int> x(static_cast<std::size_t>(cone.x_dim), 1);
    auto on_x = [&](const std::vector<int>& xs) {
      ExpVec z = ExpVec::Zero(cone.ambient_dim());
      for (int i = 0; i < cone.x_dim; ++i) z(i) = xs[static_cast<std::size_t>(i)];
      RelintYWalk ywalk(shaped, z, d);
      ywalk.run([&](const ExpVec& candidate) {
        if (in_relint(cone, candidate) && is_minimal(cone, candidate)) at_degree.push_back(candidate);
      });
    };
    for_each_composition(x, 0, d, 1, on_x);
    sort_lex(at_degree);
    found.insert(found.end(), at_degree.begin(), at_degree.end());
  }
  return found;
}

std::vector<ExpVec> minimal_generators_search(const StairSpec& spec, int degree_max,
                                              const SearchLimits& limits) {
  return minimal_generators_search(stair_cone(spec), degree_max, limits);
}

Integer hilbert_function(const ConeRep& cone, int d, const SearchLimits& limits) {
  if (d < 0) throw ValidationError("require degree >= 0");
  const ShapedCone shaped = shape_of(cone);

  // Each mixed normal a must read -<x, c> + (y_1 + ... + y_L); it then says
  // that the y prefix of length L is at least <x, c>.
  std::vector<int> prefix_length;
  for (const ExpVec* a : shaped.mixed) {
    const auto y = a->tail(cone.y_dim);
    int length = 0;
    while (length < cone.y_dim && y(length) == 1) ++length;
    if ((y.tail(cone.y_dim - length).array() != 0).any() || length == 0) {
      throw ValidationError("hilbert_function needs inequalities of the form -<x,c> + y-prefix");
    }
    prefix_length.push_back(length);
  }

  const Integer x_count = binomial(d + cone.x_dim - 1, cone.x_dim - 1);
  limits.check("hilbert function", saturating_u64(x_count * (cone.y_dim + 1)));

  // Group x-parts by the lower bounds they impose on the y prefixes.
  std::map<std::vector<std::int64_t>, Integer> demand_counts;
  std::vector<int> x(static_cast<std::size_t>(cone.x_dim), 0);
  auto on_x = [&](const std::vector<int>& xs) {
    std::vector<std::int64_t> demand(shaped.mixed.size());
    for (std::size_t k = 0; k < shaped.mixed.size(); ++k) {
      std::int64_t v = 0;
      for (int i = 0; i < cone.x_dim; ++i) v -= (*shaped.mixed[k])(i) * xs[static_cast<std::size_t>(i)];
      demand[k] = v;
    }
    demand_counts[demand] += 1;
  };
  for_each_composition(x, 0, d, 0, on_x);

  Integer total(0);
  for (const auto& [demand, multiplicity] : demand_counts) {
    // ways[s]: y-prefixes summing to s that meet every checkpoint so far.
    std::vector<Integer> ways(static_cast<std::size_t>(d) + 1, Integer(0));
    ways[0] = 1;
    for (int j = 1; j <= cone.y_dim; ++j) {
      Integer running(0);
      for (int s = 0; s <= d; ++s) {
        running += ways[static_cast<std::size_t>(s)];
        ways[static_cast<std::size_t>(s)] = running;
      }
      for (std::size_t k = 0; k < prefix_length.size(); ++k) {
        if (prefix_length[k] != j) continue;
        for (int s = 0; s <= d && s < demand[k]; ++s) ways[static_cast<std::size_t>(s)] = 0;
      }
    }
    total += multiplicity * ways[static_cast<std::size_t>(d)];
  }
  return total;
}

Integer hilbert_function(const StairSpec& spec, int d, const SearchLimits& limits) {
  return hilbert_function(stair_cone(spec), d, limits);
}

std::vector<Integer> hilbert_numerator(const StairSpec& spec, int degree_max,
                                       const SearchLimits& limits) {
  if (degree_max < 0) throw ValidationError("require degree_max >= 0");
  const ConeRep cone = stair_cone(spec);
  const std::int64_t dim = krull_dim(stair(spec));
  std::vector<Integer> series;
  for (int d = 0; d <= degree_max; ++d) series.push_back(hilbert_function(cone, d, limits));
  std::vector<Integer> numerator;
  for (int k = 0; k <= degree_max; ++k) {
    Integer h(0);
    for (int i = 0; i <= k; ++i) {
      const Integer term = binomial(dim, i) * series[static_cast<std::size_t>(k - i)];
      h += (i % 2 == 0) ? term : Integer(-term);
    }
    numerator.push_back(h);
  }
  return numerator;
}

}  // namespace fusscat
