#include "fusscat/toric_cone.hpp"

#include <algorithm>

#include "fusscat/errors.hpp"

namespace fusscat {

bool lex_less(const ExpVec& a, const ExpVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void sort_lex(std::vector<ExpVec>& vs) { std::sort(vs.begin(), vs.end(), lex_less); }

ExpVec vertex_exponent(LatticePoint v, int x_dim, int y_dim) {
  if (v.x < 1 || v.x > x_dim || v.y < 1 || v.y > y_dim) {
    throw ValidationError("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                          ") outside [1," + std::to_string(x_dim) + "]x[1," +
                          std::to_string(y_dim) + "]");
  }
  ExpVec e = ExpVec::Zero(x_dim + y_dim);
  e(v.x - 1) = 1;
  e(x_dim + v.y - 1) = 1;
  return e;
}

std::vector<ExpVec> exponent_generators(const Polyomino& poly, int x_dim, int y_dim) {
  std::vector<ExpVec> gens;
  for (const LatticePoint& v : vertex_set(poly)) gens.push_back(vertex_exponent(v, x_dim, y_dim));
  return gens;
}

std::vector<ExpVec> exponent_generators(const Polyomino& poly) {
  return exponent_generators(poly, poly.max_x() + 1, poly.max_y() + 1);
}

StairNormals stair_normals(const StairSpec& spec) {
  const int p = spec.steps();
  const int x_dim = spec.right(p);
  const int y_dim = spec.top(p);
  const int ambient = x_dim + y_dim;
  StairNormals out;
  for (int i = 1; i < p; ++i) {
    ExpVec nu_i = ExpVec::Zero(ambient);
    nu_i.head(spec.right(i) - 1).setConstant(-1);
    nu_i.segment(x_dim, spec.top(i)).setConstant(1);
    out.inequalities.push_back(std::move(nu_i));
    out.labels.push_back("nu_" + std::to_string(i));
  }
  for (int k = 0; k < ambient; ++k) {
    out.inequalities.push_back(ExpVec::Unit(ambient, k));
    out.labels.push_back("e_" + std::to_string(k + 1));
  }
  out.equality = ExpVec::Zero(ambient);
  out.equality.head(x_dim).setConstant(1);
  out.equality.tail(y_dim).setConstant(-1);
  return out;
}

ConeRep stair_cone(const StairSpec& spec) {
  ConeRep cone;
  cone.x_dim = spec.right(spec.steps());
  cone.y_dim = spec.top(spec.steps());
  cone.gens = exponent_generators(stair(spec), cone.x_dim, cone.y_dim);
  StairNormals normals = stair_normals(spec);
  cone.normals = std::move(normals.inequalities);
  cone.normal_labels = std::move(normals.labels);
  cone.nu = std::move(normals.equality);
  return cone;
}

namespace {

void require_dimension(const ConeRep& cone, const ExpVec& z) {
  if (z.size() != cone.ambient_dim()) {
    throw ValidationError("vector of length " + std::to_string(z.size()) +
                          " does not match ambient dimension " +
                          std::to_string(cone.ambient_dim()));
  }
}

bool satisfies(const ConeRep& cone, const ExpVec& z, std::int64_t threshold) {
  require_dimension(cone, z);
  if (z.dot(cone.nu) != 0) return false;
  return std::all_of(cone.normals.begin(), cone.normals.end(),
                     [&](const ExpVec& a) { return z.dot(a) >= threshold; });
}

bool is_member(const std::vector<ExpVec>& set, const ExpVec& v) {
  return std::any_of(set.begin(), set.end(), [&](const ExpVec& s) { return s == v; });
}

bool spans_extreme_ray(const ConeRep& cone, const ExpVec& g) {
  std::vector<ExpVec> active;
  for (const ExpVec& a : cone.normals)
    if (g.dot(a) == 0) active.push_back(a);
  active.push_back(cone.nu);
  return rank_exact(stack_rows(active, cone.ambient_dim())) == cone.ambient_dim() - 1;
}

bool defines_facet(const ConeRep& cone, const ExpVec& a) {
  std::vector<ExpVec> on_face;
  for (const ExpVec& g : cone.gens)
    if (g.dot(a) == 0) on_face.push_back(g);
  return rank_exact(stack_rows(on_face, cone.ambient_dim())) == cone.ambient_dim() - 2;
}

std::vector<std::int64_t> coords(const ExpVec& v) {
  return std::vector<std::int64_t>(v.data(), v.data() + v.size());
}

std::string describe(const ExpVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

}  // namespace

bool contains(const ConeRep& cone, const ExpVec& z) { return satisfies(cone, z, 0); }

bool in_relint(const ConeRep& cone, const ExpVec& z) { return satisfies(cone, z, 1); }

bool is_extreme_generator(const ConeRep& cone, const ExpVec& g) {
  require_dimension(cone, g);
  if (!is_member(cone.gens, g)) throw ValidationError(describe(g) + " is not a generator");
  return spans_extreme_ray(cone, g);
}

bool facet_check(const ConeRep& cone, const ExpVec& a) {
  require_dimension(cone, a);
  if (!is_member(cone.normals, a)) throw ValidationError(describe(a) + " is not a listed normal");
  return defines_facet(cone, a);
}

SmallMatrix stack_rows(const std::vector<ExpVec>& rows, Eigen::Index cols) {
  SmallMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

HRepReport verify_h_representation(const StairSpec& spec) {
  const ConeRep cone = stair_cone(spec);
  HRepReport report;
  report.spec = spec.to_string();
  report.ambient_dim = cone.ambient_dim();
  report.expected_dim = spec.top(spec.steps()) + spec.right(spec.steps()) - 1;
  report.generator_count = cone.gens.size();
  report.normal_count = cone.normals.size();

  for (const ExpVec& g : cone.gens) {
    if (g.dot(cone.nu) != 0) {
      report.containment_ok = false;
      report.failures.push_back({"equality", "generator " + describe(g) + " off H_nu", coords(g)});
    }
    for (std::size_t k = 0; k < cone.normals.size(); ++k) {
      if (g.dot(cone.normals[k]) < 0) {
        report.containment_ok = false;
        report.failures.push_back({"containment",
                                   "generator " + describe(g) + " violates " + cone.normal_labels[k],
                                   coords(g)});
      }
    }
  }

  for (const ExpVec& g : cone.gens) {
    if (spans_extreme_ray(cone, g)) {
      ++report.extreme_count;
    } else {
      report.extremality_ok = false;
      report.failures.push_back({"extremality", "generator " + describe(g) + " is not extreme", coords(g)});
    }
  }

  for (std::size_t k = 0; k < cone.normals.size(); ++k) {
    if (defines_facet(cone, cone.normals[k])) {
      ++report.facet_count;
    } else {
      report.facets_ok = false;
      report.failures.push_back({"facet", cone.normal_labels[k] + " does not define a facet",
                                 coords(cone.normals[k])});
    }
  }

  report.cone_dim = rank_exact(stack_rows(cone.gens, cone.ambient_dim()));
  if (report.cone_dim != report.expected_dim || report.cone_dim != report.ambient_dim - 1) {
    report.dimension_ok = false;
    report.failures.push_back({"dimension",
                               "generator rank " + std::to_string(report.cone_dim) + ", expected " +
                                   std::to_string(report.expected_dim),
                               {}});
  }
  return report;
}

}  // namespace fusscat
