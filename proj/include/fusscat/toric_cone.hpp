#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusscat/exact_arith.hpp"
#include "fusscat/polyomino.hpp"

namespace fusscat {

/// Lattice vector over the variables x_1..x_X, y_1..y_Y (x-part first).
using ExpVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Lexicographic order on coordinates; shorter vectors first on ties.
bool lex_less(const ExpVec& a, const ExpVec& b);
void sort_lex(std::vector<ExpVec>& vs);

/// e_i + e_{X+j} for the vertex (i, j).
ExpVec vertex_exponent(LatticePoint v, int x_dim, int y_dim);

/// Exponent vectors of the ring generators x_i y_j, one per vertex, in vertex
/// order. Throws ValidationError if a vertex falls outside [1, x_dim] x [1, y_dim].
std::vector<ExpVec> exponent_generators(const Polyomino& poly, int x_dim, int y_dim);
/// Same with x_dim and y_dim taken as the largest vertex coordinates.
std::vector<ExpVec> exponent_generators(const Polyomino& poly);

struct StairNormals {
  /// nu_1..nu_{p-1} followed by the unit vectors e_1..e_{X+Y}.
  std::vector<ExpVec> inequalities;
  std::vector<std::string> labels;
  /// The equality normal: +1 on the x-part, -1 on the y-part.
  ExpVec equality;
};

/// nu_i = -(e_1 + ... + e_{B_i - 1}) + (e_{X+1} + ... + e_{X+A_i}), i < p,
/// with X = right(p), A_i = top(i), B_i = right(i).
StairNormals stair_normals(const StairSpec& spec);

/// Cone generated by `gens`, described by {z : <z, a> >= 0 for a in normals,
/// <z, nu> = 0}.
struct ConeRep {
  int x_dim = 0;
  int y_dim = 0;
  std::vector<ExpVec> gens;
  std::vector<ExpVec> normals;
  std::vector<std::string> normal_labels;
  ExpVec nu;

  Eigen::Index ambient_dim() const { return x_dim + y_dim; }
};

/// Cone of the staircase's ring generators with the candidate H-representation.
ConeRep stair_cone(const StairSpec& spec);

/// <z, a> >= 0 for every normal and <z, nu> = 0.
bool contains(const ConeRep& cone, const ExpVec& z);

/// <z, a> >= 1 for every normal and <z, nu> = 0. For integer z this is
/// membership in the relative interior, since all normals are integral.
bool in_relint(const ConeRep& cone, const ExpVec& z);

/// Active normals at g together with nu have rank ambient_dim - 1.
/// Throws ValidationError if g is not one of cone.gens.
bool is_extreme_generator(const ConeRep& cone, const ExpVec& g);

/// Generators on the hyperplane <., a> = 0 have rank ambient_dim - 2.
/// Throws ValidationError if a is not one of cone.normals.
bool facet_check(const ConeRep& cone, const ExpVec& a);

/// Rows of the matrix are the given vectors.
SmallMatrix stack_rows(const std::vector<ExpVec>& rows, Eigen::Index cols);

struct CheckFailure {
  std::string check;   // containment | equality | extremality | facet | dimension
  std::string detail;  // names the witness
  std::vector<std::int64_t> witness;
};

struct HRepReport {
  std::string spec;
  Eigen::Index ambient_dim = 0;
  Eigen::Index expected_dim = 0;  // top(p) + right(p) - 1
  Eigen::Index cone_dim = 0;      // rank of the generator matrix
  std::size_t generator_count = 0;
  std::size_t normal_count = 0;
  std::size_t extreme_count = 0;
  std::size_t facet_count = 0;
  bool containment_ok = true;
  bool extremality_ok = true;
  bool facets_ok = true;
  bool dimension_ok = true;
  std::vector<CheckFailure> failures;

  bool passed() const {
    return containment_ok && extremality_ok && facets_ok && dimension_ok;
  }
};

/// Certifies the staircase H-representation: every generator satisfies every
/// inequality and the equality, every generator spans an extreme ray, every
/// listed inequality defines a facet, and the cone has dimension
/// top(p) + right(p) - 1. Failures are collected, not thrown.
HRepReport verify_h_representation(const StairSpec& spec);

}  // namespace fusscat
