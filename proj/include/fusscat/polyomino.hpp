#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Unit square [(x, y), (x + 1, y + 1)], identified by its lower-left corner.
struct Cell {
  int x = 1;
  int y = 1;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Nonempty, edge-connected finite set of cells with coordinates >= 1.
/// Cells are kept sorted and unique.
class Polyomino {
 public:
  /// Throws ValidationError if cells is empty, has a coordinate < 1, or is
  /// not edge-connected. Duplicates are merged.
  explicit Polyomino(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(Cell c) const;

  int max_x() const { return max_x_; }
  int max_y() const { return max_y_; }

  friend bool operator==(const Polyomino&, const Polyomino&) = default;

 private:
  std::vector<Cell> cells_;
  int max_x_ = 0;
  int max_y_ = 0;
};

/// Staircase shape: step k adds `runs[k]` columns whose height is
/// `rises[0] + ... + rises[k]`.
class StairSpec {
 public:
  /// Throws ValidationError unless both lists are nonempty, equally long and
  /// strictly positive.
  StairSpec(std::vector<int> rises, std::vector<int> runs);

  /// Staircase with p steps of rise n and run t.
  static StairSpec uniform(int n, int t, int p);

  int steps() const { return static_cast<int>(rises_.size()); }
  const std::vector<int>& rises() const { return rises_; }
  const std::vector<int>& runs() const { return runs_; }

  /// 1 + rises[0..k); top(0) = 1. top(steps()) is the y-extent of the vertices.
  int top(int k) const;
  /// 1 + runs[0..k); right(0) = 1. right(steps()) is the x-extent.
  int right(int k) const;

  /// "u=3,3,3;r=1,1,1"
  std::string to_string() const;
  static StairSpec parse(std::string_view text);

  friend bool operator==(const StairSpec&, const StairSpec&) = default;

 private:
  std::vector<int> rises_;
  std::vector<int> runs_;
};

/// Rectangle [a, b] of the polyomino with a < b coordinatewise; c and d are
/// the anti-diagonal corners (a.x, b.y) and (b.x, a.y).
struct InnerInterval {
  LatticePoint a;
  LatticePoint b;
  LatticePoint c;
  LatticePoint d;
};

Polyomino stair(const StairSpec& spec);

/// Union of the corners of every cell, sorted lexicographically.
std::vector<LatticePoint> vertex_set(const Polyomino& poly);

/// Row convex and column convex.
bool is_convex(const Polyomino& poly);

/// Every interval [a, b] with a < b, a and b vertices, whose cells all lie in
/// the polyomino. Sorted by (a, b).
std::vector<InnerInterval> inner_intervals(const Polyomino& poly);

/// |V(P)| - |P|. Throws ValidationError for a non-convex polyomino.
std::int64_t krull_dim(const Polyomino& poly);

/// One row of text per y, top row first; '#' for a cell and '.' otherwise.
std::string render_ascii(const Polyomino& poly);

/// One "x y" line per cell, in sorted order.
std::string to_cell_text(const Polyomino& poly);
Polyomino parse_cell_text(std::string_view text);

}  // namespace fusscat
