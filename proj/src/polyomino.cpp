#include "fusscat/polyomino.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "fusscat/errors.hpp"
#include "fusscat/text.hpp"

namespace fusscat {

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw ValidationError("a polyomino needs at least one cell");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_) {
    if (c.x < 1 || c.y < 1) {
      throw ValidationError("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                            ") has a coordinate below 1");
    }
    max_x_ = std::max(max_x_, c.x);
    max_y_ = std::max(max_y_, c.y);
  }

  std::vector<bool> seen(cells_.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Cell c = cells_[frontier.front()];
    frontier.pop();
    const Cell around[] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Cell& nb : around) {
      const auto it = std::lower_bound(cells_.begin(), cells_.end(), nb);
      if (it == cells_.end() || *it != nb) continue;
      const auto idx = static_cast<std::size_t>(it - cells_.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        frontier.push(idx);
      }
    }
  }
  if (reached != cells_.size()) {
    throw ValidationError("cells are not edge-connected (" + std::to_string(reached) + " of " +
                          std::to_string(cells_.size()) + " reachable from the first)");
  }
}

bool Polyomino::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

StairSpec::StairSpec(std::vector<int> rises, std::vector<int> runs)
    : rises_(std::move(rises)), runs_(std::move(runs)) {
  if (rises_.empty()) throw ValidationError("a staircase needs at least one step");
  if (rises_.size() != runs_.size()) {
    throw ValidationError("u has " + std::to_string(rises_.size()) + " entries but r has " +
                          std::to_string(runs_.size()));
  }
  const auto positive = [](int v) { return v >= 1; };
  if (!std::all_of(rises_.begin(), rises_.end(), positive) ||
      !std::all_of(runs_.begin(), runs_.end(), positive)) {
    throw ValidationError("staircase entries must be positive integers");
  }
}

StairSpec StairSpec::uniform(int n, int t, int p) {
  if (p < 1) throw ValidationError("require p >= 1");
  return StairSpec(std::vector<int>(p, n), std::vector<int>(p, t));
}

int StairSpec::top(int k) const {
  int sum = 1;
  for (int i = 0; i < k; ++i) sum += rises_.at(i);
  return sum;
}

int StairSpec::right(int k) const {
  int sum = 1;
  for (int i = 0; i < k; ++i) sum += runs_.at(i);
  return sum;
}

std::string StairSpec::to_string() const {
  return "u=" + join_ints(rises_) + ";r=" + join_ints(runs_);
}

StairSpec StairSpec::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.substr(0, 2) != "u=" ||
      text.substr(semi + 1, 2) != "r=") {
    throw ValidationError("malformed staircase '" + std::string(text) +
                          "' (expected u=3,3,3;r=1,1,1)");
  }
  return StairSpec(parse_int_list(text.substr(2, semi - 2)), parse_int_list(text.substr(semi + 3)));
}

Polyomino stair(const StairSpec& spec) {
  std::vector<Cell> cells;
  for (int step = 1; step <= spec.steps(); ++step) {
    for (int x = spec.right(step - 1); x <= spec.right(step) - 1; ++x)
      for (int y = 1; y <= spec.top(step) - 1; ++y) cells.push_back({x, y});
  }
  return Polyomino(std::move(cells));
}

std::vector<LatticePoint> vertex_set(const Polyomino& poly) {
  std::vector<LatticePoint> v;
  v.reserve(poly.size() * 4);
  for (const Cell& c : poly.cells()) {
    v.push_back({c.x, c.y});
    v.push_back({c.x + 1, c.y});
    v.push_back({c.x, c.y + 1});
    v.push_back({c.x + 1, c.y + 1});
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_convex(const Polyomino& poly) {
  std::map<int, std::vector<int>> rows;
  std::map<int, std::vector<int>> cols;
  for (const Cell& c : poly.cells()) {
    rows[c.y].push_back(c.x);
    cols[c.x].push_back(c.y);
  }
  const auto contiguous = [](const std::map<int, std::vector<int>>& lines) {
    for (const auto& [_, coords] : lines) {
      const auto [lo, hi] = std::minmax_element(coords.begin(), coords.end());
      if (*hi - *lo + 1 != static_cast<int>(coords.size())) return false;
    }
    return true;
  };
  return contiguous(rows) && contiguous(cols);
}

namespace {

// Cell counts over [1, x] x [1, y], for O(1) rectangle occupancy queries.
class CellPrefixCounts {
 public:
  explicit CellPrefixCounts(const Polyomino& poly)
      : width_(poly.max_x() + 1),
        height_(poly.max_y() + 1),
        counts_(static_cast<std::size_t>(width_) * height_, 0) {
    for (const Cell& c : poly.cells()) at(c.x, c.y) = 1;
    for (int y = 1; y <= poly.max_y(); ++y)
      for (int x = 1; x <= poly.max_x(); ++x)
        at(x, y) += at(x - 1, y) + at(x, y - 1) - at(x - 1, y - 1);
  }

  // Cells with lower-left corner in [x0, x1] x [y0, y1], clipped to the grid.
  int count(int x0, int y0, int x1, int y1) const {
    x1 = std::min(x1, width_ - 1);
    y1 = std::min(y1, height_ - 1);
    if (x0 > x1 || y0 > y1) return 0;
    return get(x1, y1) - get(x0 - 1, y1) - get(x1, y0 - 1) + get(x0 - 1, y0 - 1);
  }

 private:
  int& at(int x, int y) { return counts_[static_cast<std::size_t>(y) * width_ + x]; }
  int get(int x, int y) const { return counts_[static_cast<std::size_t>(y) * width_ + x]; }

  int width_;
  int height_;
  std::vector<int> counts_;
};

}  // namespace

std::vector<InnerInterval> inner_intervals(const Polyomino& poly) {
  const CellPrefixCounts grid(poly);
  const auto vertices = vertex_set(poly);
  std::vector<InnerInterval> out;
  for (const LatticePoint& a : vertices) {
    for (const LatticePoint& b : vertices) {
      if (!(a.x < b.x && a.y < b.y)) continue;
      const int area = (b.x - a.x) * (b.y - a.y);
      if (grid.count(a.x, a.y, b.x - 1, b.y - 1) != area) continue;
      out.push_back({a, b, {a.x, b.y}, {b.x, a.y}});
    }
  }
  return out;
}

std::int64_t krull_dim(const Polyomino& poly) {
  if (!is_convex(poly)) {
    throw ValidationError("dimension formula |V(P)| - |P| applies to convex polyominoes only");
  }
  return static_cast<std::int64_t>(vertex_set(poly).size()) -
         static_cast<std::int64_t>(poly.size());
}

std::string render_ascii(const Polyomino& poly) {
  std::string out;
  for (int y = poly.max_y(); y >= 1; --y) {
    for (int x = 1; x <= poly.max_x(); ++x) out += poly.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string to_cell_text(const Polyomino& poly) {
  std::string out;
  for (const Cell& c : poly.cells()) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

Polyomino parse_cell_text(std::string_view text) {
  std::vector<Cell> cells;
  for (const std::string& line : split_lines(text)) {
    std::istringstream in(line);
    Cell c;
    std::string rest;
    if (!(in >> c.x >> c.y) || (in >> rest)) {
      throw ValidationError("malformed cell line '" + line + "' (expected \"x y\")");
    }
    cells.push_back(c);
  }
  return Polyomino(std::move(cells));
}

}  // namespace fusscat
