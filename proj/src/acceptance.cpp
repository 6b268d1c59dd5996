#include "fusscat/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "fusscat/canonical_module.hpp"
#include "fusscat/exact_arith.hpp"
#include "fusscat/gfc.hpp"
#include "fusscat/lattice_paths.hpp"
#include "fusscat/monomial.hpp"
#include "fusscat/polyomino.hpp"
#include "fusscat/reference_lists.hpp"
#include "fusscat/text.hpp"
#include "fusscat/toric_cone.hpp"

namespace fusscat {

namespace {

// Collects the first mismatch of a criterion; later ones are only counted.
class Verdict {
 public:
  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream msg;
    msg << what << ": got " << actual << ", expected " << expected;
    fail(msg.str());
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (first_.empty()) first_ = what;
    ++failures_;
  }
  void note(std::string summary) { summary_ = std::move(summary); }

  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    if (ok()) return summary_;
    return first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "");
  }

 private:
  std::string first_;
  std::string summary_;
  std::size_t failures_ = 0;
};

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_decimal(m(i, j));
    s += "]";
  }
  return s + "]";
}

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

std::string params(int n, int t, int p) {
  return "(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(p) + ")";
}

void all_methods_equal(Verdict& v, int n, int t, int p, const Integer& expected) {
  for (GfcMethod m : kAllGfcMethods) {
    v.expect_eq(generalized_fuss_catalan(n, t, p, m), expected,
                "gfc" + params(n, t, p) + " by " + std::string(method_name(m)));
  }
}

void reference_example(Verdict& v, int n, int t, int p, const std::vector<std::vector<int>>& rows) {
  all_methods_equal(v, n, t, p, Integer(55));
  const IntMatrix expected = from_rows(rows);
  const IntMatrix actual = path_count_matrix(staircase_bounds(n, t, p));
  v.expect(same_entries(actual, expected), "matrix for " + params(n, t, p) + " is " + matrix_text(actual));
  v.expect_eq(det_exact(expected), Integer(55), "determinant of the reference matrix");
  v.note("value 55 by enum/dp/det/canonical; matrix " + matrix_text(actual));
}

void criterion_1(Verdict& v) {
  reference_example(v, 3, 1, 3, {{3, 3, 1}, {1, 5, 10}, {0, 1, 7}});
}

void criterion_2(Verdict& v) {
  reference_example(v, 3, 2, 3,
                    {{2, 1, 0, 0, 0, 0},
                     {1, 2, 1, 0, 0, 0},
                     {0, 1, 3, 3, 1, 0},
                     {0, 0, 1, 3, 3, 1},
                     {0, 0, 0, 1, 4, 6},
                     {0, 0, 0, 0, 1, 4}});
}

void criterion_3(Verdict& v) {
  int cases = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      for (int t = 1; t < n; ++t) {
        const Integer value = generalized_fuss_catalan(n, t, p, GfcMethod::Determinant);
        all_methods_equal(v, n, t, p, value);
        v.expect_eq(generalized_fuss_catalan(n, n - t, p, GfcMethod::Determinant), value,
                    "symmetry at " + params(n, t, p));
        ++cases;
      }
    }
  }
  v.note(std::to_string(cases) + " (n,t,p) triples, four methods each, symmetric");
}

void criterion_4(Verdict& v) {
  int cases = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const Integer expected = fuss_catalan(p + 1, n);
      for (GfcMethod m : {GfcMethod::Enumerate, GfcMethod::Dp, GfcMethod::Determinant}) {
        v.expect_eq(generalized_fuss_catalan(n, 1, p, m), expected,
                    "gfc" + params(n, 1, p) + " vs C_" + std::to_string(p + 1) + "(" +
                        std::to_string(n) + ")");
      }
      ++cases;
    }
  }
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; t < n; ++t) {
      for (GfcMethod m : {GfcMethod::Enumerate, GfcMethod::Dp, GfcMethod::Determinant}) {
        v.expect_eq(generalized_fuss_catalan(n, t, 1, m), binomial(n, t),
                    "gfc" + params(n, t, 1) + " vs binomial");
      }
      ++cases;
    }
  }
  v.note(std::to_string(cases) + " Fuss-Catalan and binomial specializations");
}

void compare_reference_list(Verdict& v, int n, int t, int p) {
  const auto expected = split_lines(reference_generator_list(n, t, p));
  const auto actual = stair_generators(n, t, p);
  v.expect_eq(actual.size(), expected.size(), "generator count for " + params(n, t, p));
  v.expect_eq(expected.size(), std::size_t{55}, "reference list length for " + params(n, t, p));
  for (std::size_t i = 0; i < std::min(actual.size(), expected.size()); ++i) {
    ParsedMonomial ref = parse_tex_monomial(expected[i]);
    ref.x_exponents.resize(static_cast<std::size_t>(p * t + 1), 0);
    v.expect(ref.has_y, "reference entry " + expected[i] + " lacks the y factor");
    v.expect(ref.x_exponents == actual[i].alpha,
             params(n, t, p) + " entry " + std::to_string(i + 1) + ": " + actual[i].monomial() +
                 " vs reference " + expected[i]);
    v.expect_eq(actual[i].y_length, p * n + 1, "y factor length");
  }
}

void criterion_5(Verdict& v) {
  compare_reference_list(v, 3, 1, 3);
  compare_reference_list(v, 3, 2, 3);
  v.note("both 55-monomial lists match entry by entry");
}

void criterion_6(Verdict& v) {
  v.expect_eq(krull_dim(stair(StairSpec({3, 3, 3}, {1, 1, 1}))), 13, "krull_dim of u=3,3,3;r=1,1,1");
  v.expect_eq(krull_dim(stair(StairSpec({3, 3, 3}, {2, 2, 2}))), 16, "krull_dim of u=3,3,3;r=2,2,2");
  v.note("dimensions 13 and 16");
}

// Calls visit(spec) for every staircase with 1..max_steps steps and entries in [1, max_entry].
template <typename Visit>
void for_each_small_stair(int max_steps, int max_entry, Visit&& visit) {
  for (int p = 1; p <= max_steps; ++p) {
    std::vector<int> digits(static_cast<std::size_t>(2 * p), 1);
    while (true) {
      visit(StairSpec(std::vector<int>(digits.begin(), digits.begin() + p),
                      std::vector<int>(digits.begin() + p, digits.end())));
      std::size_t k = 0;
      while (k < digits.size() && digits[k] == max_entry) digits[k++] = 1;
      if (k == digits.size()) break;
      ++digits[k];
    }
  }
}

void criterion_7(Verdict& v) {
  std::size_t specs = 0;
  for_each_small_stair(4, 3, [&](const StairSpec& spec) {
    const HRepReport report = verify_h_representation(spec);
    if (!report.passed()) {
      v.fail(spec.to_string() + ": " + report.failures.front().check + " - " +
             report.failures.front().detail);
    }
    v.expect(report.extreme_count == report.generator_count,
             spec.to_string() + ": extreme ray count differs from |B|");
    v.expect_eq(report.cone_dim, static_cast<Eigen::Index>(krull_dim(stair(spec))),
                spec.to_string() + ": cone dimension vs krull_dim");
    ++specs;
  });
  v.note(std::to_string(specs) + " staircases certified");
}

HeightBounds random_bounds(std::mt19937_64& rng, int max_steps, int max_height) {
  std::uniform_int_distribution<int> steps(1, max_steps);
  std::uniform_int_distribution<std::int64_t> height(0, max_height);
  const int n = steps(rng);
  std::vector<std::int64_t> first(n), second(n);
  for (auto& h : first) h = height(rng);
  for (auto& h : second) h = height(rng);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  HeightBounds bounds;
  for (int i = 0; i < n; ++i) {
    bounds.upper.push_back(std::max(first[i], second[i]));
    bounds.lower.push_back(std::min(first[i], second[i]));
  }
  return bounds;
}

// Every weakly increasing sequence of the given length over [0, max_height].
std::vector<std::vector<std::int64_t>> monotone_sequences(int length, int max_height) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto& self, std::int64_t from) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t h = from; h <= max_height; ++h) {
      cur.push_back(h);
      self(self, h);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string describe(const HeightBounds& bounds) {
  std::string s = "a=(";
  for (std::size_t i = 0; i < bounds.steps(); ++i) s += (i ? "," : "") + std::to_string(bounds.upper[i]);
  s += ") b=(";
  for (std::size_t i = 0; i < bounds.steps(); ++i) s += (i ? "," : "") + std::to_string(bounds.lower[i]);
  return s + ")";
}

void criterion_8(Verdict& v) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const HeightBounds bounds = random_bounds(rng, 8, 10);
    v.expect_eq(count_paths_det(bounds), count_paths_dp(bounds),
                "random trial " + std::to_string(trial) + " " + describe(bounds));
  }
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto seqs = monotone_sequences(n, 6);
    for (const auto& upper : seqs) {
      for (const auto& lower : seqs) {
        bool below = true;
        for (int i = 0; i < n && below; ++i) below = lower[i] <= upper[i];
        if (!below) continue;
        const HeightBounds bounds{upper, lower};
        const Integer listed(enumerate_height_sequences(bounds).size());
        const Integer dp = count_paths_dp(bounds);
        if (dp != listed || count_paths_det(bounds) != listed) {
          v.fail("bounds " + describe(bounds) + ": enumeration " + to_decimal(listed) + ", dp " +
                 to_decimal(dp));
        }
        ++exhaustive;
      }
    }
  }
  v.note("200 random pairs agree; " + std::to_string(exhaustive) +
         " exhaustive bound pairs match enumeration");
}

void criterion_9(Verdict& v) {
  const int cases[][3] = {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {3, 1, 2}, {3, 2, 2}};
  for (const auto& c : cases) {
    const int n = c[0], t = c[1], p = c[2];
    const auto found = minimal_generators_search(StairSpec::uniform(n, t, p), p * n + 2);
    std::vector<ExpVec> expected;
    for (const auto& g : stair_generators(n, t, p)) expected.push_back(g.exponent());
    v.expect_eq(found.size(), expected.size(), "minimal generator count for " + params(n, t, p));
    v.expect(found == expected, "searched generators differ from closed form for " + params(n, t, p));
  }
  v.note("search up to degree pn+2 equals the closed form for all five staircases");
}

void criterion_10(Verdict& v) {
  const auto first = hilbert_numerator(StairSpec({3, 3, 3}, {1, 1, 1}), 3);
  const auto second = hilbert_numerator(StairSpec({3, 3, 3}, {2, 2, 2}), 6);
  const std::vector<Integer> want_first{1, 18, 66, 55};
  const std::vector<Integer> want_second{1, 36, 318, 960, 1071, 444, 55};
  v.expect(first == want_first, "numerator of u=3,3,3;r=1,1,1");
  v.expect(second == want_second, "numerator of u=3,3,3;r=2,2,2");
  v.note("(1,18,66,55) and (1,36,318,960,1071,444,55)");
}

void criterion_11(Verdict& v) {
  std::size_t intervals = 0;
  for_each_small_stair(3, 3, [&](const StairSpec& spec) {
    const Polyomino poly = stair(spec);
    const int x_dim = spec.right(spec.steps());
    const int y_dim = spec.top(spec.steps());
    for (const InnerInterval& iv : inner_intervals(poly)) {
      const ExpVec balance = vertex_exponent(iv.a, x_dim, y_dim) + vertex_exponent(iv.b, x_dim, y_dim) -
                             vertex_exponent(iv.c, x_dim, y_dim) - vertex_exponent(iv.d, x_dim, y_dim);
      v.expect(balance.isZero(), spec.to_string() + ": inner minor not in the kernel");
      ++intervals;
    }
  });
  v.note(std::to_string(intervals) + " inner 2-minors balanced");
}

struct CriterionSpec {
  const char* title;
  double budget_seconds;
  void (*body)(Verdict&);
};

const CriterionSpec kCriteria[kCriterionCount] = {
    {"gfc(3,1,3) = 55 by all methods, reference 3x3 matrix", 1.0, criterion_1},
    {"gfc(3,2,3) = 55, reference 6x6 matrix", 1.0, criterion_2},
    {"symmetry and method agreement for n <= 6, p <= 4", 60.0, criterion_3},
    {"Fuss-Catalan (t = 1) and binomial (p = 1) specializations", 10.0, criterion_4},
    {"closed-form canonical generators match the reference lists", 1.0, criterion_5},
    {"Krull dimensions 13 and 16", 1.0, criterion_6},
    {"H-representation certified for p <= 4, u_i, r_i <= 3", 120.0, criterion_7},
    {"path counts: determinant = DP = enumeration", 30.0, criterion_8},
    {"canonical module search matches the closed form", 300.0, criterion_9},
    {"Hilbert numerators of the two reference staircases", 300.0, criterion_10},
    {"inner 2-minors lie in the toric kernel", 30.0, criterion_11},
};

}  // namespace

std::string_view reference_generator_list(int n, int t, int p) {
  if (n == 3 && t == 1 && p == 3) return reference_lists::omega_stair_3_1_3;
  if (n == 3 && t == 2 && p == 3) return reference_lists::omega_stair_3_2_3;
  throw ValidationError("no reference list for " + params(n, t, p));
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw ValidationError("no criterion " + std::to_string(id));
  const CriterionSpec& spec = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = spec.title;
  result.budget_seconds = spec.budget_seconds;

  Verdict verdict;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.body(verdict);
  } catch (const std::exception& e) {
    verdict.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = verdict.ok() && result.seconds < result.budget_seconds;
  result.detail = verdict.detail();
  if (verdict.ok() && !result.passed) result.detail = "over time budget; " + result.detail;
  return result;
}

std::vector<CriterionResult> run_all_criteria(
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.2fs / %.0fs) ", r.seconds, r.budget_seconds);
  return head + r.title + timing + r.detail;
}

}  // namespace fusscat
