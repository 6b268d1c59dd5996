#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusscat/acceptance.hpp"
#include "fusscat/canonical_module.hpp"
#include "fusscat/errors.hpp"
#include "fusscat/gfc.hpp"
#include "fusscat/json_io.hpp"
#include "fusscat/lattice_paths.hpp"
#include "fusscat/polyomino.hpp"
#include "fusscat/text.hpp"
#include "fusscat/toric_cone.hpp"

namespace fusscat::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Text };

struct Outcome {
  json doc;
  std::string csv;
  std::string text;
  int code = kSuccess;
};

struct Settings {
  Format format = Format::Json;
  SearchLimits limits;
};

std::vector<std::int64_t> to_int64(const std::vector<int>& v) {
  return std::vector<std::int64_t>(v.begin(), v.end());
}

StairSpec read_stair(const std::string& u, const std::string& r) {
  return StairSpec(parse_int_list(u), parse_int_list(r));
}

std::string join64(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string exp_monomial(const ExpVec& z, int x_dim) {
  std::string s;
  const auto factor = [&](const char* var, int index, std::int64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var + std::to_string(index);
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (int i = 0; i < x_dim; ++i) factor("x", i + 1, z(i));
  const auto y = z.tail(z.size() - x_dim);
  if (y.size() > 0 && (y.array() == 1).all()) return s + (s.empty() ? "y" : "*y");
  for (Eigen::Index j = 0; j < y.size(); ++j) factor("y", static_cast<int>(j + 1), y(j));
  return s.empty() ? "1" : s;
}

Outcome gfc_command(int n, int t, int p, const std::string& method, const Settings& settings) {
  std::vector<GfcMethod> methods;
  if (method == "all") {
    methods.assign(std::begin(kAllGfcMethods), std::end(kAllGfcMethods));
  } else if (auto m = parse_method(method)) {
    methods.push_back(*m);
  } else {
    throw ValidationError("unknown method '" + method + "' (use all, enum, dp, det or canonical)");
  }
  validate_stair_parameters(n, t, p);

  Outcome o;
  json by_method = json::object();
  std::vector<Integer> values;
  o.csv = "n,t,p,method,value\n";
  for (GfcMethod m : methods) {
    values.push_back(generalized_fuss_catalan(n, t, p, m, settings.limits));
    by_method[std::string(method_name(m))] = to_decimal(values.back());
    o.csv += std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(p) + "," +
             std::string(method_name(m)) + "," + to_decimal(values.back()) + "\n";
  }
  const bool agree = std::all_of(values.begin(), values.end(),
                                 [&](const Integer& v) { return v == values.front(); });
  o.doc = {{"n", n}, {"t", t}, {"p", p}, {"method", method},
           {"value", to_decimal(values.front())}, {"methods", by_method}, {"methods_agree", agree}};
  o.text = "[" + std::to_string(n) + " " + std::to_string(t) + "]_" + std::to_string(p) + " = " +
           to_decimal(values.front()) + (agree ? "" : " (METHODS DISAGREE)") + "\n";
  if (!agree) o.code = kCheckFailed;
  return o;
}

Outcome paths_command(const std::string& a, const std::string& b, const std::string& method,
                      const Settings& settings) {
  HeightBounds bounds;
  bounds.upper = to_int64(parse_int_list(a));
  bounds.lower = b.empty() ? std::vector<std::int64_t>(bounds.upper.size(), 0)
                           : to_int64(parse_int_list(b));
  validate(bounds);

  Outcome o;
  o.doc = {{"a", bounds.upper}, {"b", bounds.lower}, {"method", method}};
  if (method == "dp" || method == "det") {
    const Integer count = method == "dp" ? count_paths_dp(bounds) : count_paths_det(bounds);
    o.doc["count"] = to_decimal(count);
    o.csv = "method,count\n" + method + "," + to_decimal(count) + "\n";
    o.text = to_decimal(count) + "\n";
  } else if (method == "enumerate") {
    const auto seqs = enumerate_height_sequences(bounds, settings.limits);
    o.doc["count"] = std::to_string(seqs.size());
    o.doc["sequences"] = seqs;
    for (const auto& s : seqs) {
      o.csv += join64(s) + "\n";
      o.text += "(" + join64(s) + ")\n";
    }
  } else {
    throw ValidationError("unknown method '" + method + "' (use dp, det or enumerate)");
  }
  return o;
}

Outcome polyomino_command(const StairSpec& spec, bool render, bool cells) {
  const Polyomino poly = stair(spec);
  const auto vertices = vertex_set(poly);
  const bool convex = is_convex(poly);
  std::vector<int> tops, rights;
  for (int k = 1; k <= spec.steps(); ++k) {
    tops.push_back(spec.top(k));
    rights.push_back(spec.right(k));
  }
  Outcome o;
  o.doc = {{"spec", spec.to_string()},
           {"A", tops},
           {"B", rights},
           {"cells", poly.size()},
           {"vertices", vertices.size()},
           {"convex", convex},
           {"krull_dim", krull_dim(poly)},
           {"inner_intervals", inner_intervals(poly).size()}};
  o.csv = "key,value\nspec," + spec.to_string() + "\ncells," + std::to_string(poly.size()) +
          "\nvertices," + std::to_string(vertices.size()) + "\nkrull_dim," +
          std::to_string(krull_dim(poly)) + "\n";
  o.text = spec.to_string() + ": " + std::to_string(poly.size()) + " cells, " +
           std::to_string(vertices.size()) + " vertices, dimension " +
           std::to_string(krull_dim(poly)) + "\n";
  if (render) {
    o.doc["render"] = render_ascii(poly);
    o.text += render_ascii(poly);
  }
  if (cells) {
    o.doc["cell_list"] = to_cell_text(poly);
    o.text += to_cell_text(poly);
  }
  return o;
}

Outcome cone_verify_command(const StairSpec& spec) {
  const HRepReport report = verify_h_representation(spec);
  Outcome o;
  o.doc = to_json(report);
  const auto status = [](bool ok) { return ok ? "pass" : "fail"; };
  o.csv = "check,status\ncontainment," + std::string(status(report.containment_ok)) +
          "\nextremality," + status(report.extremality_ok) + "\nfacets," +
          status(report.facets_ok) + "\ndimension," + status(report.dimension_ok) + "\n";
  o.text = spec.to_string() + ": " + (report.passed() ? "verified" : "FAILED") + ", cone dimension " +
           std::to_string(report.cone_dim) + ", " + std::to_string(report.extreme_count) + "/" +
           std::to_string(report.generator_count) + " generators extreme, " +
           std::to_string(report.facet_count) + "/" + std::to_string(report.normal_count) +
           " normals facet-defining\n";
  for (const CheckFailure& f : report.failures) o.text += "  " + f.check + ": " + f.detail + "\n";
  if (!report.passed()) o.code = kCheckFailed;
  return o;
}

Outcome canonical_closed_form(int n, int t, int p, const Settings& settings) {
  const auto gens = stair_generators(n, t, p, settings.limits);
  Outcome o;
  json list = json::array();
  o.csv = "index,x,monomial\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    list.push_back(to_json(gens[i]));
    o.csv += std::to_string(i + 1) + "," + join_ints(gens[i].alpha, ";") + "," + gens[i].monomial() + "\n";
    o.text += gens[i].monomial() + "\n";
  }
  o.doc = {{"mode", "closed_form"}, {"n", n}, {"t", t}, {"p", p},
           {"count", std::to_string(gens.size())}, {"generators", list}};
  o.text += "count " + std::to_string(gens.size()) + "\n";
  return o;
}

Outcome canonical_search(const StairSpec& spec, int dmax, const Settings& settings) {
  const ConeRep cone = stair_cone(spec);
  const auto found = minimal_generators_search(cone, dmax, settings.limits);
  Outcome o;
  json list = json::array();
  o.csv = "index,degree,x,y,monomial\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ExpVec& z = found[i];
    const std::vector<std::int64_t> x(z.data(), z.data() + cone.x_dim);
    const std::vector<std::int64_t> y(z.data() + cone.x_dim, z.data() + z.size());
    const std::int64_t degree = z.head(cone.x_dim).sum();
    const std::string mono = exp_monomial(z, cone.x_dim);
    list.push_back({{"x", x}, {"y", y}, {"degree", degree}, {"monomial", mono}});
    o.csv += std::to_string(i + 1) + "," + std::to_string(degree) + "," + join64(x, ";") + "," +
             join64(y, ";") + "," + mono + "\n";
    o.text += mono + "\n";
  }
  o.doc = {{"mode", "search"}, {"spec", spec.to_string()}, {"degree_max", dmax},
           {"count", std::to_string(found.size())}, {"generators", list}};
  o.text += "count " + std::to_string(found.size()) + "\n";
  return o;
}

Outcome hilbert_command(const StairSpec& spec, int dmax, const Settings& settings) {
  if (dmax < 0) throw ValidationError("require --dmax >= 0");
  std::vector<Integer> values;
  for (int d = 0; d <= dmax; ++d) values.push_back(hilbert_function(spec, d, settings.limits));
  const auto numerator = hilbert_numerator(spec, dmax, settings.limits);
  const auto dim = krull_dim(stair(spec));
  Outcome o;
  o.doc = {{"spec", spec.to_string()}, {"degree_max", dmax}, {"krull_dim", dim},
           {"hilbert_function", to_json(values)}, {"numerator", to_json(numerator)}};
  o.csv = "degree,hilbert_function,numerator\n";
  for (int d = 0; d <= dmax; ++d) {
    o.csv += std::to_string(d) + "," + to_decimal(values[d]) + "," + to_decimal(numerator[d]) + "\n";
  }
  o.text = "(";
  for (int d = 0; d <= dmax; ++d) o.text += (d ? "," : "") + to_decimal(numerator[d]);
  o.text += ") / (1-t)^" + std::to_string(dim) + "\n";
  return o;
}

Outcome selftest_command(std::ostream& progress, bool echo) {
  Outcome o;
  json results = json::array();
  bool all = true;
  o.csv = "id,status,seconds,budget_seconds,title\n";
  run_all_criteria([&](const CriterionResult& r) {
    if (echo) progress << format_result(r) << "\n" << std::flush;
    all = all && r.passed;
    results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                       {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds},
                       {"detail", r.detail}});
    std::ostringstream line;
    line << r.id << "," << (r.passed ? "pass" : "fail") << "," << r.seconds << ","
         << r.budget_seconds << ",\"" << r.title << "\"\n";
    o.csv += line.str();
    o.text += format_result(r) + "\n";
  });
  o.doc = {{"criteria", results}, {"passed", all}};
  o.text += all ? "selftest passed\n" : "selftest FAILED\n";
  if (!all) o.code = kCheckFailed;
  return o;
}

void emit(const Outcome& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: out << o.doc.dump() << "\n"; break;
    case Format::Csv: out << o.csv; break;
    case Format::Text: out << o.text; break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Fuss-Catalan numbers and staircase polyomino toric rings", "fusscat"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t max_volume = SearchLimits{}.max_volume;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--max-volume", max_volume, "Cap on the number of points an enumeration may visit")
      ->capture_default_str();

  int n = 0, t = 0, p = 0, dmax = -1;
  std::string method = "all", a, b, u, r, path_method = "dp";
  bool render = false, cells = false;

  auto* gfc = app.add_subcommand("gfc", "Compute [n t]_p");
  gfc->add_option("--n", n)->required();
  gfc->add_option("--t", t)->required();
  gfc->add_option("--p", p)->required();
  gfc->add_option("--method", method, "all|enum|dp|det|canonical")->capture_default_str();

  auto* paths = app.add_subcommand("paths", "Count or list bounded lattice paths");
  paths->add_option("--a", a, "Upper bounds, comma separated")->required();
  paths->add_option("--b", b, "Lower bounds (default all zero)");
  paths->add_option("--method", path_method, "dp|det|enumerate")->capture_default_str();

  auto* poly = app.add_subcommand("polyomino", "Describe the staircase polyomino P(u;r)");
  poly->add_option("--u", u)->required();
  poly->add_option("--r", r)->required();
  poly->add_flag("--render", render, "Include an ASCII drawing");
  poly->add_flag("--cells", cells, "Include the cell list (one \"x y\" per line)");

  auto* cone = app.add_subcommand("cone-verify", "Certify the H-representation of the exponent cone");
  cone->add_option("--u", u)->required();
  cone->add_option("--r", r)->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical module generators");
  auto* cn = canonical->add_option("--n", n);
  auto* ct = canonical->add_option("--t", t);
  auto* cp = canonical->add_option("--p", p);
  auto* cu = canonical->add_option("--u", u);
  auto* cr = canonical->add_option("--r", r);
  auto* cd = canonical->add_option("--dmax", dmax, "Largest x-degree searched");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and numerator");
  hilbert->add_option("--u", u)->required();
  hilbert->add_option("--r", r)->required();
  hilbert->add_option("--dmax", dmax)->required();

  auto* selftest = app.add_subcommand("selftest", "Replay every reference value and end-to-end check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  Settings settings;
  settings.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  settings.limits.max_volume = max_volume;

  try {
    Outcome o;
    if (gfc->parsed()) {
      o = gfc_command(n, t, p, method, settings);
    } else if (paths->parsed()) {
      o = paths_command(a, b, path_method, settings);
    } else if (poly->parsed()) {
      o = polyomino_command(read_stair(u, r), render, cells);
    } else if (cone->parsed()) {
      o = cone_verify_command(read_stair(u, r));
    } else if (canonical->parsed()) {
      const bool closed = cn->count() && ct->count() && cp->count();
      const bool search = cu->count() && cr->count() && cd->count();
      if (closed == search) {
        throw ValidationError("canonical needs either --n --t --p or --u --r --dmax");
      }
      o = closed ? canonical_closed_form(n, t, p, settings)
                 : canonical_search(read_stair(u, r), dmax, settings);
    } else if (hilbert->parsed()) {
      o = hilbert_command(read_stair(u, r), dmax, settings);
    } else if (selftest->parsed()) {
      o = selftest_command(err, settings.format != Format::Text);
    }
    emit(o, settings.format, out);
    return o.code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --max-volume to allow)\n";
    return kCapRefused;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace fusscat::cli
