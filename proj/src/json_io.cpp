#include "fusscat/json_io.hpp"

namespace fusscat {

nlohmann::json to_json(const Integer& value) { return to_decimal(value); }

nlohmann::json to_json(const std::vector<Integer>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Integer& v : values) out.push_back(to_decimal(v));
  return out;
}

nlohmann::json to_json(const ExpVec& v) {
  return std::vector<std::int64_t>(v.data(), v.data() + v.size());
}

nlohmann::json to_json(const HeightBounds& bounds) {
  return {{"a", bounds.upper}, {"b", bounds.lower}};
}

nlohmann::json to_json(const CanonicalGenerator& gen) {
  return {{"x", gen.alpha},
          {"y", std::vector<int>(static_cast<std::size_t>(gen.y_length), 1)},
          {"monomial", gen.monomial()}};
}

nlohmann::json to_json(const SymmetryReport& report) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const SymmetryPair& s : report.pairs) {
    pairs.push_back({{"t", s.t},
                     {"mirror_t", report.n - s.t},
                     {"value", to_decimal(s.value)},
                     {"mirrored", to_decimal(s.mirrored)},
                     {"equal", s.equal()}});
  }
  return {{"n", report.n}, {"p", report.p}, {"pairs", pairs}, {"passed", report.passed()}};
}

nlohmann::json to_json(const HRepReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const CheckFailure& f : report.failures) {
    failures.push_back({{"check", f.check}, {"detail", f.detail}, {"witness", f.witness}});
  }
  return {{"spec", report.spec},
          {"ambient_dim", report.ambient_dim},
          {"cone_dim", report.cone_dim},
          {"expected_dim", report.expected_dim},
          {"generators", report.generator_count},
          {"normals", report.normal_count},
          {"extreme_generators", report.extreme_count},
          {"facet_normals", report.facet_count},
          {"checks",
           {{"containment", report.containment_ok},
            {"extremality", report.extremality_ok},
            {"facets", report.facets_ok},
            {"dimension", report.dimension_ok}}},
          {"failures", failures},
          {"passed", report.passed()}};
}

nlohmann::json to_json(const LatticePoint& point) { return {point.x, point.y}; }

}  // namespace fusscat
