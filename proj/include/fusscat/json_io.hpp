#pragma once

// JSON views of library results. Big integers travel as decimal strings,
// exponents and small counts as numbers.

#include <vector>

#include <json.hpp>

#include "fusscat/canonical_module.hpp"
#include "fusscat/gfc.hpp"
#include "fusscat/lattice_paths.hpp"
#include "fusscat/polyomino.hpp"
#include "fusscat/toric_cone.hpp"

namespace fusscat {

nlohmann::json to_json(const Integer& value);
nlohmann::json to_json(const std::vector<Integer>& values);
nlohmann::json to_json(const ExpVec& v);
nlohmann::json to_json(const HeightBounds& bounds);
nlohmann::json to_json(const CanonicalGenerator& gen);
nlohmann::json to_json(const SymmetryReport& report);
nlohmann::json to_json(const HRepReport& report);
nlohmann::json to_json(const LatticePoint& point);

}  // namespace fusscat
