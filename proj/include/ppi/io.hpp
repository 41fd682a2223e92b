#pragma once

// JSON encodings of the library's objects. Rationals are written as strings
// ("3/4"); on input, numbers and rational strings are both accepted.

#include "ppi/belief.hpp"
#include "ppi/design_games.hpp"
#include "ppi/grid.hpp"
#include "ppi/infobounds.hpp"
#include "ppi/region.hpp"
#include "ppi/structure.hpp"
#include "ppi/uniqueness.hpp"
#include "ppi/welfare.hpp"

#include <json.hpp>

#include <string>

namespace ppi {

using json = nlohmann::json;

// Throws DomainError naming `field` when j is missing or malformed.
const json& require_field(const json& j, const std::string& field);
double number_from_json(const json& j, const std::string& field);
Rational rational_from_json(const json& j, const std::string& field);
// True if any location or weight is given as a string.
bool has_rational_strings(const json& j);

json to_json(const AtomicDist& d);
json to_json(const ExactAtomicDist& d);
AtomicDist atomic_dist_from_json(const json& j);
ExactAtomicDist exact_atomic_dist_from_json(const json& j);

json to_json(const FiniteStructure& s);
json to_json(const ExactStructure& s);
FiniteStructure structure_from_json(const json& j);
ExactStructure exact_structure_from_json(const json& j);

json to_json(const GridPartition& g);
GridPartition grid_partition_from_json(const json& j);
json to_json(const FuzzyGrid& g);

json to_json(const BinaryMatrix& m);
BinaryMatrix matrix_from_json(const json& j);

json to_json(const RegionSet& r);
RegionSet region_from_json(const json& j);

json to_json(const InfoReport& r);

PayoffTable payoffs_from_json(const json& j, const std::string& field);
json to_json(const WelfareResult& r);

DesignerProblem designer_problem_from_json(const json& j);
json to_json(const RationalMatrix& m);

}  // namespace ppi
