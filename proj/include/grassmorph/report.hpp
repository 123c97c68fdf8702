#ifndef GRASSMORPH_REPORT_HPP
#define GRASSMORPH_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "grassmorph/cayley_bacharach.hpp"
#include "grassmorph/classify.hpp"
#include "grassmorph/intersect.hpp"
#include "grassmorph/morphisms.hpp"

namespace grassmorph {

// All reports are emitted as ordered JSON built in a fixed key order, so a
// fixed configuration produces byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ProjPoint& p);
Json to_json(const HomPoly& f);
Json to_json(const PlueckerPoint& p);
Json to_json(const CohomClass& c);
Json to_json(const WitnessRecipe& w);
Json to_json(const ClassVerdict& v);
Json to_json(const Intersection& ix);
Json to_json(const SurjectivityReport& r);
Json to_json(const ClassResult& r);
Json to_json(const CbReport& r, const PointConfig& z, int d);
Json to_json(const PositionReport& r);
Json to_json(const CollisionReport& r);
Json table_json(const std::vector<TableRow>& rows);

/// Points file: a JSON array of 3-element arrays; entries are integers or
/// "num/den" strings.
std::vector<ProjPoint> parse_points_json(const std::string& text);
std::string points_to_json(const PointConfig& z);

} // namespace grassmorph

#endif
