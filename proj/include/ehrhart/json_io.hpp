#pragma once

#include <string>

#include <json.hpp>

#include "ehrhart/bounds.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/sqrtsum.hpp"
#include "ehrhart/surface.hpp"

namespace ehrhart {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);  // number when it fits in int64, else string
Json intvec_to_json(const IntVec& v);

Json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const Json& j);

Json hstar_to_json(const HStar& h);
Json sqrtsum_to_json(const SqrtSum& s);  // [{"q": "p/q", "n": N}, ...]
Json sqrtsum_with_decimal(const SqrtSum& s);
Json bound_report_to_json(const BoundReport& r);
Json facet_area_to_json(const FacetArea& f);

}  // namespace ehrhart
