#include "ehrhart/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace ehrhart {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Json polytope_to_json(const VPolytope& p) {
  Json j;
  j["dim"] = p.dim;
  Json gens = Json::array();
  for (const IntVec& g : p.generators) gens.push_back(intvec_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("polytope json: expected integer");
}

}  // namespace

VPolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw std::invalid_argument(
        "polytope json: need object with 'dim' and 'generators'");
  int dim = j.at("dim").get<int>();
  std::vector<IntVec> gens;
  for (const Json& row : j.at("generators")) {
    IntVec v;
    for (const Json& x : row) v.push_back(int_from_json(x));
    gens.push_back(std::move(v));
  }
  return VPolytope::make(dim, std::move(gens));
}

Json hstar_to_json(const HStar& h) {
  Json a = Json::array();
  for (const Int& c : h.coeffs) a.push_back(int_to_json(c));
  return a;
}

Json sqrtsum_to_json(const SqrtSum& s) {
  Json arr = Json::array();
  for (const auto& [q, n] : s.terms()) {
    Json t;
    t["q"] = rat_to_string(q);
    t["n"] = int_to_json(n);
    arr.push_back(std::move(t));
  }
  return arr;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["bound"] = r.bound_id;
  j["polytope"] = r.polytope;
  j["dim"] = r.dim;
  j["hypothesis_met"] = r.hypothesis_met;
  if (!r.note.empty()) j["note"] = r.note;
  Json entries = Json::array();
  for (const BoundEntry& e : r.entries) {
    Json je;
    je["index"] = e.index;
    je["bound"] = rat_to_string(e.bound);
    je["actual"] = rat_to_string(e.actual);
    je["slack"] = rat_to_string(e.slack);
    je["verdict"] = to_string(e.verdict);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json sqrtsum_with_decimal(const SqrtSum& s) {
  Json j;
  j["terms"] = sqrtsum_to_json(s);
  j["decimal"] = s.value().str(12, std::ios_base::fixed);
  return j;
}

Json facet_area_to_json(const FacetArea& f) {
  Json j;
  j["normal"] = intvec_to_json(f.facet.normal);
  j["offset"] = int_to_json(f.facet.offset);
  j["k"] = int_to_json(f.k);
  j["lattice_area"] = rat_to_string(f.lattice_area);
  j["euclid_area"] = sqrtsum_with_decimal(f.euclid_area);
  return j;
}

}  // namespace ehrhart
