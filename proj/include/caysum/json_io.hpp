#pragma once

#include <nlohmann/json.hpp>

#include "caysum/criteria.hpp"
#include "caysum/graph.hpp"
#include "caysum/group.hpp"
#include "caysum/subgroup_codes.hpp"
#include "caysum/sweep.hpp"

namespace caysum {

// Stable JSON views of the report/certificate types, so external tooling
// can re-verify witnesses without this library.  Field order is fixed.
using json = nlohmann::ordered_json;

json to_json(const GroupSpec& g, const Element& e);
json to_json(const GroupSpec& g, const ElementSet& s);
json to_json(const GroupSpec& g, const Subgroup& h);
json to_json(const GroupSpec& g, const ConnectionSet& t);
json to_json(const GroupSpec& g, const CriteriaReport& r);
json to_json(const GroupSpec& g, const PerfectCodeCertificate& c);
json to_json(const GroupSpec& g, const EnumerationResult& r);
json to_json(const GroupSpec& g, const SupplementaryReport& r);
json to_json(const GroupSpec& g, const HalfValencyResult& r);
json to_json(const GroupSpec& g, const SubgroupCodeVerdict& v);
json to_json(const GroupSpec& g, const EquivalenceReport& r);
json to_json(const SweepStats& s);

}  // namespace caysum
