#include "caysum/json_io.hpp"

namespace caysum {

json to_json(const GroupSpec& g, const Element& e) {
    (void)g;
    return json(e.residues);
}

json to_json(const GroupSpec& g, const ElementSet& s) {
    json out = json::array();
    for (const Element& e : s) out.push_back(to_json(g, e));
    return out;
}

json to_json(const GroupSpec& g, const Subgroup& h) {
    json out;
    out["generators"] = to_json(g, h.generators);
    out["elements"] = to_json(g, h.elements);
    out["order"] = h.elements.size();
    out["index"] = h.index;
    return out;
}

json to_json(const GroupSpec& g, const ConnectionSet& t) {
    json out;
    out["elements"] = to_json(g, t.elements);
    out["zero_extended"] = to_json(g, t.zero_extended);
    out["size"] = t.size();
    return out;
}

json to_json(const GroupSpec& g, const CriteriaReport& r) {
    json out;
    out["cardinality_ok"] = r.cardinality_ok;
    out["independence_ok"] = r.independence_ok;
    out["uniqueness_ok"] = r.uniqueness_ok;
    out["partition_ok"] = r.partition_ok;
    out["overall"] = r.overall();
    json w;
    if (r.independence_witness)
        w["independence"] = to_json(g, *r.independence_witness);
    if (r.uniqueness_witness)
        w["uniqueness"] = to_json(g, *r.uniqueness_witness);
    if (r.partition_witness)
        w["partition"] = to_json(g, *r.partition_witness);
    out["witnesses"] = std::move(w);
    return out;
}

json to_json(const GroupSpec& g, const PerfectCodeCertificate& c) {
    json out;
    out["code"] = to_json(g, c.code);
    out["verdict"] = c.verdict;
    if (c.verdict) {
        json pw = json::object();
        for (const auto& [v, n] : c.partition_witness)
            pw[to_string(g, v)] = to_json(g, n);
        out["partition_witness"] = std::move(pw);
    } else {
        out["failure_reason"] = to_string(c.failure);
        if (c.failure_witness)
            out["failure_witness"] = to_json(g, *c.failure_witness);
    }
    return out;
}

json to_json(const GroupSpec& g, const EnumerationResult& r) {
    json out;
    out["cardinality_obstruction"] = r.cardinality_obstruction;
    json codes = json::array();
    for (const ElementSet& c : r.codes) codes.push_back(to_json(g, c));
    out["codes"] = std::move(codes);
    out["count"] = r.codes.size();
    return out;
}

json to_json(const GroupSpec& g, const SupplementaryReport& r) {
    (void)g;
    json out;
    out["sum_covers"] = r.sum_covers;
    out["differences_trivial"] = r.differences_trivial;
    out["cardinality_product"] = r.cardinality_product;
    out["unique_decomposition"] = r.unique_decomposition;
    out["verdict"] = r.verdict();
    return out;
}

json to_json(const GroupSpec& g, const HalfValencyResult& r) {
    json out;
    out["success"] = r.success();
    if (r.code) out["code"] = to_json(g, *r.code);
    else out["cover"] = to_json(g, r.cover);
    return out;
}

json to_json(const GroupSpec& g, const SubgroupCodeVerdict& v) {
    json out;
    out["subgroup"] = to_json(g, v.subgroup);
    out["is_spc"] = v.is_spc;
    out["reason"] = to_string(v.reason);
    if (v.non_square_witness)
        out["non_square_witness"] = to_json(g, *v.non_square_witness);
    if (v.witness_connection_set)
        out["witness_connection_set"] =
            to_json(g, *v.witness_connection_set);
    return out;
}

json to_json(const GroupSpec& g, const EquivalenceReport& r) {
    json out;
    json conds;
    conds["exists_code_graph"] = r.exists_code_graph;
    conds["square_free_transversal"] = r.square_free_transversal;
    conds["intersection_condition"] = r.intersection_condition;
    conds["supplementary_decomposition"] = r.supplementary_decomposition;
    conds["code_in_every_overgroup"] = r.code_in_every_overgroup;
    out["conditions"] = std::move(conds);
    out["all_agree"] = r.all_agree();
    json w;
    if (r.graph_witness) w["graph"] = to_json(g, *r.graph_witness);
    if (r.transversal_witness)
        w["transversal"] = to_json(g, *r.transversal_witness);
    if (r.intersection_witness)
        w["intersection"] = to_json(g, *r.intersection_witness);
    if (r.supplementary_witness)
        w["supplementary"] = to_json(g, *r.supplementary_witness);
    out["witnesses"] = std::move(w);
    out["overgroups_checked"] = r.overgroups_checked.size();
    return out;
}

json to_json(const SweepStats& s) {
    json out;
    out["groups"] = s.groups;
    out["connection_sets"] = s.connection_sets;
    out["pairs"] = s.pairs;
    out["discrepancies"] = s.discrepancies;
    out["details"] = s.details;
    return out;
}

}  // namespace caysum
