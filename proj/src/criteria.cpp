#include "caysum/criteria.hpp"

#include <algorithm>
#include <map>

namespace caysum {

ElementSet sumset(const GroupSpec& g, const ElementSet& b, const ElementSet& c,
                  Sign sign) {
    std::vector<Element> out;
    out.reserve(b.size() * c.size());
    for (const Element& x : b)
        for (const Element& y : c)
            out.push_back(sign == Sign::plus ? add(g, x, y)
                                             : subtract(g, x, y));
    return ElementSet(std::move(out));
}

bool check_domination_cover(const GroupSpec& g, const ConnectionSet& t,
                            const ElementSet& x) {
    ElementSet covered = sumset(g, t.elements, x, Sign::minus);
    for (const Element& a : all_elements(g))
        if (!x.contains(a) && !covered.contains(a)) return false;
    return true;
}

bool check_unique_domination(const GroupSpec& g, const ConnectionSet& t,
                             const ElementSet& x) {
    ElementSet xx = sumset(g, x, x, Sign::minus);
    ElementSet tt = sumset(g, t.elements, t.elements, Sign::minus);
    for (const Element& a : xx)
        if (a != zero(g) && tt.contains(a)) return false;
    return true;
}

bool check_independent(const GroupSpec& g, const ConnectionSet& t,
                       const ElementSet& x) {
    ElementSet xx = sumset(g, x, x, Sign::plus);
    return std::none_of(xx.begin(), xx.end(),
                        [&](const Element& a) { return t.elements.contains(a); });
}

bool check_partition(const GroupSpec& g, const ConnectionSet& t,
                     const ElementSet& x) {
    // count how many of {X, t_1-X, ..., t_s-X} each element lands in
    std::map<Element, int> hits;
    for (const Element& a : x) ++hits[a];
    for (const Element& tt : t.elements)
        for (const Element& a : x) ++hits[subtract(g, tt, a)];
    long total = static_cast<long>(x.size()) *
                 (static_cast<long>(t.size()) + 1);
    if (total != g.order()) return false;
    return std::all_of(hits.begin(), hits.end(),
                       [](const auto& kv) { return kv.second == 1; }) &&
           static_cast<long>(hits.size()) == g.order();
}

CriteriaReport evaluate_criteria(const GroupSpec& g, const ConnectionSet& t,
                                 const ElementSet& x) {
    for (const Element& e : x) require_valid(g, e);
    CriteriaReport r;

    r.cardinality_ok = static_cast<long>(x.size()) *
                           (static_cast<long>(t.size()) + 1) ==
                       g.order();

    ElementSet xplus = sumset(g, x, x, Sign::plus);
    r.independence_ok = true;
    for (const Element& a : xplus)
        if (t.elements.contains(a)) {
            r.independence_ok = false;
            r.independence_witness = a;
            break;
        }

    ElementSet xminus = sumset(g, x, x, Sign::minus);
    ElementSet tminus = sumset(g, t.elements, t.elements, Sign::minus);
    r.uniqueness_ok = true;
    for (const Element& a : xminus)
        if (a != zero(g) && tminus.contains(a)) {
            r.uniqueness_ok = false;
            r.uniqueness_witness = a;
            break;
        }

    std::map<Element, int> hits;
    for (const Element& a : x) ++hits[a];
    for (const Element& tt : t.elements)
        for (const Element& a : x) ++hits[subtract(g, tt, a)];
    r.partition_ok = true;
    for (const Element& a : all_elements(g)) {
        auto it = hits.find(a);
        int c = it == hits.end() ? 0 : it->second;
        if (c != 1) {
            r.partition_ok = false;
            r.partition_witness = a;
            break;
        }
    }
    return r;
}

SupplementaryReport is_supplementary(const GroupSpec& g, const ElementSet& m,
                                     const ElementSet& n) {
    for (const Element& e : m) require_valid(g, e);
    for (const Element& e : n) require_valid(g, e);
    SupplementaryReport r;
    r.sum_covers =
        static_cast<long>(sumset(g, m, n, Sign::plus).size()) == g.order();
    ElementSet mm = sumset(g, m, m, Sign::minus);
    ElementSet nn = sumset(g, n, n, Sign::minus);
    r.differences_trivial = true;
    for (const Element& a : mm)
        if (a != zero(g) && nn.contains(a)) {
            r.differences_trivial = false;
            break;
        }
    r.cardinality_product =
        static_cast<long>(m.size()) * static_cast<long>(n.size()) == g.order();
    // direct definition: every group element decomposes exactly once
    std::map<Element, int> count;
    for (const Element& a : m)
        for (const Element& b : n) ++count[add(g, a, b)];
    r.unique_decomposition =
        static_cast<long>(count.size()) == g.order() &&
        std::all_of(count.begin(), count.end(),
                    [](const auto& kv) { return kv.second == 1; });
    return r;
}

bool inverse_closed_code_test(const GroupSpec& g, const ConnectionSet& t,
                              const ElementSet& x) {
    if (!is_inverse_closed(g, x))
        throw precondition_error(
            "the supplementary-set criterion applies to inverse-closed codes "
            "only");
    return is_supplementary(g, x, t.zero_extended).verdict();
}

HalfValencyResult construct_half_valency_code(const GroupSpec& g,
                                              const ConnectionSet& t) {
    if (static_cast<long>(t.size()) != g.order() / 2 - 1)
        throw precondition_error(
            "half-valency construction needs |T| = |A|/2 - 1, got |T| = " +
            std::to_string(t.size()));
    HalfValencyResult result;
    result.cover = sumset(g, t.elements, t.elements, Sign::minus);
    for (const Element& e : t.elements) result.cover.insert(e);
    for (const Element& a : all_elements(g)) {
        if (a == zero(g) || result.cover.contains(a)) continue;
        ElementSet code({zero(g), a});
        if (!evaluate_criteria(g, t, code).overall())
            throw structural_error(
                "half-valency code {0," + to_string(g, a) +
                "} failed re-verification");
        result.code = std::move(code);
        return result;
    }
    return result;
}

}  // namespace caysum
