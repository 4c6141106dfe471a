#include "caysum/subgroup_codes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace caysum {

std::optional<Element> has_non_square(const GroupSpec& g, const Subgroup& h) {
    for (const Element& a : h.elements)
        if (!is_square(g, a)) return a;
    return std::nullopt;
}

const char* to_string(SpcReason r) {
    switch (r) {
        case SpcReason::has_non_square: return "has-non-square";
        case SpcReason::equals_squares_subgroup:
            return "equals-squares-subgroup";
        case SpcReason::neither: return "neither";
    }
    return "?";
}

SubgroupCodeVerdict is_subgroup_perfect_code(const GroupSpec& g,
                                             const Subgroup& h) {
    require_subgroup(g, h);
    SubgroupCodeVerdict v;
    v.subgroup = h;
    if (auto ns = has_non_square(g, h)) {
        v.is_spc = true;
        v.reason = SpcReason::has_non_square;
        v.non_square_witness = ns;
    } else if (h.elements == squares_subgroup(g).elements) {
        // covers the odd-order group as well: there A^II = A and only the
        // whole group is a perfect code (of the empty graph)
        v.is_spc = true;
        v.reason = SpcReason::equals_squares_subgroup;
    } else {
        v.reason = SpcReason::neither;
        return v;
    }
    v.witness_connection_set = witness_connection_set(g, h);
    return v;
}

ConnectionSet witness_connection_set(const GroupSpec& g, const Subgroup& h) {
    require_subgroup(g, h);
    auto least_non_square = has_non_square(g, h);
    bool equals_squares = h.elements == squares_subgroup(g).elements;
    if (!least_non_square && !equals_squares)
        throw precondition_error(
            "subgroup is not a perfect code, no witness connection set "
            "exists");

    CosetDecomposition cd = cosets_and_transversal(g, h);
    std::vector<Element> t;
    for (const Element& rep : cd.transversal) {
        if (rep == zero(g)) continue;
        if (!is_square(g, rep)) {
            t.push_back(rep);
        } else if (least_non_square) {
            t.push_back(add(g, rep, *least_non_square));
        } else {
            // h = A^II and the representative of a nonzero coset is a
            // square: impossible, nonzero cosets of the squares subgroup
            // contain no squares
            throw structural_error(
                "square representative outside the squares subgroup");
        }
    }
    ConnectionSet cs = validate_connection_set(g, ElementSet(std::move(t)));
    if (!evaluate_criteria(g, cs, h.elements).overall())
        throw structural_error("witness connection set failed criteria check");
    CayleySumGraph graph = build_graph(g, cs);
    if (!brute_force_is_perfect_code(graph, h.elements).verdict)
        throw structural_error("witness connection set failed graph oracle");
    return cs;
}

namespace {

// (iii): T of size k from the non-squares with all elements outside H and
// all pairwise differences outside H \ {0}.
bool intersection_search(const DenseGroup& d, std::uint64_t hmask, int k,
                         std::uint64_t& witness) {
    std::vector<int> pool;
    for (std::uint64_t m = d.non_squares_mask(); m; m &= m - 1)
        pool.push_back(std::countr_zero(m));
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            witness = 0;
            for (int c : chosen) witness |= 1ULL << c;
            return true;
        }
        for (std::size_t j = i; j < pool.size(); ++j) {
            int t = pool[j];
            if (hmask & (1ULL << t)) continue;  // t in H n T
            bool ok = true;
            for (int prev : chosen)
                if (hmask & (1ULL << d.sub(t, prev))) {
                    ok = false;  // difference in H \ {0}
                    break;
                }
            if (!ok) continue;
            chosen.push_back(t);
            if (self(self, j + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

EquivalenceReport check_equivalences(const GroupSpec& g, const Subgroup& h,
                                     long bound, ExecutionPolicy policy) {
    require_subgroup(g, h);
    if (g.order() > bound)
        throw resource_error("equivalence check bound " +
                             std::to_string(bound) + " exceeded by |A| = " +
                             std::to_string(g.order()));
    DenseGroup d = DenseGroup::from_group(g, bound);
    std::uint64_t hmask = d.mask_of(h.elements);
    int k = static_cast<int>(h.index) - 1;
    EquivalenceReport r;

    // (i) some square-free T makes H a perfect code, by the graph oracle
    {
        bool found = false;
        std::uint64_t t = find_code_connection_set(d, hmask, found, policy);
        r.exists_code_graph = found;
        if (found) r.graph_witness = d.set_of(t);
    }

    // (ii) square-free transversal extension: pick the least non-square of
    // every nonzero coset
    {
        CosetDecomposition cd = cosets_and_transversal(g, h);
        std::vector<Element> t;
        bool ok = true;
        for (const ElementSet& coset : cd.cosets) {
            if (coset.contains(zero(g))) continue;
            auto it = std::find_if(
                coset.begin(), coset.end(),
                [&](const Element& e) { return !is_square(g, e); });
            if (it == coset.end()) {
                ok = false;
                break;
            }
            t.push_back(*it);
        }
        r.square_free_transversal = ok;
        if (ok) r.transversal_witness = ElementSet(std::move(t));
    }

    // (iii) H n (T u (T - T)) = {0} with [A:H] = |T| + 1
    {
        std::uint64_t witness = 0;
        if (k == 0) {
            r.intersection_condition = true;
            r.intersection_witness = ElementSet();
        } else if (intersection_search(d, hmask, k, witness)) {
            r.intersection_condition = true;
            r.intersection_witness = d.set_of(witness);
        }
    }

    // (iv) A = H (+) T^0 for some square-free T
    {
        auto try_t = [&](std::uint64_t tmask) {
            ElementSet t0 = d.set_of(tmask);
            t0.insert(zero(g));
            return is_supplementary(g, h.elements, t0).verdict();
        };
        if (k == 0) {
            r.supplementary_decomposition = try_t(0);
            if (r.supplementary_decomposition)
                r.supplementary_witness = ElementSet();
        } else {
            std::uint64_t t = find_k_subset(d.non_squares_mask(), k, try_t);
            r.supplementary_decomposition = t != 0;
            if (t) r.supplementary_witness = d.set_of(t);
        }
    }

    // (v) H is a subgroup perfect code of every K with H <= K <= A
    {
        r.code_in_every_overgroup = true;
        for (const Subgroup& kgrp : all_subgroups(g, bound)) {
            if (!is_subgroup_of(h, kgrp)) continue;
            r.overgroups_checked.push_back(kgrp);
            DenseGroup dk = DenseGroup::from_subgroup(g, kgrp);
            std::uint64_t hk = dk.mask_of(h.elements);
            bool found = false;
            find_code_connection_set(dk, hk, found, policy);
            if (!found) r.code_in_every_overgroup = false;
        }
    }

    return r;
}

std::vector<SubgroupCodeVerdict> classify_subgroup_codes(const GroupSpec& g,
                                                         long bound) {
    std::vector<SubgroupCodeVerdict> out;
    for (const Subgroup& h : all_subgroups(g, bound))
        out.push_back(is_subgroup_perfect_code(g, h));
    return out;
}

namespace {

Subgroup restrict_2_part(const GroupSpec& g, const Subgroup& h) {
    std::vector<Element> two;
    for (const Element& a : h.elements) {
        long ord = element_order(g, a);
        if ((ord & (ord - 1)) == 0) two.push_back(a);
    }
    Subgroup h2;
    h2.generators = ElementSet(two);
    h2.elements = ElementSet(two);
    h2.index = g.order() / static_cast<long>(h2.elements.size());
    return h2;
}

}  // namespace

bool projection_necessary_check(const GroupSpec& g, const Subgroup& h) {
    require_subgroup(g, h);
    auto [a2, a2p] = decompose_2_and_odd(g);
    Subgroup h2 = restrict_2_part(g, h);
    DenseGroup d2 = DenseGroup::from_subgroup(g, a2);
    std::uint64_t h2mask = d2.mask_of(h2.elements);
    // Theorem 3.1 inside A_2: non-square present or H_2 = (A_2)^II
    return (h2mask & d2.non_squares_mask()) != 0 ||
           h2mask == d2.squares_mask();
}

std::optional<bool> special_case_oracles(const GroupSpec& g,
                                         const Subgroup& h) {
    require_subgroup(g, h);
    auto [a2, a2p] = decompose_2_and_odd(g);
    const auto& exps = g.two_part_exponents();
    bool sylow_elementary =
        std::all_of(exps.begin(), exps.end(), [](int m) { return m == 1; });

    long hsize = static_cast<long>(h.elements.size());
    if (hsize % 2 == 1)  // odd-order subgroup, any group
        return sylow_elementary && h.elements == a2p.elements;

    if (!g.even_order()) return std::nullopt;

    long cyclic_order = 1;
    for (long n : g.factor_orders()) cyclic_order = std::lcm(cyclic_order, n);
    if (cyclic_order == g.order()) {
        // cyclic of even order: H = Z_{2^n} x Z_{m'} shape or Z_{2^{n-1}} x Z_m
        long n2 = 1;
        for (int m : exps) n2 <<= m;
        long modd = g.order() / n2;
        long h2part = hsize & -hsize;  // 2-part of |H|
        return h2part == n2 || hsize == (n2 / 2) * modd;
    }

    if (sylow_elementary)  // Z_2^n x odd
        return hsize % 2 == 0 || h.elements == a2p.elements;

    int twos = static_cast<int>(std::count(exps.begin(), exps.end(), 2));
    int ones = static_cast<int>(std::count(exps.begin(), exps.end(), 1));
    if (twos == 1 && ones >= 1 &&
        ones + twos == static_cast<int>(exps.size())) {
        // Z_2^n x Z_4 x odd: excluded exactly when H sits inside the squares
        // with its 2-part being the square half of the Z_4 factor and a
        // proper odd part
        Subgroup h2 = restrict_2_part(g, h);
        std::vector<Element> hodd;
        for (const Element& a : h.elements)
            if (element_order(g, a) % 2 == 1) hodd.push_back(a);
        bool excluded = h2.elements.size() == 2 &&
                        is_square(g, h2.elements[1]) &&
                        ElementSet(hodd) != a2p.elements;
        return !excluded;
    }

    return std::nullopt;
}

}  // namespace caysum
