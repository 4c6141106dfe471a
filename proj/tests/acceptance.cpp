// End-to-end acceptance checks: each numbered criterion prints one PASS/FAIL
// line with its runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "caysum/cli.hpp"
#include "caysum/parse.hpp"
#include "caysum/subgroup_codes.hpp"
#include "caysum/sweep.hpp"

using namespace caysum;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_s,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    if (budget_s > 0 && dt > budget_s) {
        ok = false;
        note += " (over time budget)";
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d. %-58s %7.2fs%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), dt, note.c_str());
    std::fflush(stdout);
}

bool cli_ok(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return run_cli(args, out, err) == 0;
}

}  // namespace

int main() {
    criterion(1, "worked Z12 code checks out (criteria + oracle)", 1.0, [] {
        return cli_ok(
            {"check-code", "Z12", "--set", "1,11", "--code", "0,3,6,9"});
    });

    criterion(2, "half-valency constructor reproduces {0,11}", 1.0, [] {
        GroupSpec g = parse_group_spec("Z12");
        ConnectionSet t =
            validate_connection_set(g, parse_element_set(g, "1,3,5,7,9"));
        HalfValencyResult r = construct_half_valency_code(g, t);
        if (!r.success() || *r.code != parse_element_set(g, "0,11"))
            return false;
        return brute_force_is_perfect_code(build_graph(g, t), *r.code).verdict;
    });

    criterion(3, "Z2xZ4xZ3 squares subgroup and classification", 5.0, [] {
        GroupSpec g = parse_group_spec("Z2xZ4xZ3");
        ElementSet expected = parse_element_set(
            g, "(0,0,0),(0,2,0),(0,2,1),(0,2,2),(0,0,1),(0,0,2)");
        Subgroup sq = squares_subgroup(g);
        if (sq.elements != expected) return false;
        ElementSet nonsq = parse_element_set(g, "(1,0,0),(0,1,0),(1,1,0)");
        for (const SubgroupCodeVerdict& v : classify_subgroup_codes(g)) {
            if (v.subgroup.elements == expected) {
                if (!v.is_spc ||
                    v.reason != SpcReason::equals_squares_subgroup)
                    return false;
            }
            bool meets_nonsq = false;
            for (const Element& e : nonsq)
                if (v.subgroup.elements.contains(e)) meets_nonsq = true;
            if (meets_nonsq && !v.is_spc) return false;
        }
        return true;
    });

    criterion(4, "criteria equivalence sweep, order <= 16, zero misses",
              600.0, [] {
                  SweepConfig cfg;
                  SweepStats s = theorem_equivalence_sweep(cfg);
                  return s.discrepancies == 0 && s.pairs > 0;
              });

    criterion(5, "subgroup classification vs ground truth, order <= 16",
              600.0, [] {
                  SweepConfig cfg;
                  SweepStats s = subgroup_ground_truth_sweep(cfg);
                  return s.discrepancies == 0 && s.pairs > 0;
              });

    criterion(6, "five-way equivalence agrees, order <= 24, all subgroups",
              0.0, [] {
                  for (const GroupSpec& g :
                       all_abelian_group_types(24, /*even_only=*/true))
                      for (const Subgroup& h : all_subgroups(g)) {
                          EquivalenceReport r = check_equivalences(g, h);
                          if (!r.all_agree()) return false;
                          if (r.exists_code_graph !=
                              is_subgroup_perfect_code(g, h).is_spc)
                              return false;
                      }
                  return true;
              });

    criterion(7, "family oracles match the classifier on the six groups", 0.0,
              [] {
                  for (const char* name : {"Z12", "Z8", "Z2xZ4", "Z2xZ2xZ3",
                                           "Z2xZ4xZ3", "Z2xZ2xZ2"}) {
                      GroupSpec g = parse_group_spec(name);
                      for (const Subgroup& h : all_subgroups(g)) {
                          auto v = special_case_oracles(g, h);
                          if (v.has_value() &&
                              *v != is_subgroup_perfect_code(g, h).is_spc)
                              return false;
                      }
                  }
                  return true;
              });

    criterion(8, "trivial/odd-order corollaries hold up to order 16", 0.0, [] {
        for (const GroupSpec& g :
             all_abelian_group_types(16, /*even_only=*/true)) {
            Subgroup trivial = subgroup_generate(g, ElementSet());
            if (is_subgroup_perfect_code(g, trivial).is_spc !=
                g.is_elementary_abelian_2())
                return false;
            auto [a2, a2p] = decompose_2_and_odd(g);
            bool sylow_ea2 = true;
            for (const Element& e : a2.elements)
                if (element_order(g, e) > 2) sylow_ea2 = false;
            for (const Subgroup& h : all_subgroups(g)) {
                if (h.elements.size() % 2 == 0) continue;
                bool expect = sylow_ea2 && h.elements == a2p.elements;
                if (is_subgroup_perfect_code(g, h).is_spc != expect)
                    return false;
            }
        }
        return true;
    });

    criterion(9, "every positive verdict's witness re-verifies", 0.0, [] {
        for (const GroupSpec& g :
             all_abelian_group_types(16, /*even_only=*/true))
            for (const SubgroupCodeVerdict& v : classify_subgroup_codes(g)) {
                if (!v.is_spc) continue;
                if (!v.witness_connection_set) return false;
                const ConnectionSet& t = *v.witness_connection_set;
                if (!evaluate_criteria(g, t, v.subgroup.elements).overall())
                    return false;
                if (!brute_force_is_perfect_code(build_graph(g, t),
                                                 v.subgroup.elements)
                         .verdict)
                    return false;
            }
        return true;
    });

    criterion(10, "no projection-condition violations up to order 16", 0.0,
              [] {
                  for (const GroupSpec& g :
                       all_abelian_group_types(16, /*even_only=*/true))
                      for (const Subgroup& h : all_subgroups(g))
                          if (is_subgroup_perfect_code(g, h).is_spc &&
                              !projection_necessary_check(g, h))
                              return false;
                  return true;
              });

    if (failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
