#pragma once

#include <optional>
#include <vector>

#include "caysum/criteria.hpp"
#include "caysum/graph.hpp"
#include "caysum/group.hpp"

namespace caysum {

/// The least non-square element of h, if any.
std::optional<Element> has_non_square(const GroupSpec& g, const Subgroup& h);

enum class SpcReason { has_non_square, equals_squares_subgroup, neither };
const char* to_string(SpcReason r);

struct SubgroupCodeVerdict {
    Subgroup subgroup;
    bool is_spc = false;
    SpcReason reason = SpcReason::neither;
    std::optional<Element> non_square_witness;
    /// A connection set making the subgroup a perfect code; present iff
    /// is_spc, verified through both the criteria and the graph oracle.
    std::optional<ConnectionSet> witness_connection_set;
};

/// A subgroup is a perfect code of some Cayley sum graph iff it contains a
/// non-square or equals the squares subgroup {2a : a in A}.
SubgroupCodeVerdict is_subgroup_perfect_code(const GroupSpec& g,
                                             const Subgroup& h);

/// Builds a connection set T with T^0 a square-free-extended transversal of
/// h: non-square coset representatives are kept, square representatives are
/// shifted by the least non-square of h.  Requires h to be a subgroup
/// perfect code.
ConnectionSet witness_connection_set(const GroupSpec& g, const Subgroup& h);

/**
 * The five equivalent subgroup-perfect-code conditions, each evaluated by
 * its own route: (i) exhaustive connection-set search against the graph
 * oracle, (ii) square-free transversal construction, (iii) backtracking
 * search for T with H n (T u (T-T)) = {0}, (iv) supplementary-set search,
 * (v) recursion into every subgroup containing H.
 */
struct EquivalenceReport {
    bool exists_code_graph = false;            // (i)
    bool square_free_transversal = false;      // (ii)
    bool intersection_condition = false;       // (iii)
    bool supplementary_decomposition = false;  // (iv)
    bool code_in_every_overgroup = false;      // (v)

    std::optional<ElementSet> graph_witness;          // T for (i)
    std::optional<ElementSet> transversal_witness;    // T for (ii)
    std::optional<ElementSet> intersection_witness;   // T for (iii)
    std::optional<ElementSet> supplementary_witness;  // T for (iv)
    std::vector<Subgroup> overgroups_checked;         // (v)

    bool all_agree() const {
        return exists_code_graph == square_free_transversal &&
               exists_code_graph == intersection_condition &&
               exists_code_graph == supplementary_decomposition &&
               exists_code_graph == code_in_every_overgroup;
    }
};

EquivalenceReport check_equivalences(
    const GroupSpec& g, const Subgroup& h, long bound = 24,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

/// One verdict per subgroup of the group, in all_subgroups order.
std::vector<SubgroupCodeVerdict> classify_subgroup_codes(const GroupSpec& g,
                                                         long bound = 64);

/// Necessary condition: if h is a subgroup perfect code of A, then its
/// 2-part is a subgroup perfect code of the Sylow 2-subgroup.  Returns the
/// verdict for (A_2, H_2); the converse does not hold.
bool projection_necessary_check(const GroupSpec& g, const Subgroup& h);

/// Closed-form verdicts for odd-order subgroups and for the three group
/// families with a published classification (cyclic of even order,
/// Z_2^n x odd, Z_2^n x Z_4 x odd).  Empty when no special case applies.
std::optional<bool> special_case_oracles(const GroupSpec& g,
                                         const Subgroup& h);

}  // namespace caysum
