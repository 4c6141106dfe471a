#pragma once

#include <optional>

#include "caysum/graph.hpp"
#include "caysum/group.hpp"

namespace caysum {

enum class Sign { plus, minus };

/// {x +/- y : x in b, y in c}, deduplicated, canonical order.
ElementSet sumset(const GroupSpec& g, const ElementSet& b, const ElementSet& c,
                  Sign sign);

/// Every element outside x lies in some translate t - x (at-least-one
/// neighbor in the code).
bool check_domination_cover(const GroupSpec& g, const ConnectionSet& t,
                            const ElementSet& x);

/// (X - X) n (T - T) = {0} (at-most-one neighbor in the code).
bool check_unique_domination(const GroupSpec& g, const ConnectionSet& t,
                             const ElementSet& x);

/// (X + X) n T = {} (no edge inside the code).
bool check_independent(const GroupSpec& g, const ConnectionSet& t,
                       const ElementSet& x);

/// {X, t_1 - X, ..., t_s - X} is a partition of the whole group.
bool check_partition(const GroupSpec& g, const ConnectionSet& t,
                     const ElementSet& x);

/**
 * All four perfect-code criteria, each computed independently; their
 * pairwise agreement (and agreement with the graph oracle) is a theorem,
 * never assumed here.
 */
struct CriteriaReport {
    bool cardinality_ok = false;    // |A| = |X|(s+1)
    bool independence_ok = false;   // (X+X) n T = {}
    bool uniqueness_ok = false;     // (X-X) n (T-T) = {0}
    bool partition_ok = false;      // translate partition covers A once

    bool overall() const {
        return cardinality_ok && independence_ok && uniqueness_ok;
    }

    // witnesses for the false flags
    std::optional<Element> independence_witness;  // in (X+X) n T
    std::optional<Element> uniqueness_witness;    // nonzero, in both
    std::optional<Element> partition_witness;     // covered != exactly once
};

CriteriaReport evaluate_criteria(const GroupSpec& g, const ConnectionSet& t,
                                 const ElementSet& x);

/**
 * A = M + N / trivial difference intersection / |A| = |M||N|, plus the
 * direct unique-decomposition definition of A = M (+) N.  Any two of the
 * three conditions imply the third and the decomposition; that equivalence
 * is exercised by the property tests, not assumed.
 */
struct SupplementaryReport {
    bool sum_covers = false;            // (a) A = M + N
    bool differences_trivial = false;   // (b) (M-M) n (N-N) = {0}
    bool cardinality_product = false;   // (c) |A| = |M||N|
    bool unique_decomposition = false;  // the definition itself

    bool verdict() const { return unique_decomposition; }
};

SupplementaryReport is_supplementary(const GroupSpec& g, const ElementSet& m,
                                     const ElementSet& n);

/// For inverse-closed x only: x is a perfect code of CayS(A,T) iff
/// A = X (+) T^0.  Throws precondition_error when x is not inverse-closed.
bool inverse_closed_code_test(const GroupSpec& g, const ConnectionSet& t,
                              const ElementSet& x);

/// Result of the valency |A|/2 - 1 constructor.  Failure is a result, not
/// an error: the sufficiency condition |T - T^0| < |A| may simply not hold.
struct HalfValencyResult {
    std::optional<ElementSet> code;  // {0, a} when construction succeeded
    ElementSet cover;                // T u (T - T), the obstruction witness
    bool success() const { return code.has_value(); }
};

/// Picks the least a outside T u (T - T) and returns {0, a}, re-verified
/// through evaluate_criteria.  Requires |T| = |A|/2 - 1.
HalfValencyResult construct_half_valency_code(const GroupSpec& g,
                                              const ConnectionSet& t);

}  // namespace caysum
