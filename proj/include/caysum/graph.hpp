#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caysum/dense.hpp"
#include "caysum/group.hpp"

namespace caysum {

/**
 * A validated connection set: a square-free subset T of the group, together
 * with T^0 = T u {0}.  Square-freeness forces 0 not in T and makes the
 * resulting Cayley sum graph simple.  Groups of odd order only admit T = {}.
 */
struct ConnectionSet {
    ElementSet elements;       // T
    ElementSet zero_extended;  // T^0
    std::size_t size() const { return elements.size(); }
};

/// Validates T; throws validation_error listing every square found, or when
/// the ambient group has odd order and T is non-empty.
ConnectionSet validate_connection_set(const GroupSpec& g, const ElementSet& t);

/// CayS(A, T): x ~ y iff x + y in T.  |T|-regular, loop-free.
struct CayleySumGraph {
    GroupSpec group;
    ConnectionSet connection;
    /// neighbor sets indexed by the lexicographic rank of each vertex
    std::vector<ElementSet> adjacency;
};

CayleySumGraph build_graph(const GroupSpec& g, const ConnectionSet& t);

/// {t - x : t in T}; always |T| many, never contains x itself.
ElementSet neighbors(const CayleySumGraph& graph, const Element& x);

struct PerfectCodeCertificate {
    enum class Failure {
        none,
        independence,
        under_domination,
        over_domination,
        cardinality
    };

    ElementSet code;
    bool verdict = false;
    /// For each vertex outside the code, its unique code neighbor.
    /// Present (and covering everything exactly once) iff verdict is true.
    std::vector<std::pair<Element, Element>> partition_witness;
    Failure failure = Failure::none;
    std::optional<Element> failure_witness;
};

const char* to_string(PerfectCodeCertificate::Failure f);

/// The definitional oracle: code is independent and every outside vertex is
/// adjacent to exactly one code vertex.  Uses only adjacency, no algebra.
PerfectCodeCertificate brute_force_is_perfect_code(const CayleySumGraph& graph,
                                                   const ElementSet& code);

struct EnumerationResult {
    std::vector<ElementSet> codes;  // canonically ordered
    /// (|T|+1) does not divide |A|, so no perfect code can exist and the
    /// search was skipped.
    bool cardinality_obstruction = false;
};

/// All perfect codes of the graph, each re-verified by the brute-force
/// oracle.  Throws resource_error when |A| exceeds the bound.
EnumerationResult enumerate_perfect_codes(
    const CayleySumGraph& graph, long bound = 24,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

enum class ExportFormat { dot, json };

/// DOT: lexicographic node and edge emission; JSON: {group, connection_set,
/// edges} with a sorted pair list.  Both byte-deterministic.
std::string export_graph(const CayleySumGraph& graph, ExportFormat format);

}  // namespace caysum
