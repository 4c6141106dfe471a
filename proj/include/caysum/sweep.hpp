#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caysum/dense.hpp"
#include "caysum/group.hpp"

namespace caysum {

/// One GroupSpec per isomorphism type of abelian group of order in
/// [2, max_order]; 2-power factors first, largest exponent first.
std::vector<GroupSpec> all_abelian_group_types(long max_order,
                                               bool even_only = false);

struct SweepConfig {
    long max_order = 16;
    /// Exhaust a space of connection sets or candidate codes only when it
    /// has at most this many members; otherwise draw `sample` of them.
    long exhaustive_limit = 1'000'000;
    long sample = 10'000;
    std::uint64_t seed = 0;
    ExecutionPolicy policy = ExecutionPolicy::parallel;
};

struct SweepStats {
    long groups = 0;
    long connection_sets = 0;
    long pairs = 0;  // (T, X) pairs or subgroups, depending on the sweep
    long discrepancies = 0;
    std::vector<std::string> details;  // one line per discrepancy, sorted
};

/// For every even group, square-free T, and candidate code X of admissible
/// size (plus every code found by graph enumeration): the partition
/// criterion, the cardinality/independence/uniqueness conjunction, and the
/// graph-side oracle must give the same verdict.
SweepStats theorem_equivalence_sweep(const SweepConfig& cfg);

/// For every even group and subgroup: the non-square/squares-subgroup
/// classification must match brute-force existence of a square-free T of
/// size [A:H] - 1 making H a perfect code.
SweepStats subgroup_ground_truth_sweep(const SweepConfig& cfg);

}  // namespace caysum
