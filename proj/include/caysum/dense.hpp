#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "caysum/group.hpp"

namespace caysum {

/// Whether a search kernel runs its serial reference loop or the
/// OpenMP-parallel variant.  Both must return identical results.
enum class ExecutionPolicy { serial, parallel };

/**
 * Table form of an abelian group of order <= 64: elements are ranked in
 * lexicographic order and subsets are uint64 bitmasks.  The heavy search
 * kernels (code enumeration, connection-set searches, sweeps) all run here.
 *
 * A DenseGroup can be built from a whole GroupSpec or from a subgroup, in
 * which case addition, squares etc. are those of the subgroup as a group in
 * its own right.
 */
class DenseGroup {
public:
    static DenseGroup from_group(const GroupSpec& g, long bound = 64);
    static DenseGroup from_subgroup(const GroupSpec& g, const Subgroup& h);

    int size() const { return n_; }
    int add(int a, int b) const { return add_[a * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_[a * n_ + neg_[b]]; }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    }
    /// Ranks of the squares {2a}.
    std::uint64_t squares_mask() const { return squares_; }
    std::uint64_t non_squares_mask() const { return full_mask() & ~squares_; }

    const Element& element(int rank) const { return elements_[rank]; }
    int rank_of(const Element& e) const;

    std::uint64_t mask_of(const ElementSet& s) const;
    ElementSet set_of(std::uint64_t mask) const;

    std::uint64_t sumset(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t difference_set(std::uint64_t a, std::uint64_t b) const;
    /// {t - x : t in tmask} for a single element rank x.
    std::uint64_t translate_neg(std::uint64_t tmask, int x) const;

    /// Definitional perfect-code check of code xmask in CayS(., tmask).
    bool is_perfect_code(std::uint64_t tmask, std::uint64_t xmask) const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> neg_;
    std::uint64_t squares_ = 0;
    std::vector<Element> elements_;
};

/// Enumerates all perfect codes of CayS(group, tmask) by exact-cover
/// backtracking over closed neighborhoods.  Output sorted ascending.
std::vector<std::uint64_t> enumerate_code_masks(
    const DenseGroup& d, std::uint64_t tmask,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Calls fn for every k-subset of the bits of pool, in lexicographic order
/// of the ascending position sequences; stops when fn returns true and returns the
/// accepted mask.  Returns 0 when no subset is accepted.
std::uint64_t find_k_subset(std::uint64_t pool, int k,
                            const std::function<bool(std::uint64_t)>& fn);

/// Visits every subset of pool (including the empty one) in ascending mask
/// order; stops when fn accepts one and returns it, else returns 0.
std::uint64_t find_any_subset(std::uint64_t pool,
                              const std::function<bool(std::uint64_t)>& fn);

/// Is there a square-free T of size |T| = index(h) - 1 such that the
/// subgroup mask hmask is a perfect code of CayS(., T)?  Returns the least
/// such T in the find_k_subset order, or 0 when none exists; found is set
/// accordingly.  The empty T is the answer when hmask is the whole group.
std::uint64_t find_code_connection_set(
    const DenseGroup& d, std::uint64_t hmask, bool& found,
    ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace caysum
