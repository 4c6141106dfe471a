#include "caysum/dense.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace caysum {

namespace {

DenseGroup build(const GroupSpec& g, const std::vector<Element>& elems,
                 DenseGroup& d);

}  // namespace

DenseGroup DenseGroup::from_group(const GroupSpec& g, long bound) {
    if (g.order() > bound || g.order() > 64)
        throw resource_error("dense table bound exceeded by |A| = " +
                             std::to_string(g.order()));
    DenseGroup d;
    d.elements_ = all_elements(g);
    d.n_ = static_cast<int>(d.elements_.size());
    d.add_.resize(d.n_ * d.n_);
    d.neg_.resize(d.n_);
    for (int a = 0; a < d.n_; ++a) {
        d.neg_[a] = static_cast<std::uint8_t>(
            d.rank_of(negate(g, d.elements_[a])));
        for (int b = 0; b < d.n_; ++b)
            d.add_[a * d.n_ + b] = static_cast<std::uint8_t>(
                d.rank_of(caysum::add(g, d.elements_[a], d.elements_[b])));
    }
    for (int a = 0; a < d.n_; ++a) d.squares_ |= 1ULL << d.add(a, a);
    return d;
}

DenseGroup DenseGroup::from_subgroup(const GroupSpec& g, const Subgroup& h) {
    if (h.elements.size() > 64)
        throw resource_error("dense table limited to 64 elements");
    DenseGroup d;
    d.elements_ = h.elements.items();
    d.n_ = static_cast<int>(d.elements_.size());
    d.add_.resize(d.n_ * d.n_);
    d.neg_.resize(d.n_);
    for (int a = 0; a < d.n_; ++a) {
        d.neg_[a] = static_cast<std::uint8_t>(
            d.rank_of(negate(g, d.elements_[a])));
        for (int b = 0; b < d.n_; ++b)
            d.add_[a * d.n_ + b] = static_cast<std::uint8_t>(
                d.rank_of(caysum::add(g, d.elements_[a], d.elements_[b])));
    }
    // squares of the subgroup as a group in its own right
    for (int a = 0; a < d.n_; ++a) d.squares_ |= 1ULL << d.add(a, a);
    return d;
}

int DenseGroup::rank_of(const Element& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e)
        throw structural_error("element not in dense table");
    return static_cast<int>(it - elements_.begin());
}

std::uint64_t DenseGroup::mask_of(const ElementSet& s) const {
    std::uint64_t m = 0;
    for (const Element& e : s) m |= 1ULL << rank_of(e);
    return m;
}

ElementSet DenseGroup::set_of(std::uint64_t mask) const {
    std::vector<Element> out;
    for (std::uint64_t m = mask; m; m &= m - 1)
        out.push_back(elements_[std::countr_zero(m)]);
    return ElementSet(std::move(out));
}

std::uint64_t DenseGroup::sumset(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::uint64_t ma = a; ma; ma &= ma - 1) {
        int x = std::countr_zero(ma);
        for (std::uint64_t mb = b; mb; mb &= mb - 1)
            out |= 1ULL << add(x, std::countr_zero(mb));
    }
    return out;
}

std::uint64_t DenseGroup::difference_set(std::uint64_t a,
                                         std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::uint64_t ma = a; ma; ma &= ma - 1) {
        int x = std::countr_zero(ma);
        for (std::uint64_t mb = b; mb; mb &= mb - 1)
            out |= 1ULL << sub(x, std::countr_zero(mb));
    }
    return out;
}

std::uint64_t DenseGroup::translate_neg(std::uint64_t tmask, int x) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = tmask; m; m &= m - 1)
        out |= 1ULL << sub(std::countr_zero(m), x);
    return out;
}

bool DenseGroup::is_perfect_code(std::uint64_t tmask,
                                 std::uint64_t xmask) const {
    // independence: no x1, x2 in X with x1 + x2 in T
    for (std::uint64_t m = xmask; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if (sumset(1ULL << x, xmask) & tmask) return false;
    }
    // every outside vertex has exactly one neighbor {t - v} in X
    std::uint64_t outside = full_mask() & ~xmask;
    for (std::uint64_t m = outside; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (std::popcount(translate_neg(tmask, v) & xmask) != 1) return false;
    }
    return true;
}

namespace {

struct CodeSearch {
    const DenseGroup& d;
    std::uint64_t full;
    std::vector<std::uint64_t> closed;  // N[c] = {c} | {t - c}
    std::vector<std::uint64_t>& out;

    void run(std::uint64_t covered, std::uint64_t code) {
        if (covered == full) {
            out.push_back(code);
            return;
        }
        int v = std::countr_zero(full & ~covered);
        // candidates covering v: exactly the members of N[v] (adjacency is
        // symmetric and loop-free)
        for (std::uint64_t cand = closed[v]; cand; cand &= cand - 1) {
            int c = std::countr_zero(cand);
            if (closed[c] & covered) continue;
            run(covered | closed[c], code | (1ULL << c));
        }
    }
};

std::vector<std::uint64_t> closed_neighborhoods(const DenseGroup& d,
                                                std::uint64_t tmask) {
    std::vector<std::uint64_t> closed(d.size());
    for (int c = 0; c < d.size(); ++c)
        closed[c] = (1ULL << c) | d.translate_neg(tmask, c);
    return closed;
}

}  // namespace

std::vector<std::uint64_t> enumerate_code_masks(const DenseGroup& d,
                                                std::uint64_t tmask,
                                                ExecutionPolicy policy) {
    int s = std::popcount(tmask);
    if (d.size() % (s + 1) != 0) return {};
    auto closed = closed_neighborhoods(d, tmask);
    std::vector<std::uint64_t> out;
    if (policy == ExecutionPolicy::serial) {
        CodeSearch search{d, d.full_mask(), closed, out};
        search.run(0, 0);
    } else {
        // split on the choice made for vertex 0, one branch per candidate
        std::vector<int> first;
        for (std::uint64_t m = closed[0]; m; m &= m - 1)
            first.push_back(std::countr_zero(m));
        std::vector<std::vector<std::uint64_t>> parts(first.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t i = 0; i < first.size(); ++i) {
            int c = first[i];
            CodeSearch search{d, d.full_mask(), closed, parts[i]};
            search.run(closed[c], 1ULL << c);
        }
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t find_k_subset(std::uint64_t pool, int k,
                            const std::function<bool(std::uint64_t)>& fn) {
    std::vector<int> bits;
    for (std::uint64_t m = pool; m; m &= m - 1)
        bits.push_back(std::countr_zero(m));
    if (k < 0 || k > static_cast<int>(bits.size())) return 0;
    std::uint64_t found = 0;
    // positions chosen in ascending order; rec(i, left, acc)
    auto rec = [&](auto&& self, std::size_t i, int left,
                   std::uint64_t acc) -> bool {
        if (left == 0) {
            if (fn(acc)) {
                found = acc;
                return true;
            }
            return false;
        }
        for (std::size_t j = i; j + left <= bits.size(); ++j)
            if (self(self, j + 1, left - 1, acc | (1ULL << bits[j])))
                return true;
        return false;
    };
    rec(rec, 0, k, 0);
    return found;
}

std::uint64_t find_any_subset(std::uint64_t pool,
                              const std::function<bool(std::uint64_t)>& fn) {
    // ascending-mask subset walk of the sub-masks of pool
    std::uint64_t sub = 0;
    while (true) {
        if (fn(sub)) return sub;
        if (sub == pool) return 0;
        sub = (sub - pool) & pool;  // next sub-mask of pool
    }
}

std::uint64_t find_code_connection_set(const DenseGroup& d,
                                       std::uint64_t hmask, bool& found,
                                       ExecutionPolicy policy) {
    int k = d.size() / std::popcount(hmask) - 1;
    if (k == 0) {  // H = A: perfect code of the empty graph
        found = d.is_perfect_code(0, hmask);
        return 0;
    }
    std::uint64_t pool = d.non_squares_mask();
    if (k > std::popcount(pool)) {
        found = false;
        return 0;
    }
    auto check = [&](std::uint64_t t) { return d.is_perfect_code(t, hmask); };
    if (policy == ExecutionPolicy::serial) {
        std::uint64_t t = find_k_subset(pool, k, check);
        found = t != 0;
        return t;
    }
    // parallel: one branch per smallest chosen bit, earliest branch wins
    std::vector<int> bits;
    for (std::uint64_t m = pool; m; m &= m - 1)
        bits.push_back(std::countr_zero(m));
    int nb = static_cast<int>(bits.size());
    std::vector<std::uint64_t> branch_hit(nb, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i <= nb - k; ++i) {
        std::uint64_t rest = 0;
        for (int j = i + 1; j < nb; ++j) rest |= 1ULL << bits[j];
        bool hit = false;
        std::uint64_t partial =
            find_k_subset(rest, k - 1, [&](std::uint64_t t) {
                if (!check(t | (1ULL << bits[i]))) return false;
                hit = true;
                return true;
            });
        if (hit) branch_hit[i] = partial | (1ULL << bits[i]);
    }
    for (int i = 0; i <= nb - k; ++i)
        if (branch_hit[i]) {
            found = true;
            return branch_hit[i];
        }
    found = false;
    return 0;
}

}  // namespace caysum
