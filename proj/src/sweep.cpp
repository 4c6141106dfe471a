#include "caysum/sweep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "caysum/criteria.hpp"
#include "caysum/subgroup_codes.hpp"

namespace caysum {

namespace {

void partitions(int total, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

void group_types_of_order(long n, std::vector<GroupSpec>& out) {
    // prime-power partitions, one choice per prime
    std::vector<std::pair<long, int>> pf;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            pf.emplace_back(p, e);
        }
    if (m > 1) pf.emplace_back(m, 1);

    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : pf) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(e, e, cur, parts);
        choices.push_back(std::move(parts));
    }
    std::vector<std::size_t> pick(pf.size(), 0);
    while (true) {
        std::vector<long> factors;
        for (std::size_t i = 0; i < pf.size(); ++i) {
            long pk = 1;
            for (int part : choices[i][pick[i]]) {
                pk = 1;
                for (int j = 0; j < part; ++j) pk *= pf[i].first;
                factors.push_back(pk);
            }
        }
        out.push_back(GroupSpec::from_factors(std::move(factors)));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        if (r > (1L << 56) / (n - k + i)) return 1L << 56;  // saturate
        r = r * (n - k + i) / i;
    }
    return r;
}

// Floyd's algorithm: k distinct indices out of n.
std::vector<int> sample_combination(int n, int k, std::mt19937_64& rng) {
    std::set<int> s;
    for (int j = n - k; j < n; ++j) {
        int t = std::uniform_int_distribution<int>(0, j)(rng);
        if (!s.insert(t).second) s.insert(j);
    }
    return {s.begin(), s.end()};
}

std::uint64_t mask_from_positions(const std::vector<int>& pool,
                                  const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int i : idx) m |= 1ULL << pool[i];
    return m;
}

std::vector<int> mask_bits(std::uint64_t m) {
    std::vector<int> bits;
    for (; m; m &= m - 1) bits.push_back(std::countr_zero(m));
    return bits;
}

// All k-subsets of pool bits, or `sample` random ones when there are more
// than `limit`.  Deterministic given the seed.
std::vector<std::uint64_t> k_subsets_or_sample(std::uint64_t poolmask, int k,
                                               long limit, long sample,
                                               std::mt19937_64& rng) {
    std::vector<int> pool = mask_bits(poolmask);
    int n = static_cast<int>(pool.size());
    std::vector<std::uint64_t> out;
    if (binomial(n, k) <= limit) {
        std::vector<int> idx(k);
        auto rec = [&](auto&& self, int i, int from) -> void {
            if (i == k) {
                std::uint64_t m = 0;
                for (int j : idx) m |= 1ULL << pool[j];
                out.push_back(m);
                return;
            }
            for (int j = from; j <= n - (k - i); ++j) {
                idx[i] = j;
                self(self, i + 1, j + 1);
            }
        };
        rec(rec, 0, 0);
    } else {
        out.reserve(sample);
        for (long i = 0; i < sample; ++i)
            out.push_back(
                mask_from_positions(pool, sample_combination(n, k, rng)));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

}  // namespace

std::vector<GroupSpec> all_abelian_group_types(long max_order,
                                               bool even_only) {
    std::vector<GroupSpec> out;
    for (long n = 2; n <= max_order; ++n) {
        if (even_only && n % 2 != 0) continue;
        group_types_of_order(n, out);
    }
    return out;
}

SweepStats theorem_equivalence_sweep(const SweepConfig& cfg) {
    SweepStats stats;
    std::mt19937_64 rng(cfg.seed);
    for (const GroupSpec& g : all_abelian_group_types(cfg.max_order, true)) {
        ++stats.groups;
        DenseGroup d = DenseGroup::from_group(g, cfg.max_order);
        std::uint64_t pool = d.non_squares_mask();
        int npool = std::popcount(pool);

        // square-free connection sets, exhaustively or sampled
        std::vector<std::uint64_t> tmasks;
        if (npool < 63 && (1ULL << npool) <= std::uint64_t(cfg.exhaustive_limit)) {
            tmasks.push_back(0);
            std::uint64_t sub = 0;
            do {
                sub = (sub - pool) & pool;
                if (sub) tmasks.push_back(sub);
            } while (sub != pool && sub != 0);
        } else {
            for (long i = 0; i < cfg.sample; ++i) {
                std::uint64_t r = rng();
                tmasks.push_back(r & pool);
            }
            std::sort(tmasks.begin(), tmasks.end());
            tmasks.erase(std::unique(tmasks.begin(), tmasks.end()),
                         tmasks.end());
        }

        // per-T candidate lists are drawn up front so that the parallel
        // loop stays deterministic; exhaustive lists are shared per size
        std::vector<std::shared_ptr<const std::vector<std::uint64_t>>> xlists(
            tmasks.size());
        std::map<int, std::shared_ptr<const std::vector<std::uint64_t>>>
            by_size;
        for (std::size_t i = 0; i < tmasks.size(); ++i) {
            int s = std::popcount(tmasks[i]);
            if (d.size() % (s + 1) != 0) continue;  // no admissible size
            int xsize = d.size() / (s + 1);
            bool exhaustive =
                binomial(d.size(), xsize) <= cfg.exhaustive_limit;
            if (exhaustive) {
                auto it = by_size.find(xsize);
                if (it == by_size.end())
                    it = by_size
                             .emplace(xsize,
                                      std::make_shared<
                                          const std::vector<std::uint64_t>>(
                                          k_subsets_or_sample(
                                              d.full_mask(), xsize,
                                              cfg.exhaustive_limit,
                                              cfg.sample, rng)))
                             .first;
                xlists[i] = it->second;
            } else {
                auto list = k_subsets_or_sample(d.full_mask(), xsize,
                                                cfg.exhaustive_limit,
                                                cfg.sample, rng);
                // sampling may miss the actual codes; add them explicitly
                auto codes = enumerate_code_masks(d, tmasks[i], cfg.policy);
                list.insert(list.end(), codes.begin(), codes.end());
                std::sort(list.begin(), list.end());
                list.erase(std::unique(list.begin(), list.end()), list.end());
                xlists[i] =
                    std::make_shared<const std::vector<std::uint64_t>>(
                        std::move(list));
            }
        }

        long pairs = 0, discrepancies = 0;
        std::vector<std::string> details;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : pairs, discrepancies) \
    if (cfg.policy == ExecutionPolicy::parallel)
#endif
        for (std::size_t i = 0; i < tmasks.size(); ++i) {
            if (!xlists[i] || xlists[i]->empty()) continue;
            ConnectionSet cs = validate_connection_set(g, d.set_of(tmasks[i]));
            for (std::uint64_t xm : *xlists[i]) {
                ++pairs;
                bool oracle = d.is_perfect_code(tmasks[i], xm);
                ElementSet x = d.set_of(xm);
                CriteriaReport rep = evaluate_criteria(g, cs, x);
                if (rep.partition_ok != rep.overall() ||
                    rep.overall() != oracle) {
                    ++discrepancies;
                    std::ostringstream os;
                    os << g.to_string() << " T=" << tmasks[i] << " X=" << xm
                       << " partition=" << rep.partition_ok
                       << " algebraic=" << rep.overall()
                       << " oracle=" << oracle;
#ifdef _OPENMP
#pragma omp critical
#endif
                    details.push_back(os.str());
                }
            }
        }
        stats.connection_sets += static_cast<long>(tmasks.size());
        stats.pairs += pairs;
        stats.discrepancies += discrepancies;
        std::sort(details.begin(), details.end());
        stats.details.insert(stats.details.end(), details.begin(),
                             details.end());
    }
    return stats;
}

SweepStats subgroup_ground_truth_sweep(const SweepConfig& cfg) {
    SweepStats stats;
    for (const GroupSpec& g : all_abelian_group_types(cfg.max_order, true)) {
        ++stats.groups;
        DenseGroup d = DenseGroup::from_group(g, cfg.max_order);
        std::vector<Subgroup> subs = all_subgroups(g, cfg.max_order);
        std::vector<int> mismatch(subs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    if (cfg.policy == ExecutionPolicy::parallel)
#endif
        for (std::size_t i = 0; i < subs.size(); ++i) {
            bool classified = is_subgroup_perfect_code(g, subs[i]).is_spc;
            bool found = false;
            find_code_connection_set(d, d.mask_of(subs[i].elements), found,
                                     ExecutionPolicy::serial);
            mismatch[i] = classified != found;
        }
        for (std::size_t i = 0; i < subs.size(); ++i) {
            ++stats.pairs;
            if (mismatch[i]) {
                ++stats.discrepancies;
                stats.details.push_back(
                    g.to_string() + " subgroup #" + std::to_string(i) +
                    " classifier/search mismatch");
            }
        }
    }
    return stats;
}

}  // namespace caysum
