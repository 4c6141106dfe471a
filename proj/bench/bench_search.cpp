// Compares the serial reference kernels against the OpenMP variants on the
// heaviest workloads: perfect-code enumeration, connection-set search, and
// the equivalence sweep.

#include <chrono>
#include <cstdio>

#include "caysum/parse.hpp"
#include "caysum/subgroup_codes.hpp"
#include "caysum/sweep.hpp"

using namespace caysum;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = clk::now();
    f();
    return seconds(t0, clk::now());
}

}  // namespace

int main() {
    std::printf("%-34s %10s %10s %8s\n", "workload", "serial", "parallel",
                "speedup");

    {
        GroupSpec g = parse_group_spec("Z2xZ2xZ2xZ2xZ2");
        ElementSet t;
        for (const Element& e : all_elements(g))
            if (!is_square(g, e)) t.insert(e);
        // valency-15 case: small codes, deep search tree
        ElementSet t3({t[0], t[1], t[2]});
        CayleySumGraph graph =
            build_graph(g, validate_connection_set(g, t3));
        EnumerationResult serial, parallel;
        double ts = timed([&] {
            serial = enumerate_perfect_codes(graph, 32,
                                             ExecutionPolicy::serial);
        });
        double tp = timed([&] {
            parallel = enumerate_perfect_codes(graph, 32,
                                               ExecutionPolicy::parallel);
        });
        if (serial.codes != parallel.codes) {
            std::printf("enumerate: serial/parallel mismatch\n");
            return 1;
        }
        std::printf("%-34s %9.3fs %9.3fs %7.2fx\n",
                    "enumerate codes Z2^5, |T|=3", ts, tp, ts / tp);
    }

    {
        GroupSpec g = parse_group_spec("Z2xZ2xZ2xZ2");
        DenseGroup d = DenseGroup::from_group(g, 64);
        Subgroup h = subgroup_generate(
            g, ElementSet({parse_element(g, "(1,1,1,1)")}));
        std::uint64_t hm = d.mask_of(h.elements);
        bool fs = false, fp = false;
        double ts = timed([&] {
            find_code_connection_set(d, hm, fs, ExecutionPolicy::serial);
        });
        double tp = timed([&] {
            find_code_connection_set(d, hm, fp, ExecutionPolicy::parallel);
        });
        if (fs != fp) {
            std::printf("connection-set search mismatch\n");
            return 1;
        }
        std::printf("%-34s %9.3fs %9.3fs %7.2fx\n",
                    "connection-set search Z2^4", ts, tp, ts / tp);
    }

    {
        SweepConfig cfg;
        cfg.max_order = 16;
        SweepStats ss, sp;
        cfg.policy = ExecutionPolicy::serial;
        double ts = timed([&] { ss = theorem_equivalence_sweep(cfg); });
        cfg.policy = ExecutionPolicy::parallel;
        double tp = timed([&] { sp = theorem_equivalence_sweep(cfg); });
        if (ss.pairs != sp.pairs || ss.discrepancies != sp.discrepancies) {
            std::printf("sweep mismatch\n");
            return 1;
        }
        std::printf("%-34s %9.3fs %9.3fs %7.2fx\n",
                    "equivalence sweep, order <= 16", ts, tp, ts / tp);
    }

    return 0;
}
