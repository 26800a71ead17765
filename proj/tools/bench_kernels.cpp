// Timing harness for the data-parallel kernels: every separation family and
// the oracle's combination filter, serial vs OpenMP, with an equality check
// between both paths.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rsabc/instance.hpp"
#include "rsabc/oracle.hpp"
#include "rsabc/parallel.hpp"
#include "rsabc/pools.hpp"
#include "rsabc/separation.hpp"

using namespace rsabc;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool same_cuts(const std::vector<Cut>& a, const std::vector<Cut>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].row == b[i].row) || a[i].violation != b[i].violation) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    GeneratorParams gp;
    gp.nodes = 12;
    gp.density = 0.35;
    gp.demand_count = 6;
    gp.volume_min = 2;
    gp.volume_max = 6;
    gp.slots = 18;
    gp.seed = 20240901;
    int repeats = 5;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](int def) { return i + 1 < argc ? std::atoi(argv[++i]) : def; };
        if (arg == "--nodes") gp.nodes = next(gp.nodes);
        else if (arg == "--demands") gp.demand_count = next(gp.demand_count);
        else if (arg == "--slots") gp.slots = next(gp.slots);
        else if (arg == "--seed") gp.seed = static_cast<std::uint64_t>(next(0));
        else if (arg == "--repeats") repeats = next(repeats);
    }

    Instance inst = generate_instance(gp);
    std::printf("instance: |V|=%d |E|=%d |D|=%zu slots=%d, threads=%d\n",
                inst.graph.node_count(), inst.graph.arc_count(), inst.demands.size(),
                inst.slots, hardware_threads());

    StructurePools pools = build_pools(inst, {});
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    FractionalPoint x(vars.count());
    for (auto& v : x) v = uni(rng);

    std::printf("%-26s %10s %10s %8s %8s\n", "family", "serial ms", "openmp ms", "speedup",
                "cuts");
    double serial_total = 0.0, parallel_total = 0.0;
    bool all_equal = true;
    for (const auto& tag : all_family_tags()) {
        SepOptions so;
        so.seed = 11;
        so.row_cap = 1 << 30;  // uncapped so both paths see every row

        so.exec = Exec::serial;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Cut> serial_cuts;
        for (int r = 0; r < repeats; ++r) serial_cuts = separate_family(tag, inst, pools, x, so);
        double t_serial = ms_since(t0) / repeats;

        so.exec = Exec::openmp;
        t0 = std::chrono::steady_clock::now();
        std::vector<Cut> parallel_cuts;
        for (int r = 0; r < repeats; ++r)
            parallel_cuts = separate_family(tag, inst, pools, x, so);
        double t_parallel = ms_since(t0) / repeats;

        bool equal = same_cuts(serial_cuts, parallel_cuts);
        all_equal = all_equal && equal;
        serial_total += t_serial;
        parallel_total += t_parallel;
        std::printf("%-26s %10.3f %10.3f %7.2fx %7zu%s\n", tag.c_str(), t_serial, t_parallel,
                    t_serial / std::max(t_parallel, 1e-6), serial_cuts.size(),
                    equal ? "" : "  MISMATCH");
    }
    std::printf("%-26s %10.3f %10.3f %7.2fx\n", "total", serial_total, parallel_total,
                serial_total / std::max(parallel_total, 1e-6));

    // Oracle combination filter on a smaller instance (the product space
    // explodes otherwise).
    GeneratorParams op = gp;
    op.nodes = 7;
    op.demand_count = 3;
    op.slots = 8;
    op.volume_min = 1;
    op.volume_max = 4;
    Instance small = generate_instance(op);
    EnumLimits lim;
    lim.max_paths_per_demand = 500;
    lim.max_total = 2000000;
    auto t0 = std::chrono::steady_clock::now();
    auto es = enumerate_canonical(small, lim, Exec::serial);
    double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto ep = enumerate_canonical(small, lim, Exec::openmp);
    double t_parallel = ms_since(t0);
    bool equal = es.solutions == ep.solutions && es.optimum == ep.optimum;
    all_equal = all_equal && equal;
    std::printf("%-26s %10.3f %10.3f %7.2fx %7zu%s\n", "oracle-enumeration", t_serial,
                t_parallel, t_serial / std::max(t_parallel, 1e-6), es.solutions.size(),
                equal ? "" : "  MISMATCH");

    std::printf("serial/openmp outputs %s\n", all_equal ? "identical" : "DIFFER");
    return all_equal ? 0 : 1;
}
