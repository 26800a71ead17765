#ifndef RSABC_TEST_SUPPORT_HPP
#define RSABC_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "rsabc/instance.hpp"
#include "rsabc/model.hpp"

namespace testsup {

inline rsabc::Instance inst_a() {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(3, {{0, 1}, {1, 2}, {0, 2}});
    i.demands = {{0, 2, 2}};
    i.slots = 3;
    i.name = "INST-A";
    return i;
}

inline rsabc::Instance inst_b() {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(2, {{0, 1}});
    i.demands = {{0, 1, 2}, {0, 1, 1}};
    i.slots = 3;
    i.name = "INST-B";
    return i;
}

inline rsabc::Instance inst_c() {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(2, {{0, 1}});
    i.demands = {{0, 1, 2}, {0, 1, 1}};
    i.slots = 2;
    i.name = "INST-C";
    return i;
}

/// Two parallel two-hop routes 0->1->3 and 0->2->3.
inline rsabc::Instance diamond(std::vector<rsabc::Demand> demands, int slots) {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    i.demands = std::move(demands);
    i.slots = slots;
    i.name = "diamond";
    return i;
}

/// One arc 0->1 carrying all demands.
inline rsabc::Instance single_arc(std::vector<int> volumes, int slots) {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(2, {{0, 1}});
    for (int v : volumes) i.demands.push_back({0, 1, v});
    i.slots = slots;
    i.name = "single-arc";
    return i;
}

/// Antiparallel pair plus a through-route: 0<->1 and 0->1->2.
inline rsabc::Instance two_way(int slots) {
    rsabc::Instance i;
    i.graph = rsabc::Digraph(3, {{0, 1}, {1, 0}, {1, 2}});
    i.demands = {{0, 2, 2}};
    i.slots = slots;
    i.name = "two-way";
    return i;
}

inline std::string fixture(const std::string& name) {
    return std::string(RSABC_FIXTURE_DIR) + "/" + name;
}

inline rsabc::FractionalPoint random_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    rsabc::FractionalPoint x(n);
    for (auto& v : x) v = uni(rng);
    return x;
}

}  // namespace testsup

#endif
