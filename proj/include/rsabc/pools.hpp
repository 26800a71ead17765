#ifndef RSABC_POOLS_HPP
#define RSABC_POOLS_HPP

#include <cstdint>
#include <vector>

#include "rsabc/instance.hpp"

namespace rsabc {

/// Result of the exhaustive vertex-disjoint path search on a small arc set:
/// the maximum total number of arcs over all sets of vertex-disjoint paths,
/// and the path count of the first maximizer in enumeration order.
struct DisjointPathsResult {
    int max_arcs = 0;
    int path_count = 0;
};

/// Exhaustive over subsets; only call with |arcs| <= ~12.
DisjointPathsResult max_disjoint_path_arcs(const Instance& inst, const std::vector<int>& arcs);

/// Double broom around an arc ij: incoming = in(i) + all arcs at j,
/// outgoing = out(i) + all arcs at j.
struct Broom {
    int base_arc = -1;
    bool incoming = true;
    std::vector<int> arcs;  // sorted, deduplicated
    int max_path_arcs = 0;  // from the exhaustive search (0 if skipped)
    int path_count = 0;
    bool searched = false;  // false when the broom was too large to search
};

/// Arc subset used by the induced-arcs rows, with its vertex count.
struct ArcSet {
    std::vector<int> arcs;  // sorted
    int vertex_count = 0;
    int max_path_arcs = 0;
    bool searched = false;
};

struct PoolParams {
    int max_cycle_length = 6;
    int max_sets_per_pool = 500;
    int max_search_arcs = 12;      // exhaustive search limit
    int mincut_attempts = 40;      // randomized max-flow runs per demand
    int mincut_cap = 20;           // kept minimal cuts per demand
    int path_check_cap = 2000;     // simple-path budget for the exactly-once check
    std::uint64_t seed = 0;
};

/// Precomputed structures shared by the separators. Built once per instance.
struct StructurePools {
    std::vector<Broom> brooms;
    std::vector<ArcSet> directed_cycles;
    std::vector<ArcSet> undirected_cycles;
    std::vector<ArcSet> induced_sets;           // arcs induced by cycle vertex sets
    std::vector<std::pair<int, int>> antiparallel;  // (ij, ji) arc ids, both orders once

    /// Per demand: minimal source-target cuts (each simple path meets the cut
    /// in exactly one arc). Entry 0 is delta+(source), entry 1 delta-(target)
    /// when nonempty; harvested cuts follow.
    std::vector<std::vector<std::vector<int>>> min_cuts;
};

StructurePools build_pools(const Instance& inst, const PoolParams& params = {});

/// All simple directed from->to paths as arc-id lists, in DFS order with
/// arcs explored by canonical index. Stops after cap paths and sets
/// *exceeded when the cap was hit.
std::vector<std::vector<int>> enumerate_simple_paths(const Digraph& g, int from, int to, int cap,
                                                     bool* exceeded = nullptr);

}  // namespace rsabc

#endif
