#include "rsabc/pools.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace rsabc {

std::vector<std::vector<int>> enumerate_simple_paths(const Digraph& g, int from, int to, int cap,
                                                     bool* exceeded) {
    std::vector<std::vector<int>> paths;
    if (exceeded) *exceeded = false;
    std::vector<char> on_path(g.node_count(), 0);
    std::vector<int> stack;
    bool over = false;

    auto dfs = [&](auto&& self, int v) -> void {
        if (over) return;
        if (v == to) {
            if (static_cast<int>(paths.size()) >= cap) {
                over = true;
                return;
            }
            paths.push_back(stack);
            return;
        }
        on_path[v] = 1;
        for (int e : g.out_arcs(v)) {
            int h = g.arc(e).head;
            if (on_path[h] || (h == from)) continue;
            stack.push_back(e);
            self(self, h);
            stack.pop_back();
            if (over) break;
        }
        on_path[v] = 0;
    };
    dfs(dfs, from);
    if (exceeded) *exceeded = over;
    return paths;
}

DisjointPathsResult max_disjoint_path_arcs(const Instance& inst, const std::vector<int>& arcs) {
    DisjointPathsResult best;
    const int n = static_cast<int>(arcs.size());
    const Digraph& g = inst.graph;

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int arc_count = __builtin_popcount(mask);
        if (arc_count <= best.max_arcs) continue;

        // in/out degree at most one per node makes the union a disjoint
        // union of simple paths and cycles; reject cycles.
        bool ok = true;
        std::vector<int> chosen;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) chosen.push_back(arcs[k]);

        std::vector<int> nodes;
        for (int e : chosen) {
            nodes.push_back(g.arc(e).tail);
            nodes.push_back(g.arc(e).head);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        auto node_pos = [&](int v) {
            return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), v) -
                                    nodes.begin());
        };
        std::vector<int> indeg(nodes.size(), 0), outdeg(nodes.size(), 0);
        std::vector<int> succ(nodes.size(), -1);
        for (int e : chosen) {
            int t = node_pos(g.arc(e).tail), h = node_pos(g.arc(e).head);
            if (++outdeg[t] > 1 || ++indeg[h] > 1) {
                ok = false;
                break;
            }
            succ[t] = h;
        }
        if (!ok) continue;
        // Cycle check: follow successor chains from every source node.
        std::vector<char> seen(nodes.size(), 0);
        for (std::size_t v = 0; v < nodes.size() && ok; ++v) {
            if (indeg[v] != 0) continue;
            int cur = static_cast<int>(v);
            while (cur != -1 && !seen[cur]) {
                seen[cur] = 1;
                cur = succ[cur];
            }
        }
        for (std::size_t v = 0; v < nodes.size(); ++v)
            if (!seen[v]) ok = false;  // unreached node lies on a cycle
        if (!ok) continue;

        best.max_arcs = arc_count;
        best.path_count = static_cast<int>(nodes.size()) - arc_count;
    }
    return best;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int count_vertices(const Digraph& g, const std::vector<int>& arcs) {
    std::vector<int> nodes;
    for (int e : arcs) {
        nodes.push_back(g.arc(e).tail);
        nodes.push_back(g.arc(e).head);
    }
    nodes = sorted_unique(std::move(nodes));
    return static_cast<int>(nodes.size());
}

void search_if_small(const Instance& inst, const PoolParams& p, ArcSet& set) {
    if (static_cast<int>(set.arcs.size()) <= p.max_search_arcs) {
        auto r = max_disjoint_path_arcs(inst, set.arcs);
        set.max_path_arcs = r.max_arcs;
        set.searched = true;
    }
}

/// Directed simple cycles with minimum node = start, up to max_len arcs.
void directed_cycles_from(const Digraph& g, int start, int max_len,
                          std::vector<std::vector<int>>& out, int cap) {
    std::vector<int> arc_stack;
    std::vector<char> on_path(g.node_count(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(out.size()) >= cap) return;
        for (int e : g.out_arcs(v)) {
            int h = g.arc(e).head;
            if (h == start) {
                if (arc_stack.size() >= 1) {  // cycle length >= 2
                    auto cyc = arc_stack;
                    cyc.push_back(e);
                    out.push_back(std::move(cyc));
                    if (static_cast<int>(out.size()) >= cap) return;
                }
                continue;
            }
            if (h < start || on_path[h]) continue;
            if (static_cast<int>(arc_stack.size()) + 2 > max_len) continue;
            on_path[h] = 1;
            arc_stack.push_back(e);
            self(self, h);
            arc_stack.pop_back();
            on_path[h] = 0;
        }
    };
    on_path[start] = 1;
    dfs(dfs, start);
}

/// Undirected simple cycles (>= 3 nodes) with canonical orientation, as
/// vertex sequences; arc realization happens at the caller.
void undirected_cycles_from(const Digraph& g, const std::vector<std::vector<int>>& nbr, int start,
                            int max_len, std::vector<std::vector<int>>& out, int cap) {
    std::vector<int> path{start};
    std::vector<char> on_path(g.node_count(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(out.size()) >= cap) return;
        for (int w : nbr[v]) {
            if (w == start) {
                // close only with >= 3 nodes and canonical direction
                if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                if (static_cast<int>(out.size()) >= cap) return;
                continue;
            }
            if (w < start || on_path[w]) continue;
            if (static_cast<int>(path.size()) + 1 > max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    on_path[start] = 1;
    dfs(dfs, start);
}

/// Edmonds-Karp max flow with the given capacities; returns the source-side
/// cut arcs (original arc ids S -> V\S).
std::vector<int> perturbed_min_cut(const Digraph& g, int s, int t,
                                   const std::vector<double>& cap) {
    const int m = g.arc_count();
    std::vector<double> flow(m, 0.0);   // forward flow on arc e
    for (;;) {
        // BFS in the residual graph.
        std::vector<int> pred_arc(g.node_count(), -1), pred_dir(g.node_count(), 0);
        std::vector<char> vis(g.node_count(), 0);
        std::deque<int> q{s};
        vis[s] = 1;
        while (!q.empty() && !vis[t]) {
            int v = q.front();
            q.pop_front();
            for (int e : g.out_arcs(v)) {
                int h = g.arc(e).head;
                if (!vis[h] && cap[e] - flow[e] > 1e-12) {
                    vis[h] = 1;
                    pred_arc[h] = e;
                    pred_dir[h] = +1;
                    q.push_back(h);
                }
            }
            for (int e : g.in_arcs(v)) {
                int tl = g.arc(e).tail;
                if (!vis[tl] && flow[e] > 1e-12) {
                    vis[tl] = 1;
                    pred_arc[tl] = e;
                    pred_dir[tl] = -1;
                    q.push_back(tl);
                }
            }
        }
        if (!vis[t]) {
            std::vector<int> cut;
            for (int e = 0; e < m; ++e)
                if (vis[g.arc(e).tail] && !vis[g.arc(e).head]) cut.push_back(e);
            return cut;
        }
        double push = 1e18;
        for (int v = t; v != s;) {
            int e = pred_arc[v];
            if (pred_dir[v] > 0) {
                push = std::min(push, cap[e] - flow[e]);
                v = g.arc(e).tail;
            } else {
                push = std::min(push, flow[e]);
                v = g.arc(e).head;
            }
        }
        for (int v = t; v != s;) {
            int e = pred_arc[v];
            if (pred_dir[v] > 0) {
                flow[e] += push;
                v = g.arc(e).tail;
            } else {
                flow[e] -= push;
                v = g.arc(e).head;
            }
        }
    }
}

bool crosses_every_path_once(const std::vector<std::vector<int>>& paths,
                             const std::vector<int>& cut) {
    for (const auto& p : paths) {
        int hits = 0;
        for (int e : p)
            if (std::binary_search(cut.begin(), cut.end(), e)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace

StructurePools build_pools(const Instance& inst, const PoolParams& p) {
    StructurePools pools;
    const Digraph& g = inst.graph;
    std::mt19937_64 rng(p.seed);

    // Double brooms.
    for (int e = 0; e < g.arc_count(); ++e) {
        int i = g.arc(e).tail, j = g.arc(e).head;
        for (bool incoming : {true, false}) {
            Broom b;
            b.base_arc = e;
            b.incoming = incoming;
            std::vector<int> arcs = incoming ? g.in_arcs(i) : g.out_arcs(i);
            arcs.insert(arcs.end(), g.in_arcs(j).begin(), g.in_arcs(j).end());
            arcs.insert(arcs.end(), g.out_arcs(j).begin(), g.out_arcs(j).end());
            arcs.push_back(e);
            b.arcs = sorted_unique(std::move(arcs));
            if (static_cast<int>(b.arcs.size()) <= p.max_search_arcs) {
                auto r = max_disjoint_path_arcs(inst, b.arcs);
                b.max_path_arcs = r.max_arcs;
                b.path_count = r.path_count;
                b.searched = true;
            }
            pools.brooms.push_back(std::move(b));
            if (static_cast<int>(pools.brooms.size()) >= 2 * p.max_sets_per_pool) break;
        }
    }

    // Directed cycles.
    {
        std::vector<std::vector<int>> cycles;
        for (int v = 0; v < g.node_count(); ++v)
            directed_cycles_from(g, v, p.max_cycle_length, cycles, p.max_sets_per_pool);
        for (auto& cyc : cycles) {
            ArcSet set;
            set.arcs = sorted_unique(cyc);
            set.vertex_count = count_vertices(g, set.arcs);
            search_if_small(inst, p, set);
            pools.directed_cycles.push_back(std::move(set));
        }
    }

    // Undirected cycles, realized as every existing arc along the cycle.
    {
        std::vector<std::vector<int>> nbr(g.node_count());
        for (int e = 0; e < g.arc_count(); ++e) {
            nbr[g.arc(e).tail].push_back(g.arc(e).head);
            nbr[g.arc(e).head].push_back(g.arc(e).tail);
        }
        for (auto& v : nbr) v = sorted_unique(std::move(v));

        std::vector<std::vector<int>> cycles;
        for (int v = 0; v < g.node_count(); ++v)
            undirected_cycles_from(g, nbr, v, p.max_cycle_length, cycles, p.max_sets_per_pool);

        std::set<std::vector<int>> seen;
        for (const auto& nodes : cycles) {
            std::vector<int> arcs;
            const int k = static_cast<int>(nodes.size());
            for (int a = 0; a < k; ++a) {
                int u = nodes[a], w = nodes[(a + 1) % k];
                int e1 = g.find_arc(u, w), e2 = g.find_arc(w, u);
                if (e1 >= 0) arcs.push_back(e1);
                if (e2 >= 0) arcs.push_back(e2);
            }
            arcs = sorted_unique(std::move(arcs));
            if (arcs.empty() || !seen.insert(arcs).second) continue;
            ArcSet set;
            set.arcs = std::move(arcs);
            set.vertex_count = count_vertices(g, set.arcs);
            search_if_small(inst, p, set);
            pools.undirected_cycles.push_back(std::move(set));
        }
    }

    // Arcs induced by cycle vertex sets.
    {
        std::set<std::vector<int>> seen_nodes;
        std::set<std::vector<int>> seen_arcs;
        auto add_induced = [&](const std::vector<int>& arcs_of_cycle) {
            std::vector<int> nodes;
            for (int e : arcs_of_cycle) {
                nodes.push_back(g.arc(e).tail);
                nodes.push_back(g.arc(e).head);
            }
            nodes = sorted_unique(std::move(nodes));
            if (!seen_nodes.insert(nodes).second) return;
            std::vector<int> arcs;
            for (int e = 0; e < g.arc_count(); ++e)
                if (std::binary_search(nodes.begin(), nodes.end(), g.arc(e).tail) &&
                    std::binary_search(nodes.begin(), nodes.end(), g.arc(e).head))
                    arcs.push_back(e);
            if (arcs.empty() || !seen_arcs.insert(arcs).second) return;
            ArcSet set;
            set.arcs = std::move(arcs);
            set.vertex_count = count_vertices(g, set.arcs);
            search_if_small(inst, p, set);
            pools.induced_sets.push_back(std::move(set));
        };
        for (const auto& c : pools.directed_cycles) {
            if (static_cast<int>(pools.induced_sets.size()) >= p.max_sets_per_pool) break;
            add_induced(c.arcs);
        }
        for (const auto& c : pools.undirected_cycles) {
            if (static_cast<int>(pools.induced_sets.size()) >= p.max_sets_per_pool) break;
            add_induced(c.arcs);
        }
    }

    // Antiparallel pairs.
    for (int e = 0; e < g.arc_count(); ++e) {
        int i = g.arc(e).tail, j = g.arc(e).head;
        if (i < j) {
            int back = g.find_arc(j, i);
            if (back >= 0) pools.antiparallel.push_back({e, back});
        }
    }

    // Minimal source-target cuts per demand.
    pools.min_cuts.resize(inst.demands.size());
    std::uniform_real_distribution<double> jitter(0.0, 0.01);
    for (std::size_t d = 0; d < inst.demands.size(); ++d) {
        const Demand& dem = inst.demands[d];
        auto& cuts = pools.min_cuts[d];
        std::set<std::vector<int>> seen;
        auto push = [&](std::vector<int> cut) {
            if (cut.empty()) return;
            std::sort(cut.begin(), cut.end());
            if (seen.insert(cut).second) cuts.push_back(std::move(cut));
        };
        push(g.out_arcs(dem.source));  // every simple path leaves the source once
        push(g.in_arcs(dem.target));   // and enters the target once

        bool exceeded = false;
        auto paths = enumerate_simple_paths(g, dem.source, dem.target, p.path_check_cap,
                                            &exceeded);
        if (exceeded || paths.empty()) continue;  // cannot certify harvested cuts

        for (int attempt = 0; attempt < p.mincut_attempts; ++attempt) {
            if (static_cast<int>(cuts.size()) >= p.mincut_cap) break;
            std::vector<double> cap(g.arc_count());
            for (double& c : cap) c = 1.0 + jitter(rng);
            std::vector<int> cut = perturbed_min_cut(g, dem.source, dem.target, cap);
            std::sort(cut.begin(), cut.end());
            if (cut.empty() || !crosses_every_path_once(paths, cut)) continue;
            push(std::move(cut));
        }
    }
    return pools;
}

}  // namespace rsabc
