#ifndef RSABC_SEP_INTERNAL_HPP
#define RSABC_SEP_INTERNAL_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rsabc/cut.hpp"
#include "rsabc/pools.hpp"
#include "rsabc/separation.hpp"

namespace rsabc::sep {

/// Generic candidate descriptor; meaning of the fields is family-specific.
struct Cand {
    int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

/// Per-call context: the sampled structure ids plus shared instance data.
struct Ctx {
    const Instance& inst;
    const StructurePools& pools;
    VarSpace vars;
    const SepOptions& opts;
    bool full = false;  // full enumeration (no sampling)

    std::vector<int> broom_ids;    // into pools.brooms
    std::vector<int> arcset_ids;   // union pool, see arcset()
    std::vector<std::pair<int, int>> demand_pairs;    // minimal two-demand sets
    std::vector<std::array<int, 3>> demand_triples;   // minimal three-demand sets

    int demands() const { return vars.demands; }
    int arcs() const { return vars.arcs; }
    int slots() const { return vars.slots; }
    int volume(int d) const { return inst.demands[d].volume; }

    /// Union pool order: directed cycles, undirected cycles, induced sets.
    const ArcSet& arcset(int id) const;
    int arcset_count() const;
};

struct FamilyDef {
    CutKind kind = CutKind::valid;
    bool capped = false;  // apply SepOptions::row_cap, most-violated kept
    std::function<std::vector<Cand>(const Ctx&)> candidates;
    std::function<LinearRow(const Ctx&, const Cand&)> build;
};

using Registry = std::map<std::string, FamilyDef>;

void register_flow_families(Registry& reg);
void register_contiguity_families(Registry& reg);
void register_nonoverlap_families(Registry& reg);

/// Minimal demand subsets that do not fit in one arc (pairs, and triples on
/// request): total volume exceeds sbar, every proper subset fits.
std::vector<std::pair<int, int>> minimal_demand_pairs(const Instance& inst);
std::vector<std::array<int, 3>> minimal_demand_triples(const Instance& inst);

}  // namespace rsabc::sep

#endif
