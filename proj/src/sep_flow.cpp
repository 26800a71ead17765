#include "sep_internal.hpp"

namespace rsabc::sep {

namespace {

/// oneSlotOnce: at most one outgoing arc of i carries slot s for d.
std::vector<Cand> cands_one_slot_once(const Ctx& ctx, bool from_src) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const Demand& dem = ctx.inst.demands[d];
        for (int i = 0; i < ctx.inst.graph.node_count(); ++i) {
            if (i == dem.target) continue;
            if (from_src && i != dem.source) continue;
            if (ctx.inst.graph.out_arcs(i).size() < 2) continue;
            for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, i, s});
        }
    }
    return out;
}

LinearRow build_one_slot_once(const Ctx& ctx, const Cand& c, const char* tag) {
    RowBuilder rb(tag, Sense::le, 1.0);
    for (int e : ctx.inst.graph.out_arcs(c.b)) rb.add(ctx.vars.index(c.a, e, c.c), 1.0);
    return rb.build();
}

std::vector<Cand> cands_exactly_vd(const Ctx& ctx, bool from_src) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int i = 0; i < ctx.inst.graph.node_count(); ++i) {
            if (from_src && i != ctx.inst.demands[d].source) continue;
            if (ctx.inst.graph.out_arcs(i).empty()) continue;
            out.push_back({d, i});
        }
    return out;
}

LinearRow build_exactly_vd(const Ctx& ctx, const Cand& c, const char* tag) {
    RowBuilder rb(tag, Sense::le, ctx.volume(c.a));
    for (int e : ctx.inst.graph.out_arcs(c.b))
        for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(c.a, e, s), 1.0);
    return rb.build();
}

std::vector<Cand> cands_not_branch(const Ctx& ctx, bool from_src) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int i = 0; i < ctx.inst.graph.node_count(); ++i) {
            if (from_src && i != ctx.inst.demands[d].source) continue;
            const auto& arcs = ctx.inst.graph.out_arcs(i);
            if (arcs.size() < 2) continue;  // no sibling arcs, row is never violated
            for (int e : arcs)
                for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, i, e, s});
        }
    return out;
}

LinearRow build_not_branch(const Ctx& ctx, const Cand& c, const char* tag) {
    const int v = ctx.volume(c.a);
    RowBuilder rb(tag, Sense::le, v);
    for (int e : ctx.inst.graph.out_arcs(c.b)) {
        if (e == c.c) continue;
        for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(c.a, e, s), 1.0);
    }
    rb.add(ctx.vars.index(c.a, c.c, c.d), v);
    return rb.build();
}

/// eqAmountOfAs: if slot s is used from the source, any other slot s' rides
/// on at most as many arcs as s does.
std::vector<Cand> cands_eq_amount(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int s = 1; s <= ctx.slots(); ++s)
            for (int sp = 1; sp <= ctx.slots(); ++sp)
                if (sp != s) out.push_back({d, s, sp});
    return out;
}

LinearRow build_eq_amount(const Ctx& ctx, const Cand& c) {
    const int d = c.a, s = c.b, sp = c.c;
    const int E = ctx.arcs();
    RowBuilder rb("eqAmountOfAsForEachUsedS", Sense::le, E);
    for (int e = 0; e < E; ++e) {
        rb.add(ctx.vars.index(d, e, sp), 1.0);
        rb.add(ctx.vars.index(d, e, s), -1.0);
    }
    for (int e : ctx.inst.graph.out_arcs(ctx.inst.demands[d].source))
        rb.add(ctx.vars.index(d, e, s), E);
    return rb.build();
}

std::vector<Cand> cands_eq_amount_summed(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, s});
    return out;
}

LinearRow build_eq_amount_summed(const Ctx& ctx, const Cand& c) {
    const int d = c.a, s = c.b;
    const int E = ctx.arcs();
    const int v = ctx.volume(d);
    RowBuilder rb("eqAmountSummed", Sense::le, static_cast<double>(v) * E);
    for (int e = 0; e < E; ++e) {
        for (int sp = 1; sp <= ctx.slots(); ++sp)
            if (sp != s) rb.add(ctx.vars.index(d, e, sp), 1.0);
        rb.add(ctx.vars.index(d, e, s), -static_cast<double>(v));
    }
    for (int e : ctx.inst.graph.out_arcs(ctx.inst.demands[d].source))
        rb.add(ctx.vars.index(d, e, s), static_cast<double>(v) * E);
    return rb.build();
}

/// Bound rows over precomputed structures: sum over the arc set of all slot
/// usage of d, bounded by v(d) times the structure's path capacity.
LinearRow build_arcset_bound(const Ctx& ctx, int d, const std::vector<int>& arcs, int bound,
                             const char* tag) {
    RowBuilder rb(tag, Sense::le, static_cast<double>(ctx.volume(d)) * bound);
    for (int e : arcs)
        for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(d, e, s), 1.0);
    return rb.build();
}

std::vector<Cand> cands_brooms(const Ctx& ctx, int orientation /*0 in, 1 out, 2 both*/) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int id : ctx.broom_ids) {
            const Broom& b = ctx.pools.brooms[id];
            if (!b.searched) continue;
            if (orientation == 0 && !b.incoming) continue;
            if (orientation == 1 && b.incoming) continue;
            out.push_back({d, id});
        }
    return out;
}

std::vector<Cand> cands_max_paths(const Ctx& ctx) {
    // Umbrella family: brooms of both orientations plus the cycle-derived
    // sets, all with exhaustively computed bounds.
    std::vector<Cand> out = cands_brooms(ctx, 2);
    for (int d = 0; d < ctx.demands(); ++d)
        for (int id : ctx.arcset_ids) {
            const ArcSet& set = ctx.arcset(id);
            if (!set.searched) continue;
            out.push_back({d, id, 1});
        }
    return out;
}

LinearRow build_max_paths(const Ctx& ctx, const Cand& c, const char* tag) {
    if (c.c == 0) {
        const Broom& b = ctx.pools.brooms[c.b];
        return build_arcset_bound(ctx, c.a, b.arcs, b.max_path_arcs, tag);
    }
    const ArcSet& set = ctx.arcset(c.b);
    return build_arcset_bound(ctx, c.a, set.arcs, set.max_path_arcs, tag);
}

/// inducedArcs rows: a demand uses at most |V(E')|-1 arcs of E' per slot.
std::vector<Cand> cands_induced_per_slot(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int id : ctx.arcset_ids)
            for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, id, s});
    return out;
}

LinearRow build_induced_per_slot(const Ctx& ctx, const Cand& c) {
    const ArcSet& set = ctx.arcset(c.b);
    RowBuilder rb("inducedArcsPerSlot", Sense::le, set.vertex_count - 1);
    for (int e : set.arcs) rb.add(ctx.vars.index(c.a, e, c.c), 1.0);
    return rb.build();
}

std::vector<Cand> cands_induced_summed(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int id : ctx.arcset_ids) out.push_back({d, id});
    return out;
}

LinearRow build_induced_summed(const Ctx& ctx, const Cand& c) {
    const ArcSet& set = ctx.arcset(c.b);
    return build_arcset_bound(ctx, c.a, set.arcs, set.vertex_count - 1, "inducedArcsSummed");
}

/// Antiparallel pair {ij, ji}: per-slot rows (c.c = 0) and the summed row
/// (c.c = 1).
std::vector<Cand> cands_antiparallel_pair(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int p = 0; p < static_cast<int>(ctx.pools.antiparallel.size()); ++p) {
            for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, p, 0, s});
            out.push_back({d, p, 1});
        }
    return out;
}

LinearRow build_antiparallel_pair(const Ctx& ctx, const Cand& c) {
    const auto& [e1, e2] = ctx.pools.antiparallel[c.b];
    if (c.c == 0) {
        RowBuilder rb("antiparallelPair", Sense::le, 1.0);
        rb.add(ctx.vars.index(c.a, e1, c.d), 1.0);
        rb.add(ctx.vars.index(c.a, e2, c.d), 1.0);
        return rb.build();
    }
    RowBuilder rb("antiparallelPair", Sense::le, ctx.volume(c.a));
    for (int s = 1; s <= ctx.slots(); ++s) {
        rb.add(ctx.vars.index(c.a, e1, s), 1.0);
        rb.add(ctx.vars.index(c.a, e2, s), 1.0);
    }
    return rb.build();
}

/// If d uses slot s on ij it uses nothing on ji.
std::vector<Cand> cands_antiparallel_implication(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int p = 0; p < static_cast<int>(ctx.pools.antiparallel.size()); ++p)
            for (int orient = 0; orient < 2; ++orient)
                for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, p, orient, s});
    return out;
}

LinearRow build_antiparallel_implication(const Ctx& ctx, const Cand& c) {
    const auto& [e1, e2] = ctx.pools.antiparallel[c.b];
    const int fwd = c.c == 0 ? e1 : e2;
    const int back = c.c == 0 ? e2 : e1;
    const int v = ctx.volume(c.a);
    RowBuilder rb("antiparallelImplication", Sense::le, v);
    for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(c.a, back, s), 1.0);
    rb.add(ctx.vars.index(c.a, fwd, c.d), v);
    return rb.build();
}

}  // namespace

void register_flow_families(Registry& reg) {
    reg["oneSlotOnceFromV"] = {CutKind::optimality, false,
                               [](const Ctx& c) { return cands_one_slot_once(c, false); },
                               [](const Ctx& c, const Cand& k) {
                                   return build_one_slot_once(c, k, "oneSlotOnceFromV");
                               }};
    reg["oneSlotOnceFromSrc"] = {CutKind::optimality, false,
                                 [](const Ctx& c) { return cands_one_slot_once(c, true); },
                                 [](const Ctx& c, const Cand& k) {
                                     return build_one_slot_once(c, k, "oneSlotOnceFromSrc");
                                 }};
    reg["exactlyVdFromV"] = {CutKind::optimality, false,
                             [](const Ctx& c) { return cands_exactly_vd(c, false); },
                             [](const Ctx& c, const Cand& k) {
                                 return build_exactly_vd(c, k, "exactlyVdFromV");
                             }};
    reg["exactlyVdFromSrc"] = {CutKind::optimality, false,
                               [](const Ctx& c) { return cands_exactly_vd(c, true); },
                               [](const Ctx& c, const Cand& k) {
                                   return build_exactly_vd(c, k, "exactlyVdFromSrc");
                               }};
    reg["notBranchFromV"] = {CutKind::optimality, false,
                             [](const Ctx& c) { return cands_not_branch(c, false); },
                             [](const Ctx& c, const Cand& k) {
                                 return build_not_branch(c, k, "notBranchFromV");
                             }};
    reg["notBranchFromSrc"] = {CutKind::optimality, false,
                               [](const Ctx& c) { return cands_not_branch(c, true); },
                               [](const Ctx& c, const Cand& k) {
                                   return build_not_branch(c, k, "notBranchFromSrc");
                               }};
    reg["eqAmountOfAsForEachUsedS"] = {CutKind::optimality, false, cands_eq_amount,
                                       build_eq_amount};
    reg["eqAmountSummed"] = {CutKind::optimality, false, cands_eq_amount_summed,
                             build_eq_amount_summed};
    reg["maximumSetOfPaths"] = {CutKind::optimality, false, cands_max_paths,
                                [](const Ctx& c, const Cand& k) {
                                    return build_max_paths(c, k, "maximumSetOfPaths");
                                }};
    reg["incomingDBrooms"] = {CutKind::optimality, false,
                              [](const Ctx& c) { return cands_brooms(c, 0); },
                              [](const Ctx& c, const Cand& k) {
                                  return build_max_paths(c, k, "incomingDBrooms");
                              }};
    reg["outcomingDBrooms"] = {CutKind::optimality, false,
                               [](const Ctx& c) { return cands_brooms(c, 1); },
                               [](const Ctx& c, const Cand& k) {
                                   return build_max_paths(c, k, "outcomingDBrooms");
                               }};
    reg["inducedArcsPerSlot"] = {CutKind::optimality, false, cands_induced_per_slot,
                                 build_induced_per_slot};
    reg["inducedArcsSummed"] = {CutKind::optimality, false, cands_induced_summed,
                                build_induced_summed};
    reg["antiparallelPair"] = {CutKind::optimality, false, cands_antiparallel_pair,
                               build_antiparallel_pair};
    reg["antiparallelImplication"] = {CutKind::optimality, false, cands_antiparallel_implication,
                                      build_antiparallel_implication};
}

}  // namespace rsabc::sep
