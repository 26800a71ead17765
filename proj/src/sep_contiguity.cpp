#include "rsabc/symmetry.hpp"
#include "sep_internal.hpp"

namespace rsabc::sep {

namespace {

/// contiguityIneqs: slots grouped by residue mod v(d); the class of i up to
/// i dominates the class of i-1 up to i-1. Trivial for v(d)=1.
std::vector<Cand> cands_contiguity_ineqs(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        if (ctx.volume(d) < 2) continue;
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int i = 1; i <= ctx.slots(); ++i) out.push_back({d, e, i});
    }
    return out;
}

LinearRow build_contiguity_ineq(const Ctx& ctx, const Cand& c, const char* tag) {
    const int d = c.a, e = c.b, i = c.c;
    const int v = ctx.volume(d);
    RowBuilder rb(tag, Sense::ge, 0.0);
    for (int s = 1; s <= i; ++s)
        if (s % v == i % v) rb.add(ctx.vars.index(d, e, s), 1.0);
    for (int s = 1; s <= i - 1; ++s)
        if ((s + 1) % v == i % v) rb.add(ctx.vars.index(d, e, s), -1.0);
    return rb.build();
}

std::vector<Cand> cands_contiguity_eqs(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        if (ctx.volume(d) < 2) continue;  // the i=1 row is sum u = sum u
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int i = 1; i <= ctx.volume(d); ++i) out.push_back({d, e, i});
    }
    return out;
}

LinearRow build_contiguity_eq(const Ctx& ctx, const Cand& c) {
    const int d = c.a, e = c.b, i = c.c;
    const int v = ctx.volume(d);
    RowBuilder rb("contiguityEqs", Sense::eq, 0.0);
    for (int s = 1; s <= ctx.slots(); ++s) {
        if (s % v == i % v) rb.add(ctx.vars.index(d, e, s), 1.0);
        if ((s + 1) % v == i % v) rb.add(ctx.vars.index(d, e, s), -1.0);
    }
    return rb.build();
}

/// ppalSlots: across a minimal source-target cut, exactly one slot of each
/// residue class is used. c.c selects the cut: >=0 pool id, -1 source star,
/// -2 target star.
LinearRow build_ppal_slots(const Ctx& ctx, const Cand& c, const char* tag) {
    const int d = c.a, i = c.b;
    const int v = ctx.volume(d);
    const std::vector<int>* cut = nullptr;
    std::vector<int> star;
    if (c.c == -1) {
        star = ctx.inst.graph.out_arcs(ctx.inst.demands[d].source);
        cut = &star;
    } else if (c.c == -2) {
        star = ctx.inst.graph.in_arcs(ctx.inst.demands[d].target);
        cut = &star;
    } else {
        cut = &ctx.pools.min_cuts[d][c.c];
    }
    RowBuilder rb(tag, Sense::eq, 1.0);
    for (int e : *cut)
        for (int s = 1; s <= ctx.slots(); ++s)
            if (s % v == i % v) rb.add(ctx.vars.index(d, e, s), 1.0);
    return rb.build();
}

std::vector<Cand> cands_ppal_pool(const Ctx& ctx, bool first_residue_only) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const int imax = first_residue_only ? 1 : ctx.volume(d);
        for (int cut = 0; cut < static_cast<int>(ctx.pools.min_cuts[d].size()); ++cut)
            for (int i = 1; i <= imax; ++i) out.push_back({d, i, cut});
    }
    return out;
}

std::vector<Cand> cands_ppal_star(const Ctx& ctx, int which /* -1 src, -2 dst */) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const Demand& dem = ctx.inst.demands[d];
        bool empty = which == -1 ? ctx.inst.graph.out_arcs(dem.source).empty()
                                 : ctx.inst.graph.in_arcs(dem.target).empty();
        if (empty) continue;
        for (int i = 1; i <= ctx.volume(d); ++i) out.push_back({d, i, which});
    }
    return out;
}

/// ppalSlotsCentral: when 2v(d) > sbar every lightpath covers the central
/// slots, so one source arc must carry each of them.
std::vector<Cand> cands_ppal_central(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const int v = ctx.volume(d);
        if (2 * v <= ctx.slots()) continue;
        if (ctx.inst.graph.out_arcs(ctx.inst.demands[d].source).empty()) continue;
        for (int s = ctx.slots() - v + 1; s <= v; ++s) out.push_back({d, s});
    }
    return out;
}

LinearRow build_ppal_central(const Ctx& ctx, const Cand& c) {
    RowBuilder rb("ppalSlotsCentral", Sense::eq, 1.0);
    for (int e : ctx.inst.graph.out_arcs(ctx.inst.demands[c.a].source))
        rb.add(ctx.vars.index(c.a, e, c.b), 1.0);
    return rb.build();
}

/// farSlotsOff: slots at distance >= v(d) from a used slot are off.
std::vector<Cand> cands_far_slots(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const int v = ctx.volume(d);
        for (int s = 1; s <= ctx.slots(); ++s) {
            int far = std::max(0, s - v) + std::max(0, ctx.slots() - (s + v) + 1);
            if (far == 0) continue;
            for (int e = 0; e < ctx.arcs(); ++e) out.push_back({d, e, s});
        }
    }
    return out;
}

LinearRow build_far_slots(const Ctx& ctx, const Cand& c) {
    const int d = c.a, e = c.b, s = c.c;
    const int v = ctx.volume(d);
    int far = std::max(0, s - v) + std::max(0, ctx.slots() - (s + v) + 1);
    const int M = std::min(far, v);
    RowBuilder rb("farSlotsOff", Sense::le, M);
    for (int sp = 1; sp <= s - v; ++sp) rb.add(ctx.vars.index(d, e, sp), 1.0);
    for (int sp = s + v; sp <= ctx.slots(); ++sp) rb.add(ctx.vars.index(d, e, sp), 1.0);
    rb.add(ctx.vars.index(d, e, s), M);
    return rb.build();
}

/// Model contiguity row for one (d,e,s), as in the base formulation.
LinearRow model_contiguity_row(const Ctx& ctx, int d, int e, int s, const char* tag) {
    const int v = ctx.volume(d);
    RowBuilder rb(tag, Sense::le, 0.0);
    rb.add(ctx.vars.index(d, e, s), v);
    if (s + 1 <= ctx.slots()) rb.add(ctx.vars.index(d, e, s + 1), -static_cast<double>(v));
    for (int sp = std::max(1, s - v + 1); sp <= s; ++sp) rb.add(ctx.vars.index(d, e, sp), -1.0);
    return rb.build();
}

std::vector<Cand> cands_all_des(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int s = 1; s <= ctx.slots(); ++s) out.push_back({d, e, s});
    return out;
}

}  // namespace

void register_contiguity_families(Registry& reg) {
    reg["contiguityIneqs"] = {CutKind::valid, false, cands_contiguity_ineqs,
                              [](const Ctx& c, const Cand& k) {
                                  return build_contiguity_ineq(c, k, "contiguityIneqs");
                              }};
    reg["symmContiguityIneqs"] = {CutKind::valid, false, cands_contiguity_ineqs,
                                  [](const Ctx& c, const Cand& k) {
                                      LinearRow row =
                                          build_contiguity_ineq(c, k, "symmContiguityIneqs");
                                      return mirror_slots(row, c.vars);
                                  }};
    reg["contiguityEqs"] = {CutKind::equation, false, cands_contiguity_eqs, build_contiguity_eq};
    reg["ppalSlots"] = {CutKind::optimality, false,
                        [](const Ctx& c) { return cands_ppal_pool(c, false); },
                        [](const Ctx& c, const Cand& k) {
                            return build_ppal_slots(c, k, "ppalSlots");
                        }};
    reg["ppalSlotsFromSrc"] = {CutKind::optimality, false,
                               [](const Ctx& c) { return cands_ppal_star(c, -1); },
                               [](const Ctx& c, const Cand& k) {
                                   return build_ppal_slots(c, k, "ppalSlotsFromSrc");
                               }};
    reg["ppalSlotsToDst"] = {CutKind::optimality, false,
                             [](const Ctx& c) { return cands_ppal_star(c, -2); },
                             [](const Ctx& c, const Cand& k) {
                                 return build_ppal_slots(c, k, "ppalSlotsToDst");
                             }};
    reg["ppalSlotsFirstResidue"] = {CutKind::optimality, false,
                                    [](const Ctx& c) { return cands_ppal_pool(c, true); },
                                    [](const Ctx& c, const Cand& k) {
                                        return build_ppal_slots(c, k, "ppalSlotsFirstResidue");
                                    }};
    reg["ppalSlotsCentral"] = {CutKind::optimality, false, cands_ppal_central,
                               build_ppal_central};
    reg["farSlotsOff"] = {CutKind::optimality, false, cands_far_slots, build_far_slots};
    reg["symmetricalBFcontiguity"] = {CutKind::valid, false, cands_all_des,
                                      [](const Ctx& c, const Cand& k) {
                                          LinearRow row = model_contiguity_row(
                                              c, k.a, k.b, k.c, "symmetricalBFcontiguity");
                                          return mirror_slots(row, c.vars);
                                      }};
}

}  // namespace rsabc::sep
