#include "sep_internal.hpp"

namespace rsabc::sep {

namespace {

/// nonOverBySum with the quadratic restriction s3 = s2 + 1.
std::vector<Cand> cands_non_over(const Ctx& ctx) {
    std::vector<Cand> out;
    if (ctx.demands() < 2) return out;
    for (int d = 0; d < ctx.demands(); ++d)
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int s1 = 1; s1 <= ctx.slots() - 2; ++s1)
                for (int s2 = s1 + 1; s2 <= ctx.slots() - 1; ++s2) out.push_back({d, e, s1, s2});
    return out;
}

LinearRow build_non_over(const Ctx& ctx, const Cand& c) {
    const int d = c.a, e = c.b, s1 = c.c, s2 = c.d, s3 = c.d + 1;
    RowBuilder rb("nonOverBySum", Sense::le, 2.0);
    rb.add(ctx.vars.index(d, e, s1), 1.0);
    for (int d2 = 0; d2 < ctx.demands(); ++d2)
        if (d2 != d) rb.add(ctx.vars.index(d2, e, s2), 1.0);
    rb.add(ctx.vars.index(d, e, s3), 1.0);
    return rb.build();
}

/// Members of the minimal demand sets, flattened: c.a = set id (pairs first,
/// then triples), c.b = member position, c.c = arc.
std::vector<Cand> cands_k_demands(const Ctx& ctx) {
    std::vector<Cand> out;
    const int npairs = static_cast<int>(ctx.demand_pairs.size());
    for (int p = 0; p < npairs; ++p)
        for (int member = 0; member < 2; ++member)
            for (int e = 0; e < ctx.arcs(); ++e) out.push_back({p, member, e});
    for (int t = 0; t < static_cast<int>(ctx.demand_triples.size()); ++t)
        for (int member = 0; member < 3; ++member)
            for (int e = 0; e < ctx.arcs(); ++e) out.push_back({npairs + t, member, e});
    return out;
}

std::vector<int> kset_members(const Ctx& ctx, int set_id) {
    const int npairs = static_cast<int>(ctx.demand_pairs.size());
    if (set_id < npairs)
        return {ctx.demand_pairs[set_id].first, ctx.demand_pairs[set_id].second};
    const auto& t = ctx.demand_triples[set_id - npairs];
    return {t[0], t[1], t[2]};
}

LinearRow build_k_demands(const Ctx& ctx, const Cand& c) {
    const auto members = kset_members(ctx, c.a);
    const int d = members[c.b], e = c.c;
    const int v = ctx.volume(d);
    double rhs = 0.0;
    RowBuilder rb("kDemandsNotExceed", Sense::le, 0.0);
    for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(d, e, s), 1.0);
    for (int d2 : members) {
        if (d2 == d) continue;
        rhs += static_cast<double>(v) * ctx.volume(d2);
        for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(d2, e, s), v);
    }
    rb.set_rhs(rhs);
    return rb.build();
}

std::vector<Cand> cands_k_demands_sum(const Ctx& ctx) {
    std::vector<Cand> out;
    const int nsets =
        static_cast<int>(ctx.demand_pairs.size() + ctx.demand_triples.size());
    for (int set_id = 0; set_id < nsets; ++set_id)
        for (int e = 0; e < ctx.arcs(); ++e) out.push_back({set_id, e});
    return out;
}

LinearRow build_k_demands_sum(const Ctx& ctx, const Cand& c) {
    const auto members = kset_members(ctx, c.a);
    int total = 0, vmin = ctx.slots() + 1;
    for (int d : members) {
        total += ctx.volume(d);
        vmin = std::min(vmin, ctx.volume(d));
    }
    RowBuilder rb("kDemandsBySum", Sense::le, total - vmin);
    for (int d : members)
        for (int s = 1; s <= ctx.slots(); ++s) rb.add(ctx.vars.index(d, c.b, s), 1.0);
    return rb.build();
}

/// posFitLow2DBySlots: d2 on a low slot s pushes d1 above max(s, v(d2)).
std::vector<Cand> cands_pos_fit_slots(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d1 = 0; d1 < ctx.demands(); ++d1)
        for (int d2 = 0; d2 < ctx.demands(); ++d2) {
            if (d1 == d2) continue;
            for (int e = 0; e < ctx.arcs(); ++e)
                for (int s = 1; s <= ctx.volume(d1); ++s) {
                    const int top = std::max(s, ctx.volume(d2));
                    for (int spp = 1; spp <= top; ++spp) out.push_back({d1, d2, e, s, spp});
                }
        }
    return out;
}

LinearRow build_pos_fit_slots(const Ctx& ctx, const Cand& c) {
    RowBuilder rb("posFitLow2DBySlots", Sense::le, 1.0);
    rb.add(ctx.vars.index(c.a, c.c, c.e), 1.0);
    rb.add(ctx.vars.index(c.b, c.c, c.d), 1.0);
    return rb.build();
}

std::vector<Cand> cands_pos_fit_agg(const Ctx& ctx) {
    std::vector<Cand> out;
    for (int d1 = 0; d1 < ctx.demands(); ++d1)
        for (int d2 = 0; d2 < ctx.demands(); ++d2) {
            if (d1 == d2) continue;
            for (int e = 0; e < ctx.arcs(); ++e)
                for (int s = 1; s <= ctx.volume(d1); ++s) out.push_back({d1, d2, e, s});
        }
    return out;
}

LinearRow build_pos_fit_agg(const Ctx& ctx, const Cand& c) {
    const int d1 = c.a, d2 = c.b, e = c.c, s = c.d;
    const int s1 = std::max(s, ctx.volume(d2));
    const int s2 = std::min(ctx.volume(d1), s1);
    RowBuilder rb("posFitLow2DAggregated", Sense::le, s2);
    for (int sp = 1; sp <= s1; ++sp) rb.add(ctx.vars.index(d1, e, sp), 1.0);
    rb.add(ctx.vars.index(d2, e, s), s2);
    return rb.build();
}

std::vector<Cand> cands_pos_fit_summed(const Ctx& ctx) {
    std::vector<Cand> out;
    if (ctx.demands() < 2) return out;
    for (int d1 = 0; d1 < ctx.demands(); ++d1)
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int s = 1; s <= ctx.volume(d1); ++s) out.push_back({d1, e, s});
    return out;
}

LinearRow build_pos_fit_summed(const Ctx& ctx, const Cand& c) {
    const int d1 = c.a, e = c.b, s = c.c;
    int vmin = ctx.slots() + 1;
    for (int d2 = 0; d2 < ctx.demands(); ++d2)
        if (d2 != d1) vmin = std::min(vmin, ctx.volume(d2));
    const int s1 = std::max(s, vmin);
    const int s2 = std::min(ctx.volume(d1), s1);
    RowBuilder rb("posFitLow2DSummed", Sense::le, s2);
    for (int sp = 1; sp <= s1; ++sp) rb.add(ctx.vars.index(d1, e, sp), 1.0);
    for (int d2 = 0; d2 < ctx.demands(); ++d2)
        if (d2 != d1) rb.add(ctx.vars.index(d2, e, s), s2);
    return rb.build();
}

/// posFit3DBySlots: three demands on s1 < s2 < s3 with s3-s1 <= v(d2) would
/// squeeze d2's block into a gap shorter than its volume. c.f = 1 is the
/// variation with the outer demands summed over D \ {d2}.
std::vector<Cand> cands_pos_fit_3d(const Ctx& ctx) {
    std::vector<Cand> out;
    const int D = ctx.demands();
    if (D < 2) return out;
    const int sbar = ctx.slots();
    if (D >= 3) {
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int d1 = 0; d1 < D; ++d1)
                for (int d2 = 0; d2 < D; ++d2)
                    for (int d3 = 0; d3 < D; ++d3) {
                        if (d1 == d2 || d1 == d3 || d2 == d3) continue;
                        const int triple = (d1 * D + d2) * D + d3;
                        for (int s1 = ctx.volume(d1); s1 <= sbar; ++s1)
                            for (int s3 = s1 + 2;
                                 s3 <= std::min(s1 + ctx.volume(d2), sbar - ctx.volume(d3) + 1);
                                 ++s3)
                                for (int s2 = s1 + 1; s2 < s3; ++s2)
                                    out.push_back({e, triple, s1, s2, s3, 0});
                    }
    }
    // Summed variation, one per middle demand.
    for (int e = 0; e < ctx.arcs(); ++e)
        for (int d2 = 0; d2 < D; ++d2) {
            int vmin = sbar + 1;
            for (int d = 0; d < D; ++d)
                if (d != d2) vmin = std::min(vmin, ctx.volume(d));
            for (int s1 = vmin; s1 <= sbar; ++s1)
                for (int s3 = s1 + 2; s3 <= std::min(s1 + ctx.volume(d2), sbar - vmin + 1); ++s3)
                    for (int s2 = s1 + 1; s2 < s3; ++s2)
                        out.push_back({e, d2, s1, s2, s3, 1});
        }
    return out;
}

LinearRow build_pos_fit_3d(const Ctx& ctx, const Cand& c) {
    const int D = ctx.demands();
    RowBuilder rb("posFit3DBySlots", Sense::le, 2.0);
    if (c.f == 0) {
        const int d3 = c.b % D, d2 = (c.b / D) % D, d1 = c.b / (D * D);
        rb.add(ctx.vars.index(d1, c.a, c.c), 1.0);
        rb.add(ctx.vars.index(d2, c.a, c.d), 1.0);
        rb.add(ctx.vars.index(d3, c.a, c.e), 1.0);
        return rb.build();
    }
    const int d2 = c.b;
    for (int d = 0; d < D; ++d)
        if (d != d2) rb.add(ctx.vars.index(d, c.a, c.c), 1.0);
    rb.add(ctx.vars.index(d2, c.a, c.d), 1.0);
    for (int d = 0; d < D; ++d)
        if (d != d2) rb.add(ctx.vars.index(d, c.a, c.e), 1.0);
    return rb.build();
}

/// posFit2Sets: big demands on a low slot against small demands on s2.
std::vector<Cand> cands_pos_fit_2sets(const Ctx& ctx) {
    std::vector<Cand> out;
    int vmax = 0;
    for (int d = 0; d < ctx.demands(); ++d) vmax = std::max(vmax, ctx.volume(d));
    for (int e = 0; e < ctx.arcs(); ++e)
        for (int s2 = 2; s2 <= vmax; ++s2)
            for (int s1 = 1; s1 < s2; ++s1) out.push_back({e, s1, s2});
    return out;
}

LinearRow build_pos_fit_2sets(const Ctx& ctx, const Cand& c) {
    RowBuilder rb("posFit2Sets", Sense::le, 1.0);
    for (int d = 0; d < ctx.demands(); ++d) {
        if (ctx.volume(d) >= c.c)
            rb.add(ctx.vars.index(d, c.a, c.b), 1.0);
        else
            rb.add(ctx.vars.index(d, c.a, c.c), 1.0);
    }
    return rb.build();
}

/// centralSlotsLB: another demand on s2 in (v(d), 2v(d)] plus d on s1 < s2
/// force d onto the central slots [s2-v(d), v(d)].
std::vector<Cand> cands_central_lb(const Ctx& ctx) {
    std::vector<Cand> out;
    if (ctx.demands() < 2) return out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const int v = ctx.volume(d);
        if (v < 2) continue;
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int s2 = v + 1; s2 <= std::min(2 * v, ctx.slots()); ++s2)
                for (int s1 = 1; s1 < s2; ++s1) out.push_back({d, e, s1, s2});
    }
    return out;
}

LinearRow build_central_lb(const Ctx& ctx, const Cand& c) {
    const int d = c.a, e = c.b, s1 = c.c, s2 = c.d;
    const int v = ctx.volume(d);
    const int glo = s2 - v, ghi = v;
    const int gamma = ghi - glo + 1;
    RowBuilder rb("centralSlotsLB", Sense::ge, -static_cast<double>(gamma));
    for (int sp = glo; sp <= ghi; ++sp) rb.add(ctx.vars.index(d, e, sp), 1.0);
    for (int d2 = 0; d2 < ctx.demands(); ++d2)
        if (d2 != d) rb.add(ctx.vars.index(d2, e, s2), -static_cast<double>(gamma));
    rb.add(ctx.vars.index(d, e, s1), -static_cast<double>(gamma));
    return rb.build();
}

/// centralSlots3D: other demands on s1 and s3 plus d between them force d
/// onto [s3-v(d), s1+v(d)].
std::vector<Cand> cands_central_3d(const Ctx& ctx) {
    std::vector<Cand> out;
    if (ctx.demands() < 2) return out;
    for (int d = 0; d < ctx.demands(); ++d) {
        const int v = ctx.volume(d);
        for (int e = 0; e < ctx.arcs(); ++e)
            for (int s1 = 1; s1 <= ctx.slots() - 2 * v; ++s1)
                for (int s3 = s1 + v + 1; s3 <= s1 + 2 * v; ++s3)
                    for (int s2 = s1 + 1; s2 < s3; ++s2) out.push_back({d, e, s1, s2, s3});
    }
    return out;
}

LinearRow build_central_3d(const Ctx& ctx, const Cand& c) {
    const int d = c.a, e = c.b, s1 = c.c, s2 = c.d, s3 = c.e;
    const int v = ctx.volume(d);
    const int glo = s3 - v, ghi = s1 + v;
    const int gamma = ghi - glo + 1;
    RowBuilder rb("centralSlots3D", Sense::ge, -2.0 * gamma);
    for (int sp = glo; sp <= ghi; ++sp) rb.add(ctx.vars.index(d, e, sp), 1.0);
    for (int d2 = 0; d2 < ctx.demands(); ++d2) {
        if (d2 == d) continue;
        rb.add(ctx.vars.index(d2, e, s1), -static_cast<double>(gamma));
        rb.add(ctx.vars.index(d2, e, s3), -static_cast<double>(gamma));
    }
    rb.add(ctx.vars.index(d, e, s2), -static_cast<double>(gamma));
    return rb.build();
}

}  // namespace

void register_nonoverlap_families(Registry& reg) {
    reg["nonOverBySum"] = {CutKind::valid, true, cands_non_over, build_non_over};
    reg["kDemandsNotExceed"] = {CutKind::optimality, true, cands_k_demands, build_k_demands};
    reg["kDemandsBySum"] = {CutKind::optimality, true, cands_k_demands_sum, build_k_demands_sum};
    reg["posFitLow2DBySlots"] = {CutKind::optimality, true, cands_pos_fit_slots,
                                 build_pos_fit_slots};
    reg["posFitLow2DAggregated"] = {CutKind::optimality, true, cands_pos_fit_agg,
                                    build_pos_fit_agg};
    reg["posFitLow2DSummed"] = {CutKind::optimality, true, cands_pos_fit_summed,
                                build_pos_fit_summed};
    reg["posFit3DBySlots"] = {CutKind::valid, true, cands_pos_fit_3d, build_pos_fit_3d};
    reg["posFit2Sets"] = {CutKind::valid, true, cands_pos_fit_2sets, build_pos_fit_2sets};
    reg["centralSlotsLB"] = {CutKind::optimality, true, cands_central_lb, build_central_lb};
    reg["centralSlots3D"] = {CutKind::optimality, true, cands_central_3d, build_central_3d};
}

}  // namespace rsabc::sep
