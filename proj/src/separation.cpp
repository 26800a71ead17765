#include "rsabc/separation.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "rsabc/tolerances.hpp"
#include "sep_internal.hpp"

namespace rsabc {

namespace sep {

const ArcSet& Ctx::arcset(int id) const {
    int n1 = static_cast<int>(pools.directed_cycles.size());
    int n2 = static_cast<int>(pools.undirected_cycles.size());
    if (id < n1) return pools.directed_cycles[id];
    if (id < n1 + n2) return pools.undirected_cycles[id - n1];
    return pools.induced_sets[id - n1 - n2];
}

int Ctx::arcset_count() const {
    return static_cast<int>(pools.directed_cycles.size() + pools.undirected_cycles.size() +
                            pools.induced_sets.size());
}

std::vector<std::pair<int, int>> minimal_demand_pairs(const Instance& inst) {
    std::vector<std::pair<int, int>> out;
    const int k = static_cast<int>(inst.demands.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (inst.demands[a].volume + inst.demands[b].volume > inst.slots)
                out.push_back({a, b});
    return out;
}

std::vector<std::array<int, 3>> minimal_demand_triples(const Instance& inst) {
    std::vector<std::array<int, 3>> out;
    const int k = static_cast<int>(inst.demands.size());
    auto v = [&](int d) { return inst.demands[d].volume; };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                if (v(a) + v(b) + v(c) > inst.slots && v(a) + v(b) <= inst.slots &&
                    v(a) + v(c) <= inst.slots && v(b) + v(c) <= inst.slots)
                    out.push_back({a, b, c});
    return out;
}

}  // namespace sep

namespace {

using sep::Cand;
using sep::Ctx;
using sep::FamilyDef;
using sep::Registry;

const Registry& registry() {
    static const Registry reg = [] {
        Registry r;
        sep::register_flow_families(r);
        sep::register_contiguity_families(r);
        sep::register_nonoverlap_families(r);
        return r;
    }();
    return reg;
}

/// Seeded sample of k ids out of [0, n); all of them in full mode.
std::vector<int> sample_ids(int n, int k, bool full, std::mt19937_64& rng) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    if (full || n <= k) return ids;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    return ids;
}

Ctx make_ctx(const Instance& inst, const StructurePools& pools, const SepOptions& opts,
             bool full) {
    Ctx ctx{inst,
            pools,
            VarSpace{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots},
            opts,
            full,
            {},
            {},
            {},
            {}};
    std::mt19937_64 rng(opts.seed);
    ctx.broom_ids = sample_ids(static_cast<int>(pools.brooms.size()), opts.structure_sample,
                               full, rng);
    ctx.arcset_ids = sample_ids(ctx.arcset_count(), opts.structure_sample, full, rng);
    ctx.demand_pairs = sep::minimal_demand_pairs(inst);
    if (opts.enable_triples) ctx.demand_triples = sep::minimal_demand_triples(inst);
    return ctx;
}

const FamilyDef& family_or_throw(const std::string& tag) {
    auto it = registry().find(tag);
    if (it == registry().end()) throw std::invalid_argument("unknown family tag: " + tag);
    return it->second;
}

}  // namespace

const std::vector<std::string>& all_family_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> t;
        for (const auto& [tag, def] : registry()) t.push_back(tag);
        return t;
    }();
    return tags;
}

bool is_family_tag(const std::string& tag) { return registry().count(tag) > 0; }

CutKind family_kind(const std::string& tag) { return family_or_throw(tag).kind; }

std::vector<Cut> separate_family(const std::string& tag, const Instance& inst,
                                 const StructurePools& pools, const FractionalPoint& point,
                                 const SepOptions& opts) {
    const FamilyDef& def = family_or_throw(tag);
    Ctx ctx = make_ctx(inst, pools, opts, false);
    const auto cands = def.candidates(ctx);
    const double keep = std::max(opts.eps, tol::min_violation);

    std::vector<LinearRow> rows(cands.size());
    std::vector<double> violation(cands.size(), -1.0);
    par_for(cands.size(), opts.exec, [&](std::size_t i) {
        LinearRow row = def.build(ctx, cands[i]);
        if (row.coeffs.empty()) return;
        double v = evaluate_row(row, point).violation;
        if (v >= keep) {
            rows[i] = std::move(row);
            violation[i] = v;
        }
    });

    std::vector<Cut> cuts;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (violation[i] >= 0.0) cuts.push_back({std::move(rows[i]), def.kind, violation[i]});

    if (def.capped && opts.row_cap > 0 && static_cast<int>(cuts.size()) > opts.row_cap) {
        std::stable_sort(cuts.begin(), cuts.end(),
                         [](const Cut& a, const Cut& b) { return a.violation > b.violation; });
        cuts.resize(opts.row_cap);
    }
    return cuts;
}

std::vector<LinearRow> enumerate_family_rows(const std::string& tag, const Instance& inst,
                                             const StructurePools& pools, bool enable_triples) {
    const FamilyDef& def = family_or_throw(tag);
    SepOptions opts;
    opts.enable_triples = enable_triples;
    Ctx ctx = make_ctx(inst, pools, opts, true);
    std::vector<LinearRow> rows;
    for (const Cand& c : def.candidates(ctx)) {
        LinearRow row = def.build(ctx, c);
        if (!row.coeffs.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

const char* to_string(CutKind kind) {
    switch (kind) {
        case CutKind::valid: return "valid";
        case CutKind::equation: return "equation";
        case CutKind::optimality: return "optimality";
    }
    return "?";
}

}  // namespace rsabc
