#include "rsabc/symmetry.hpp"

#include <cmath>
#include <unordered_map>

#include "rsabc/tolerances.hpp"

namespace rsabc {

namespace {

std::unordered_map<int, double> coeff_map(const LinearRow& row) {
    std::unordered_map<int, double> m;
    m.reserve(row.coeffs.size());
    for (const auto& [var, c] : row.coeffs) m.emplace(var, c);
    return m;
}

double coeff_at(const std::unordered_map<int, double>& m, int var) {
    auto it = m.find(var);
    return it == m.end() ? 0.0 : it->second;
}

bool same(double a, double b) { return std::abs(a - b) <= tol::coeff_match; }

LinearRow rebuild(const LinearRow& proto, const std::unordered_map<int, double>& coeffs) {
    RowBuilder rb(proto.tag, proto.sense, proto.rhs);
    for (const auto& [var, c] : coeffs) rb.add(var, c);
    return rb.build();
}

}  // namespace

LinearRow mirror_slots(const LinearRow& row, const VarSpace& vars) {
    RowBuilder rb(row.tag, row.sense, row.rhs);
    for (const auto& [var, c] : row.coeffs) {
        int d = vars.demand_of(var), e = vars.arc_of(var), s = vars.slot_of(var);
        rb.add(vars.index(d, e, vars.slots - s + 1), c);
    }
    return rb.build();
}

Cut mirror_slots(const Cut& cut, const VarSpace& vars) {
    return {mirror_slots(cut.row, vars), cut.kind, 0.0};
}

Cut mirror_node_flow(const Cut& cut, int node, const Instance& inst) {
    for (std::size_t d = 0; d < inst.demands.size(); ++d)
        if (inst.demands[d].source == node || inst.demands[d].target == node)
            throw SymmetryError("node is an endpoint of a demand", static_cast<int>(d), 0, -1);

    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    auto coeffs = coeff_map(cut.row);
    const auto& out = inst.graph.out_arcs(node);
    const auto& in = inst.graph.in_arcs(node);

    auto mirrored = coeffs;
    for (int d = 0; d < vars.demands; ++d) {
        for (int s = 1; s <= vars.slots; ++s) {
            double alpha = out.empty() ? 0.0 : coeff_at(coeffs, vars.index(d, out[0], s));
            for (int e : out)
                if (!same(coeff_at(coeffs, vars.index(d, e, s)), alpha))
                    throw SymmetryError("outgoing coefficients not constant", d, s, e);
            double beta = in.empty() ? 0.0 : coeff_at(coeffs, vars.index(d, in[0], s));
            for (int e : in)
                if (!same(coeff_at(coeffs, vars.index(d, e, s)), beta))
                    throw SymmetryError("incoming coefficients not constant", d, s, e);
            for (int e : in) mirrored[vars.index(d, e, s)] = alpha;
            for (int e : out) mirrored[vars.index(d, e, s)] = beta;
        }
    }
    return {rebuild(cut.row, mirrored), cut.kind, 0.0};
}

Cut mirror_demand_endpoints(const Cut& cut, int demand, const Instance& inst) {
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    const Demand& dem = inst.demands[demand];
    auto coeffs = coeff_map(cut.row);

    const auto& src_out = inst.graph.out_arcs(dem.source);
    const auto& src_in = inst.graph.in_arcs(dem.source);
    const auto& dst_out = inst.graph.out_arcs(dem.target);
    const auto& dst_in = inst.graph.in_arcs(dem.target);

    std::vector<int> endpoint_arcs;
    for (const auto* v : {&src_out, &src_in, &dst_out, &dst_in})
        endpoint_arcs.insert(endpoint_arcs.end(), v->begin(), v->end());

    auto mirrored = coeffs;
    for (int s = 1; s <= vars.slots; ++s) {
        double alpha = src_out.empty() ? 0.0 : coeff_at(coeffs, vars.index(demand, src_out[0], s));
        for (int e : src_out)
            if (!same(coeff_at(coeffs, vars.index(demand, e, s)), alpha))
                throw SymmetryError("source-out coefficients not constant", demand, s, e);
        double beta = dst_in.empty() ? 0.0 : coeff_at(coeffs, vars.index(demand, dst_in[0], s));
        for (int e : dst_in)
            if (!same(coeff_at(coeffs, vars.index(demand, e, s)), beta))
                throw SymmetryError("target-in coefficients not constant", demand, s, e);
        // delta-(s(d)) and delta+(t(d)) are disjoint from the swapped sets.
        for (int e : src_in)
            if (!same(coeff_at(coeffs, vars.index(demand, e, s)), 0.0))
                throw SymmetryError("source-in coefficient must be zero", demand, s, e);
        for (int e : dst_out)
            if (!same(coeff_at(coeffs, vars.index(demand, e, s)), 0.0))
                throw SymmetryError("target-out coefficient must be zero", demand, s, e);
        for (int d2 = 0; d2 < vars.demands; ++d2) {
            if (d2 == demand) continue;
            for (int e : endpoint_arcs)
                if (!same(coeff_at(coeffs, vars.index(d2, e, s)), 0.0))
                    throw SymmetryError("other-demand coefficient on endpoint arc", d2, s, e);
        }
        // The direct source->target arc lies in both swapped sets; the checks
        // above force alpha == beta there.
        for (int e : dst_in) mirrored[vars.index(demand, e, s)] = alpha;
        for (int e : src_out) {
            bool also_dst_in = std::find(dst_in.begin(), dst_in.end(), e) != dst_in.end();
            if (!also_dst_in) mirrored[vars.index(demand, e, s)] = beta;
        }
    }
    return {rebuild(cut.row, mirrored), cut.kind, 0.0};
}

}  // namespace rsabc
