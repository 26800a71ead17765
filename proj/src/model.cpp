#include "rsabc/model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rsabc/tolerances.hpp"

namespace rsabc {

void RowBuilder::add(int var, double coeff) { entries_.push_back({var, coeff}); }

LinearRow RowBuilder::build() const {
    LinearRow row;
    row.sense = sense_;
    row.rhs = rhs_;
    row.tag = tag_;
    row.coeffs = entries_;
    std::sort(row.coeffs.begin(), row.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate indices, drop zeros.
    std::size_t w = 0;
    for (std::size_t r = 0; r < row.coeffs.size();) {
        int var = row.coeffs[r].first;
        double sum = 0.0;
        while (r < row.coeffs.size() && row.coeffs[r].first == var) sum += row.coeffs[r++].second;
        if (std::abs(sum) > 1e-12) row.coeffs[w++] = {var, sum};
    }
    row.coeffs.resize(w);
    return row;
}

double row_lhs(const LinearRow& row, const FractionalPoint& point) {
    double lhs = 0.0;
    for (const auto& [var, c] : row.coeffs) {
        if (var < 0 || var >= static_cast<int>(point.size()))
            throw std::out_of_range("row references variable " + std::to_string(var) +
                                    " outside point of size " + std::to_string(point.size()));
        lhs += c * point[var];
    }
    return lhs;
}

RowEval evaluate_row(const LinearRow& row, const FractionalPoint& point) {
    RowEval ev;
    ev.lhs = row_lhs(row, point);
    switch (row.sense) {
        case Sense::le: ev.violation = std::max(0.0, ev.lhs - row.rhs); break;
        case Sense::eq: ev.violation = std::abs(ev.lhs - row.rhs); break;
        case Sense::ge: ev.violation = std::max(0.0, row.rhs - ev.lhs); break;
    }
    return ev;
}

int Model::count_rows(const std::string& tag) const {
    int n = 0;
    for (const auto& r : rows)
        if (r.tag == tag) ++n;
    return n;
}

std::vector<LinearRow> contiguity_eq_rows(const Instance& inst) {
    std::vector<LinearRow> rows;
    const int sbar = inst.slots;
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    for (int d = 0; d < vars.demands; ++d) {
        const int v = inst.demands[d].volume;
        if (v == 1) continue;  // i=1 row reads sum u = sum u
        for (int e = 0; e < vars.arcs; ++e) {
            for (int i = 1; i <= v; ++i) {
                RowBuilder rb("contiguityEqs", Sense::eq, 0.0);
                for (int s = 1; s <= sbar; ++s) {
                    if (s % v == i % v) rb.add(vars.index(d, e, s), 1.0);
                    if ((s + 1) % v == i % v) rb.add(vars.index(d, e, s), -1.0);
                }
                LinearRow row = rb.build();
                if (!row.coeffs.empty()) rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

Model build_model(const Instance& inst, const ModelOptions& opts) {
    inst.validate();
    Model m;
    m.vars = {static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    const VarSpace& vars = m.vars;
    const int sbar = inst.slots;

    m.objective.assign(vars.count(), 0.0);
    for (int d = 0; d < vars.demands; ++d) {
        double c = 1.0 / inst.demands[d].volume;
        for (int e = 0; e < vars.arcs; ++e)
            for (int s = 1; s <= sbar; ++s) m.objective[vars.index(d, e, s)] = c;
    }

    // Flow conservation at every node that is neither source nor target.
    for (int d = 0; d < vars.demands; ++d) {
        const Demand& dem = inst.demands[d];
        for (int j = 0; j < inst.graph.node_count(); ++j) {
            if (j == dem.source || j == dem.target) continue;
            for (int s = 1; s <= sbar; ++s) {
                RowBuilder rb("flowConservation", Sense::eq, 0.0);
                for (int e : inst.graph.in_arcs(j)) rb.add(vars.index(d, e, s), 1.0);
                for (int e : inst.graph.out_arcs(j)) rb.add(vars.index(d, e, s), -1.0);
                m.rows.push_back(rb.build());
            }
        }
    }

    // At least v(d) slot-arcs leave the source.
    for (int d = 0; d < vars.demands; ++d) {
        RowBuilder rb("sourceVolume", Sense::ge, inst.demands[d].volume);
        for (int e : inst.graph.out_arcs(inst.demands[d].source))
            for (int s = 1; s <= sbar; ++s) rb.add(vars.index(d, e, s), 1.0);
        m.rows.push_back(rb.build());
    }

    // No incoming arcs into the source.
    for (int d = 0; d < vars.demands; ++d) {
        RowBuilder rb("sourceInDegree", Sense::eq, 0.0);
        for (int e : inst.graph.in_arcs(inst.demands[d].source))
            for (int s = 1; s <= sbar; ++s) rb.add(vars.index(d, e, s), 1.0);
        m.rows.push_back(rb.build());
    }

    // Clash: each (arc, slot) pair is used by at most one demand.
    for (int e = 0; e < vars.arcs; ++e) {
        for (int s = 1; s <= sbar; ++s) {
            RowBuilder rb("clash", Sense::le, 1.0);
            for (int d = 0; d < vars.demands; ++d) rb.add(vars.index(d, e, s), 1.0);
            m.rows.push_back(rb.build());
        }
    }

    // Contiguity: if s is the last slot used on e, the v(d)-1 slots below it
    // are used too. The fictitious slot sbar+1 is dropped at s = sbar.
    for (int d = 0; d < vars.demands; ++d) {
        const int v = inst.demands[d].volume;
        for (int e = 0; e < vars.arcs; ++e) {
            for (int s = 1; s <= sbar; ++s) {
                RowBuilder rb("contiguity", Sense::le, 0.0);
                rb.add(vars.index(d, e, s), static_cast<double>(v));
                if (s + 1 <= sbar) rb.add(vars.index(d, e, s + 1), -static_cast<double>(v));
                const int f = std::max(1, s - v + 1);
                for (int sp = f; sp <= s; ++sp) rb.add(vars.index(d, e, sp), -1.0);
                m.rows.push_back(rb.build());
            }
        }
    }

    if (opts.static_optimality_rows) {
        // noOutFromDst: no slot of d leaves its target (kills target cycles).
        for (int d = 0; d < vars.demands; ++d) {
            RowBuilder rb("noOutFromDst", Sense::eq, 0.0);
            for (int e : inst.graph.out_arcs(inst.demands[d].target))
                for (int s = 1; s <= sbar; ++s) rb.add(vars.index(d, e, s), 1.0);
            m.rows.push_back(rb.build());
        }
        for (auto& row : contiguity_eq_rows(inst)) m.rows.push_back(std::move(row));
    }
    return m;
}

FractionalPoint embed_canonical(const Instance& inst, const CanonicalSolution& sol) {
    FeasibilityReport rep = check_canonical_feasible(inst, sol);
    if (!rep.feasible) {
        std::string msg = "cannot embed infeasible canonical solution";
        for (const auto& v : rep.violations) msg += "; " + v;
        throw SemanticError(msg);
    }
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    FractionalPoint x(vars.count(), 0.0);
    for (int d = 0; d < vars.demands; ++d) {
        const DemandAssignment& a = sol.assignments[d];
        for (int e : a.path)
            for (int s = a.start_slot; s < a.start_slot + inst.demands[d].volume; ++s)
                x[vars.index(d, e, s)] = 1.0;
    }
    return x;
}

double objective_value(const Model& model, const FractionalPoint& point) {
    double obj = 0.0;
    for (int i = 0; i < static_cast<int>(point.size()); ++i) obj += model.objective[i] * point[i];
    return obj;
}

std::string row_to_string(const LinearRow& row, const VarSpace& vars) {
    std::ostringstream ss;
    ss << row.tag << ":";
    for (const auto& [var, c] : row.coeffs) {
        ss << (c < 0 ? " - " : " + ");
        double a = std::abs(c);
        if (a != 1.0) ss << a << "*";
        ss << "u[" << vars.demand_of(var) << "," << vars.arc_of(var) << "," << vars.slot_of(var)
           << "]";
    }
    if (row.coeffs.empty()) ss << " 0";
    switch (row.sense) {
        case Sense::le: ss << " <= "; break;
        case Sense::eq: ss << " = "; break;
        case Sense::ge: ss << " >= "; break;
    }
    ss << row.rhs;
    return ss.str();
}

void dump_model(const Model& model, std::ostream& out) {
    for (const auto& row : model.rows) out << row_to_string(row, model.vars) << "\n";
}

}  // namespace rsabc
