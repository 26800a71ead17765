#include "rsabc/oracle.hpp"

#include <algorithm>

#include "rsabc/separation.hpp"
#include "rsabc/tolerances.hpp"

namespace rsabc {

namespace {

struct DemandOption {
    std::vector<int> path;  // arc ids, sorted copy kept separately
    std::vector<int> sorted_arcs;
    int start_slot = 1;
    int end_slot = 1;
};

bool options_conflict(const DemandOption& a, const DemandOption& b) {
    if (a.end_slot < b.start_slot || b.end_slot < a.start_slot) return false;
    // slot intervals overlap; conflict iff the paths share an arc
    for (int e : a.sorted_arcs)
        if (std::binary_search(b.sorted_arcs.begin(), b.sorted_arcs.end(), e)) return true;
    return false;
}

}  // namespace

OracleEnumeration enumerate_canonical(const Instance& inst, const EnumLimits& limits, Exec exec) {
    inst.validate();
    OracleEnumeration out;
    const int k = static_cast<int>(inst.demands.size());

    std::vector<std::vector<DemandOption>> options(k);
    for (int d = 0; d < k; ++d) {
        const Demand& dem = inst.demands[d];
        bool exceeded = false;
        auto paths = enumerate_simple_paths(inst.graph, dem.source, dem.target,
                                            limits.max_paths_per_demand, &exceeded);
        if (exceeded)
            throw EnumerationLimitError("demand " + std::to_string(d) + " has more than " +
                                        std::to_string(limits.max_paths_per_demand) +
                                        " simple paths");
        for (const auto& p : paths) {
            for (int l = 1; l + dem.volume - 1 <= inst.slots; ++l) {
                DemandOption opt;
                opt.path = p;
                opt.sorted_arcs = p;
                std::sort(opt.sorted_arcs.begin(), opt.sorted_arcs.end());
                opt.start_slot = l;
                opt.end_slot = l + dem.volume - 1;
                options[d].push_back(std::move(opt));
            }
        }
        if (options[d].empty()) return out;  // no lightpath for d: infeasible
    }

    long total = 1;
    for (int d = 0; d < k; ++d) {
        total *= static_cast<long>(options[d].size());
        if (total > limits.max_total)
            throw EnumerationLimitError("combination count exceeds " +
                                        std::to_string(limits.max_total));
    }

    // Rank order: demand 0 outermost, then path-major, slot-minor per demand.
    std::vector<char> feasible(total, 0);
    par_for(static_cast<std::size_t>(total), exec, [&](std::size_t rank) {
        std::size_t r = rank;
        std::vector<int> choice(k);
        for (int d = k - 1; d >= 0; --d) {
            choice[d] = static_cast<int>(r % options[d].size());
            r /= options[d].size();
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (options_conflict(options[i][choice[i]], options[j][choice[j]])) return;
        feasible[rank] = 1;
    });

    for (long rank = 0; rank < total; ++rank) {
        if (!feasible[rank]) continue;
        CanonicalSolution sol;
        sol.assignments.resize(k);
        std::size_t r = static_cast<std::size_t>(rank);
        for (int d = k - 1; d >= 0; --d) {
            const DemandOption& opt = options[d][r % options[d].size()];
            r /= options[d].size();
            sol.assignments[d] = {opt.path, opt.start_slot};
        }
        out.objectives.push_back(total_path_arcs(sol));
        out.solutions.push_back(std::move(sol));
    }

    if (!out.solutions.empty()) {
        out.optimum = *std::min_element(out.objectives.begin(), out.objectives.end());
        for (int i = 0; i < static_cast<int>(out.solutions.size()); ++i)
            if (out.objectives[i] == out.optimum) out.optimal_ids.push_back(i);
    }
    return out;
}

OracleOptimum oracle_optimum(const Instance& inst, const EnumLimits& limits) {
    OracleEnumeration e = enumerate_canonical(inst, limits);
    OracleOptimum out;
    if (e.optimum < 0) return out;
    out.feasible = true;
    out.objective = e.optimum;
    for (int id : e.optimal_ids) out.optima.push_back(e.solutions[id]);
    return out;
}

std::vector<CutAudit> audit_cuts(const OracleEnumeration& enumeration, const Instance& inst,
                                 const std::vector<Cut>& cuts) {
    std::vector<CutAudit> audits(cuts.size());
    for (auto& a : audits) a.audited = static_cast<int>(enumeration.solutions.size());
    if (enumeration.solutions.empty()) return audits;

    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    FractionalPoint x(vars.count(), 0.0);
    std::vector<char> is_opt(enumeration.solutions.size(), 0);
    for (int id : enumeration.optimal_ids) is_opt[id] = 1;

    for (std::size_t sid = 0; sid < enumeration.solutions.size(); ++sid) {
        const CanonicalSolution& sol = enumeration.solutions[sid];
        std::fill(x.begin(), x.end(), 0.0);
        for (int d = 0; d < vars.demands; ++d) {
            const DemandAssignment& a = sol.assignments[d];
            for (int e : a.path)
                for (int s = a.start_slot; s < a.start_slot + inst.demands[d].volume; ++s)
                    x[vars.index(d, e, s)] = 1.0;
        }
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            double viol = evaluate_row(cuts[c].row, x).violation;
            if (viol > tol::min_violation) {
                audits[c].valid_on_all = false;
                if (audits[c].counterexamples.size() < 8)
                    audits[c].counterexamples.push_back(static_cast<int>(sid));
            } else if (is_opt[sid]) {
                audits[c].holds_at_some_optimum = true;
            }
        }
    }
    return audits;
}

CutAudit audit_cut(const Instance& inst, const Cut& cut, const EnumLimits& limits) {
    OracleEnumeration e = enumerate_canonical(inst, limits);
    return audit_cuts(e, inst, {cut}).front();
}

bool audit_passes(const CutAudit& audit, CutKind kind) {
    if (audit.audited == 0) return true;  // vacuous on infeasible instances
    if (kind == CutKind::optimality) return audit.holds_at_some_optimum;
    return audit.valid_on_all;
}

WitnessResult find_witness(const WitnessQuery& query) {
    WitnessResult out;
    const Instance& inst = *query.inst;
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};

    LpProblem prob;
    prob.var_count = vars.count();
    prob.objective.assign(prob.var_count, 0.0);
    prob.lower.assign(prob.var_count, 0.0);
    prob.upper.assign(prob.var_count, 1.0);
    prob.rows = query.base_rows;

    auto solve_direction = [&](double sign) -> std::pair<bool, LpResult> {
        for (auto& c : prob.objective) c = 0.0;
        for (const auto& [var, coeff] : query.target.coeffs) prob.objective[var] = sign * coeff;
        LpResult res = solve_lp(prob);
        return {res.status == LpStatus::optimal, res};
    };

    auto consider = [&](const LpResult& res) {
        double lhs = row_lhs(query.target, res.x);
        double viol = 0.0;
        switch (query.target.sense) {
            case Sense::le: viol = lhs - query.target.rhs; break;
            case Sense::ge: viol = query.target.rhs - lhs; break;
            case Sense::eq: viol = std::abs(lhs - query.target.rhs); break;
        }
        if (viol > out.violation) {
            out.violation = viol;
            out.point = res.x;
        }
    };

    // Maximize the target violation: minimize -lhs for <=, lhs for >=, both
    // directions for equalities.
    if (query.target.sense != Sense::ge) {
        auto [ok, res] = solve_direction(-1.0);
        if (!ok) {
            out.base_infeasible = true;
            return out;
        }
        consider(res);
    }
    if (query.target.sense != Sense::le) {
        auto [ok, res] = solve_direction(1.0);
        if (!ok) {
            out.base_infeasible = true;
            return out;
        }
        consider(res);
    }
    out.found = out.violation > tol::witness;
    if (!out.found) out.point.clear();
    return out;
}

std::vector<LinearRow> build_witness_base(const Instance& inst, const StructurePools& pools,
                                          const std::vector<std::string>& families) {
    Model model = build_model(inst);
    std::vector<LinearRow> rows = model.rows;
    for (const auto& tag : families) {
        auto extra = enumerate_family_rows(tag, inst, pools, true);
        rows.insert(rows.end(), std::make_move_iterator(extra.begin()),
                    std::make_move_iterator(extra.end()));
    }
    return rows;
}

}  // namespace rsabc
