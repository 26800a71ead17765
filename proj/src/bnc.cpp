#include "rsabc/bnc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>

#include "rsabc/lp.hpp"
#include "rsabc/model.hpp"
#include "rsabc/separation.hpp"
#include "rsabc/tolerances.hpp"

namespace rsabc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9E3779B97F4A7C15ull * (b + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

struct Node {
    std::vector<std::pair<int, int>> fixings;  // (var, 0/1)
    double bound = -kInf;                      // parent LP bound
    int depth = 0;
    long seq = 0;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;  // min-heap
        if (a.depth != b.depth) return a.depth > b.depth;
        return a.seq > b.seq;
    }
};

bool point_integral(const FractionalPoint& x) {
    for (double v : x) {
        double f = v - std::floor(v);
        if (std::min(f, 1.0 - f) > tol::integrality) return false;
    }
    return true;
}

FractionalPoint round_point(const FractionalPoint& x) {
    FractionalPoint out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::round(x[i]);
    return out;
}

bool is_base_model_tag(const std::string& tag) {
    return tag == "flowConservation" || tag == "sourceVolume" || tag == "sourceInDegree" ||
           tag == "clash" || tag == "contiguity";
}

/// Recovers the lightpath structure from a 0/1 point when it has one: per
/// demand a simple path carrying one identical block of exactly v(d) slots.
std::optional<CanonicalSolution> extract_canonical(const Instance& inst,
                                                   const FractionalPoint& x) {
    VarSpace vars{static_cast<int>(inst.demands.size()), inst.graph.arc_count(), inst.slots};
    CanonicalSolution sol;
    sol.assignments.resize(inst.demands.size());
    for (int d = 0; d < vars.demands; ++d) {
        std::vector<int> arcs;
        std::vector<int> slots_of_first;
        for (int e = 0; e < vars.arcs; ++e) {
            std::vector<int> slots;
            for (int s = 1; s <= vars.slots; ++s)
                if (x[vars.index(d, e, s)] > 0.5) slots.push_back(s);
            if (slots.empty()) continue;
            if (arcs.empty()) slots_of_first = slots;
            else if (slots != slots_of_first) return std::nullopt;
            arcs.push_back(e);
        }
        const int v = inst.demands[d].volume;
        if (arcs.empty() || static_cast<int>(slots_of_first.size()) != v) return std::nullopt;
        for (int i = 1; i < v; ++i)
            if (slots_of_first[i] != slots_of_first[0] + i) return std::nullopt;

        // Order the arcs into a source-to-target chain.
        std::vector<int> path;
        int at = inst.demands[d].source;
        std::vector<char> used(arcs.size(), 0);
        for (std::size_t step = 0; step < arcs.size(); ++step) {
            bool found = false;
            for (std::size_t i = 0; i < arcs.size(); ++i) {
                if (used[i] || inst.graph.arc(arcs[i]).tail != at) continue;
                used[i] = 1;
                path.push_back(arcs[i]);
                at = inst.graph.arc(arcs[i]).head;
                found = true;
                break;
            }
            if (!found) return std::nullopt;
        }
        if (at != inst.demands[d].target) return std::nullopt;
        sol.assignments[d] = {std::move(path), slots_of_first[0]};
    }
    if (!check_canonical_feasible(inst, sol).feasible) return std::nullopt;
    return sol;
}

}  // namespace

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "Optimal";
        case SolveStatus::feasible_timeout: return "Feasible(timeout)";
        case SolveStatus::nosolution_timeout: return "NoSolution(timeout)";
        case SolveStatus::infeasible: return "Infeasible";
    }
    return "?";
}

std::size_t select_node_index(const std::vector<NodeChoice>& open) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < open.size(); ++i) {
        const NodeChoice& a = open[i];
        const NodeChoice& b = open[best];
        if (a.bound < b.bound ||
            (a.bound == b.bound &&
             (a.depth < b.depth || (a.depth == b.depth && a.seq < b.seq))))
            best = i;
    }
    return best;
}

int branch_var(const FractionalPoint& point) {
    int best = -1;
    double best_dist = 1.0;
    for (int i = 0; i < static_cast<int>(point.size()); ++i) {
        double f = point[i] - std::floor(point[i]);
        if (std::min(f, 1.0 - f) <= tol::integrality) continue;
        double dist = std::abs(f - 0.5);
        if (dist < best_dist - 1e-12) {
            best_dist = dist;
            best = i;
        }
    }
    if (best < 0) throw std::invalid_argument("branch_var called on an integral point");
    return best;
}

SolveResult solve_bnc(const Instance& inst, const BncConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto minutes_elapsed = [&] {
        return std::chrono::duration<double>(clock::now() - t0).count() / 60.0;
    };

    inst.validate();
    SolveResult result;

    ModelOptions mopts;
    mopts.static_optimality_rows = config.static_rows && config.use_optimality_cuts;
    const Model model = build_model(inst, mopts);
    const VarSpace& vars = model.vars;

    PoolParams pp;
    pp.seed = config.seed;
    const StructurePools pools = build_pools(inst, pp);

    std::vector<std::string> enabled =
        config.enabled_families.has_value() ? *config.enabled_families : all_family_tags();
    if (!config.use_optimality_cuts) {
        std::vector<std::string> valid_only;
        for (const auto& f : enabled)
            if (family_kind(f) == CutKind::valid) valid_only.push_back(f);
        enabled = std::move(valid_only);
    }
    EffectivenessStats stats(enabled);
    StrategyConfig strat = config.strategy;

    std::vector<LinearRow> base_rows;  // rows (2)-(7) used for incumbent checks
    for (const auto& row : model.rows)
        if (is_base_model_tag(row.tag)) base_rows.push_back(row);

    CutPool pool;
    double incumbent = kInf;
    bool have_incumbent = false;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long seq = 0;
    open.push({{}, -kInf, 0, seq++});

    bool timed_out = false;
    const double eps_default = 0.0;

    auto family_eps = [&](const std::string& f) {
        auto it = config.eps.find(f);
        return it == config.eps.end() ? eps_default : it->second;
    };

    while (!open.empty()) {
        if (minutes_elapsed() > config.time_limit_minutes) {
            timed_out = true;
            break;
        }
        if (config.max_nodes > 0 && result.nodes >= config.max_nodes) {
            timed_out = true;
            break;
        }

        Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound >= incumbent - tol::bound_drift) continue;

        ++result.nodes;

        LpProblem prob;
        prob.var_count = vars.count();
        prob.objective = model.objective;
        prob.lower.assign(prob.var_count, 0.0);
        prob.upper.assign(prob.var_count, 1.0);
        for (const auto& [var, val] : node.fixings) {
            prob.lower[var] = val;
            prob.upper[var] = val;
        }
        prob.rows = model.rows;
        std::vector<std::size_t> in_lp;      // pool entry ids present in this LP
        std::vector<char> in_lp_flag(pool.size(), 0);
        {
            const auto& entries = pool.entries();
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].active) {
                    prob.rows.push_back(entries[i].cut.row);
                    in_lp.push_back(i);
                    in_lp_flag[i] = 1;
                }
        }

        LpContext ctx(std::move(prob), config.lp_iteration_limit);
        LpResult lp = ctx.solve();
        if (lp.status == LpStatus::infeasible) continue;

        // Cut rounds.
        const int max_rounds =
            enabled.empty() ? 0 : (node.depth == 0 ? config.root_rounds : config.node_rounds);
        for (int round = 0; round < max_rounds; ++round) {
            if (have_incumbent && lp.objective >= incumbent - tol::bound_drift) break;
            if (minutes_elapsed() > config.time_limit_minutes) break;

            std::uint64_t round_seed = mix64(config.seed, mix64(node.seq, round));
            CallPlan plan = plan_calls(strat, stats, enabled, round_seed);
            std::vector<LinearRow> new_rows;
            int family_index = 0;
            while (auto family = plan.next()) {
                SepOptions sopts;
                sopts.eps = family_eps(*family);
                sopts.exec = config.exec;
                sopts.seed = mix64(round_seed, family_index++);
                sopts.structure_sample = config.structure_sample;
                sopts.row_cap = config.row_cap;
                sopts.enable_triples = config.enable_triples;
                auto cuts = separate_family(*family, inst, pools, lp.x, sopts);

                long found = static_cast<long>(cuts.size());
                for (const auto& cut : cuts) {
                    auto [idx, fresh] = pool.add_indexed(cut, node.seq);
                    if (idx >= in_lp_flag.size()) in_lp_flag.resize(idx + 1, 0);
                    if (fresh) {
                        result.cuts_per_family[*family] += 1;
                        ++result.total_cuts;
                        if (config.collect_cuts) result.added_cuts.push_back(cut);
                    }
                    if (!in_lp_flag[idx]) {  // new, or aged out and re-found
                        new_rows.push_back(cut.row);
                        in_lp.push_back(idx);
                        in_lp_flag[idx] = 1;
                    }
                }
                record_outcome(stats, *family, found);
                plan.report(*family, found);
            }
            if (new_rows.empty()) break;

            double prev = lp.objective;
            LpResult next = ctx.add_rows_resolve(std::move(new_rows));
            if (next.status == LpStatus::infeasible) {
                lp = next;
                break;
            }
            double delta = next.objective - prev;
            if (delta < -tol::bound_drift) {
                ++result.monotonicity_violations;
                result.worst_resolve_delta = std::min(result.worst_resolve_delta, delta);
            }
            lp = next;
            double rel = delta / std::max(std::abs(prev), 1e-9);
            if (rel < 1e-4) break;  // tailing off
        }

        if (lp.status == LpStatus::infeasible) continue;

        // Cut aging against this node's final point.
        {
            auto& entries = pool.entries();
            for (std::size_t i : in_lp) {
                auto& entry = entries[i];
                RowEval ev = evaluate_row(entry.cut.row, lp.x);
                double slack = 0.0;
                switch (entry.cut.row.sense) {
                    case Sense::le: slack = entry.cut.row.rhs - ev.lhs; break;
                    case Sense::ge: slack = ev.lhs - entry.cut.row.rhs; break;
                    case Sense::eq: slack = 0.0; break;
                }
                if (slack > 0.1) {
                    if (++entry.stale_lps >= 50) entry.active = false;
                } else {
                    entry.stale_lps = 0;
                    entry.last_active_node = node.seq;
                }
            }
        }

        double bound = lp.objective;
        if (have_incumbent && bound >= incumbent - tol::bound_drift) continue;

        if (point_integral(lp.x)) {
            FractionalPoint candidate = round_point(lp.x);
            bool ok = true;
            for (const auto& row : base_rows)
                if (evaluate_row(row, candidate).violation > tol::feasibility) {
                    ok = false;
                    break;
                }
            if (ok) {
                double obj = objective_value(model, candidate);
                auto sol = extract_canonical(inst, candidate);
                if (sol) obj = static_cast<double>(total_path_arcs(*sol));
                if (!have_incumbent || obj < incumbent - tol::bound_drift) {
                    incumbent = obj;
                    have_incumbent = true;
                    result.incumbent_point = candidate;
                    result.solution = sol;
                }
            }
            // An integral point that fails the recheck would mean the LP lost
            // feasibility; branching on it is impossible either way.
            if (config.log)
                (*config.log) << "node=" << result.nodes << " bound=" << bound
                              << " incumbent=" << (have_incumbent ? incumbent : kInf)
                              << " gap=" << result.gap << " cuts=" << result.total_cuts << "\n";
            continue;
        }

        int var = branch_var(lp.x);
        for (int val : {0, 1}) {
            Node child;
            child.fixings = node.fixings;
            child.fixings.push_back({var, val});
            child.bound = bound;
            child.depth = node.depth + 1;
            child.seq = seq++;
            open.push(child);
        }

        if (config.log)
            (*config.log) << "node=" << result.nodes << " bound=" << bound
                          << " incumbent=" << (have_incumbent ? incumbent : kInf)
                          << " gap=" << result.gap << " cuts=" << result.total_cuts << "\n";
    }

    result.family_stats = stats;

    // Final bound: smallest open bound, or the incumbent when proven.
    double best_open = kInf;
    while (!open.empty()) {
        best_open = std::min(best_open, open.top().bound);
        open.pop();
    }

    result.wall_minutes = minutes_elapsed();
    if (!timed_out) {
        if (have_incumbent) {
            result.status = SolveStatus::optimal;
            result.objective = incumbent;
            result.bound = incumbent;
            result.gap = 0.0;
        } else {
            result.status = SolveStatus::infeasible;
            result.bound = kInf;
            result.gap = 0.0;
        }
        return result;
    }

    result.bound = std::min(best_open, incumbent);
    if (have_incumbent) {
        result.status = SolveStatus::feasible_timeout;
        result.objective = incumbent;
        double denom = std::max(std::abs(incumbent), 1e-9);
        double g = (incumbent - (best_open == kInf ? incumbent : best_open)) / denom;
        result.gap = std::clamp(g, 0.0, 1.0);
    } else {
        result.status = SolveStatus::nosolution_timeout;
        result.gap = 1.0;
    }
    return result;
}

}  // namespace rsabc
