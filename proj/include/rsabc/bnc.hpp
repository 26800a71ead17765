#ifndef RSABC_BNC_HPP
#define RSABC_BNC_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsabc/cut.hpp"
#include "rsabc/instance.hpp"
#include "rsabc/parallel.hpp"
#include "rsabc/pools.hpp"
#include "rsabc/strategy.hpp"

namespace rsabc {

struct BncConfig {
    double time_limit_minutes = 60.0;
    StrategyConfig strategy;
    std::map<std::string, double> eps;            // per-family threshold, default 0
    /// nullopt: every registered family; empty: plain branch-and-bound.
    std::optional<std::vector<std::string>> enabled_families;
    bool use_optimality_cuts = true;              // gates optimality/equation kinds
    bool static_rows = true;                      // noOutFromDst + contiguityEqs at build
    std::uint64_t seed = 0;
    Exec exec = Exec::openmp;
    int root_rounds = 10;
    int node_rounds = 2;
    long max_nodes = 0;                           // 0 = unlimited
    long lp_iteration_limit = 50000;
    int structure_sample = 200;
    int row_cap = 500;
    bool enable_triples = false;
    bool collect_cuts = false;                    // keep added cuts for audits
    std::ostream* log = nullptr;
};

enum class SolveStatus { optimal, feasible_timeout, nosolution_timeout, infeasible };

const char* to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    double objective = 0.0;   // incumbent objective (exact path-arc count when canonical)
    double bound = 0.0;       // best proven lower bound
    double gap = 1.0;         // (incumbent - bound) / max(|incumbent|, 1e-9), clamped
    long nodes = 0;
    double wall_minutes = 0.0;
    std::map<std::string, long> cuts_per_family;  // newly pooled cuts
    long total_cuts = 0;
    EffectivenessStats family_stats;   // separator calls and generated cuts
    long monotonicity_violations = 0;  // resolve objective drops beyond tolerance
    double worst_resolve_delta = 0.0;
    std::vector<Cut> added_cuts;       // when collect_cuts
    std::optional<CanonicalSolution> solution;  // extracted when incumbent is canonical
    FractionalPoint incumbent_point;

    bool has_incumbent() const {
        return status == SolveStatus::optimal || status == SolveStatus::feasible_timeout;
    }
};

SolveResult solve_bnc(const Instance& inst, const BncConfig& config = {});

/// Node selection order: minimal bound, then lower depth, then FIFO.
struct NodeChoice {
    double bound = 0.0;
    int depth = 0;
    long seq = 0;
};
std::size_t select_node_index(const std::vector<NodeChoice>& open);

/// Most-fractional branching: fractional part closest to 1/2, ties by the
/// smallest linearized index. Throws std::invalid_argument on an integral
/// point.
int branch_var(const FractionalPoint& point);

}  // namespace rsabc

#endif
