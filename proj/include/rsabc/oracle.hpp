#ifndef RSABC_ORACLE_HPP
#define RSABC_ORACLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rsabc/cut.hpp"
#include "rsabc/instance.hpp"
#include "rsabc/lp.hpp"
#include "rsabc/parallel.hpp"
#include "rsabc/pools.hpp"

namespace rsabc {

struct EnumLimits {
    int max_paths_per_demand = 200;
    long max_total = 100000;  // raw path x slot combinations before filtering
};

/// Enumeration refuses (rather than silently truncating) above the limits.
class EnumerationLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleEnumeration {
    std::vector<CanonicalSolution> solutions;  // all feasible, deterministic order
    std::vector<int> objectives;               // total path arcs per solution
    int optimum = -1;                          // -1 when no feasible solution
    std::vector<int> optimal_ids;
};

OracleEnumeration enumerate_canonical(const Instance& inst, const EnumLimits& limits = {},
                                      Exec exec = Exec::openmp);

struct OracleOptimum {
    bool feasible = false;
    int objective = -1;
    std::vector<CanonicalSolution> optima;
};

OracleOptimum oracle_optimum(const Instance& inst, const EnumLimits& limits = {});

struct CutAudit {
    int audited = 0;                    // number of feasible solutions checked
    bool valid_on_all = true;
    bool holds_at_some_optimum = false;
    std::vector<int> counterexamples;   // solution ids violating the cut
};

/// Evaluates a cut on every embedded canonical solution. valid/equation
/// kinds require valid_on_all; optimality requires holds_at_some_optimum.
CutAudit audit_cut(const Instance& inst, const Cut& cut, const EnumLimits& limits = {});
std::vector<CutAudit> audit_cuts(const OracleEnumeration& enumeration, const Instance& inst,
                                 const std::vector<Cut>& cuts);
bool audit_passes(const CutAudit& audit, CutKind kind);

struct WitnessQuery {
    const Instance* inst = nullptr;
    std::vector<LinearRow> base_rows;
    LinearRow target;
};

struct WitnessResult {
    bool base_infeasible = false;  // vacuous query
    bool found = false;
    double violation = 0.0;
    FractionalPoint point;
};

/// LP search for a fractional point satisfying the base rows but violating
/// the target by more than tol::witness. "Not found" is not an implication
/// proof.
WitnessResult find_witness(const WitnessQuery& query);

/// Model rows (2)-(7) plus the full row sets of the named families.
std::vector<LinearRow> build_witness_base(const Instance& inst, const StructurePools& pools,
                                          const std::vector<std::string>& families);

}  // namespace rsabc

#endif
