#ifndef RSABC_MODEL_HPP
#define RSABC_MODEL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rsabc/instance.hpp"

namespace rsabc {

/// Variable index space for u[d][e][s], s in 1..slots. Linearization order
/// is ((d*|E|)+e)*slots + (s-1); the fictitious slot slots+1 is never
/// materialized (it is identically zero).
struct VarSpace {
    int demands = 0;
    int arcs = 0;
    int slots = 0;

    int count() const { return demands * arcs * slots; }
    int index(int d, int e, int s) const { return ((d * arcs) + e) * slots + (s - 1); }
    int demand_of(int var) const { return var / (arcs * slots); }
    int arc_of(int var) const { return (var / slots) % arcs; }
    int slot_of(int var) const { return var % slots + 1; }

    bool operator==(const VarSpace&) const = default;
};

enum class Sense { le, eq, ge };

struct LinearRow {
    std::vector<std::pair<int, double>> coeffs;  // sorted by var index, no zeros
    Sense sense = Sense::le;
    double rhs = 0.0;
    std::string tag;

    bool operator==(const LinearRow&) const = default;
};

/// Accumulates coefficients, merging duplicates and dropping zeros.
class RowBuilder {
public:
    explicit RowBuilder(std::string tag, Sense sense = Sense::le, double rhs = 0.0)
        : tag_(std::move(tag)), sense_(sense), rhs_(rhs) {}

    void add(int var, double coeff);
    void set_rhs(double rhs) { rhs_ = rhs; }
    void set_sense(Sense s) { sense_ = s; }
    LinearRow build() const;

private:
    std::string tag_;
    Sense sense_;
    double rhs_;
    std::vector<std::pair<int, double>> entries_;
};

using FractionalPoint = std::vector<double>;

struct RowEval {
    double lhs = 0.0;
    double violation = 0.0;
};

/// violation: le -> max(0, lhs-rhs); eq -> |lhs-rhs|; ge -> max(0, rhs-lhs).
RowEval evaluate_row(const LinearRow& row, const FractionalPoint& point);
double row_lhs(const LinearRow& row, const FractionalPoint& point);

struct ModelOptions {
    /// Install the static optimality rows (noOutFromDst zero-fixings and the
    /// contiguityEqs equations) at build time.
    bool static_optimality_rows = false;
};

struct Model {
    VarSpace vars;
    std::vector<double> objective;  // 1/v(d) per variable
    std::vector<LinearRow> rows;

    int count_rows(const std::string& tag) const;
};

/// Builds the arc-slot integer program: min sum u/v(d) subject to flow
/// conservation, source volume, source in-degree zero, clash and contiguity
/// rows, variables in [0,1].
Model build_model(const Instance& inst, const ModelOptions& opts = {});

/// 0/1 point of a feasible canonical solution; throws SemanticError if the
/// solution fails check_canonical_feasible.
FractionalPoint embed_canonical(const Instance& inst, const CanonicalSolution& sol);

double objective_value(const Model& model, const FractionalPoint& point);

/// Slot-residue balance equations (valid under the exactly-v(d) convention);
/// installable at build time and enumerable as the contiguityEqs family.
/// Demands with volume 1 yield only the trivial row and are skipped.
std::vector<LinearRow> contiguity_eq_rows(const Instance& inst);

void dump_model(const Model& model, std::ostream& out);
std::string row_to_string(const LinearRow& row, const VarSpace& vars);

}  // namespace rsabc

#endif
