#ifndef RSABC_SYMMETRY_HPP
#define RSABC_SYMMETRY_HPP

#include <stdexcept>

#include "rsabc/cut.hpp"
#include "rsabc/instance.hpp"

namespace rsabc {

/// Raised when a cut does not match the coefficient pattern the flow or
/// endpoint mirror requires; carries the offending (demand, slot, arc).
class SymmetryError : public std::runtime_error {
public:
    SymmetryError(const std::string& what, int demand, int slot, int arc)
        : std::runtime_error(what + " (demand " + std::to_string(demand) + ", slot " +
                             std::to_string(slot) + ", arc " + std::to_string(arc) + ")"),
          demand(demand), slot(slot), arc(arc) {}
    int demand, slot, arc;
};

/// Slot mirror s -> sbar-s+1. An involution; applies to any cut and
/// preserves validity/optimality kind.
LinearRow mirror_slots(const LinearRow& row, const VarSpace& vars);
Cut mirror_slots(const Cut& cut, const VarSpace& vars);

/// Flow mirror at a node j that is no demand endpoint: swaps the (constant
/// per demand and slot) coefficients of delta+(j) and delta-(j).
Cut mirror_node_flow(const Cut& cut, int node, const Instance& inst);

/// Endpoint mirror for demand d: swaps the constant-per-slot coefficients of
/// delta+(s(d)) and delta-(t(d)); requires zeros on delta-(s(d)), delta+(t(d))
/// and on all endpoint arcs for the other demands.
Cut mirror_demand_endpoints(const Cut& cut, int demand, const Instance& inst);

}  // namespace rsabc

#endif
