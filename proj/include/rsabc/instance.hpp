#ifndef RSABC_INSTANCE_HPP
#define RSABC_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsabc {

struct Arc {
    int tail = -1;
    int head = -1;
    bool operator==(const Arc&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

class SemanticError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GeneratorError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Directed graph with a fixed arc indexing. The arc list order is the
/// canonical arc index used by every module downstream.
class Digraph {
public:
    Digraph() = default;
    Digraph(int node_count, std::vector<Arc> arcs);  // throws SemanticError

    int node_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int e) const { return arcs_[e]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_arcs(int v) const { return out_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_[v]; }

    /// Arc id of (tail, head), or -1.
    int find_arc(int tail, int head) const;
    bool has_path(int from, int to) const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

struct Demand {
    int source = -1;
    int target = -1;
    int volume = 0;  // required contiguous slots
    bool operator==(const Demand&) const = default;
};

struct Instance {
    Digraph graph;
    std::vector<Demand> demands;
    int slots = 0;  // number of available slots; slot ids are 1..slots
    std::string name = "instance";

    void validate() const;  // throws SemanticError
    bool operator==(const Instance& o) const {
        return graph == o.graph && demands == o.demands && slots == o.slots && name == o.name;
    }
};

/// One lightpath: a simple directed path (arc ids) plus the first of the
/// exactly volume contiguous slots it occupies.
struct DemandAssignment {
    std::vector<int> path;
    int start_slot = 1;
    bool operator==(const DemandAssignment&) const = default;
};

struct CanonicalSolution {
    std::vector<DemandAssignment> assignments;  // one per demand, demand order
    bool operator==(const CanonicalSolution&) const = default;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<std::string> violations;
};

struct GeneratorParams {
    int nodes = 5;
    double density = 0.5;        // arc probability, in (0,1]
    int demand_count = 2;
    int volume_min = 1;
    int volume_max = 3;
    int slots = 6;
    std::uint64_t seed = 0;
    int retry_budget = 1000;     // endpoint redraws per demand
};

Instance parse_instance(std::istream& in, const std::string& default_name = "instance");
Instance parse_instance_file(const std::string& path);
void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

Instance generate_instance(const GeneratorParams& params);

FeasibilityReport check_canonical_feasible(const Instance& inst, const CanonicalSolution& sol);

/// Objective value of a canonical solution: total number of path arcs.
int total_path_arcs(const CanonicalSolution& sol);

}  // namespace rsabc

#endif
