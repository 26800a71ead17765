#include "rsabc/instance.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace rsabc {

Digraph::Digraph(int node_count, std::vector<Arc> arcs) : n_(node_count), arcs_(std::move(arcs)) {
    if (n_ <= 0) throw SemanticError("node count must be positive");
    std::set<std::pair<int, int>> seen;
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
        const Arc& a = arcs_[e];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw SemanticError("arc endpoint out of range: (" + std::to_string(a.tail) + "," +
                                std::to_string(a.head) + ")");
        if (a.tail == a.head)
            throw SemanticError("self-loop at node " + std::to_string(a.tail));
        if (!seen.insert({a.tail, a.head}).second)
            throw SemanticError("duplicate arc (" + std::to_string(a.tail) + "," +
                                std::to_string(a.head) + ")");
        out_[a.tail].push_back(e);
        in_[a.head].push_back(e);
    }
}

int Digraph::find_arc(int tail, int head) const {
    if (tail < 0 || tail >= n_) return -1;
    for (int e : out_[tail])
        if (arcs_[e].head == head) return e;
    return -1;
}

bool Digraph::has_path(int from, int to) const {
    if (from == to) return true;
    std::vector<char> vis(n_, 0);
    std::deque<int> q{from};
    vis[from] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e : out_[v]) {
            int h = arcs_[e].head;
            if (h == to) return true;
            if (!vis[h]) {
                vis[h] = 1;
                q.push_back(h);
            }
        }
    }
    return false;
}

void Instance::validate() const {
    if (slots <= 0) throw SemanticError("slot count must be positive");
    for (std::size_t i = 0; i < demands.size(); ++i) {
        const Demand& d = demands[i];
        if (d.source < 0 || d.source >= graph.node_count() || d.target < 0 ||
            d.target >= graph.node_count())
            throw SemanticError("demand " + std::to_string(i) + ": endpoint out of range");
        if (d.source == d.target)
            throw SemanticError("demand " + std::to_string(i) + ": source equals target");
        if (d.volume < 1)
            throw SemanticError("demand " + std::to_string(i) + ": volume must be positive");
        if (d.volume > slots)
            throw SemanticError("demand " + std::to_string(i) + ": volume exceeds slots");
    }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(std::istream& in, const std::string& default_name) {
    Instance inst;
    inst.name = default_name;

    std::string line;
    int line_no = 0;
    bool header_seen = false;
    int want_arcs = 0, want_demands = 0, node_count = 0;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // `# name: X` labels the instance; other comments are ignored.
            std::string comment = line.substr(hash + 1);
            auto key = comment.find("name:");
            if (key != std::string::npos) {
                std::string n = comment.substr(key + 5);
                auto b = n.find_first_not_of(" \t");
                auto e = n.find_last_not_of(" \t\r");
                if (b != std::string::npos) inst.name = n.substr(b, e - b + 1);
            }
            line = line.substr(0, hash);
        }
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (!header_seen) {
            if (toks[0] != "rsa" || toks.size() != 5)
                throw ParseError(line_no, "expected header 'rsa <n> <arcs> <demands> <slots>'");
            node_count = parse_int(toks[1], line_no, "node count");
            want_arcs = parse_int(toks[2], line_no, "arc count");
            want_demands = parse_int(toks[3], line_no, "demand count");
            inst.slots = parse_int(toks[4], line_no, "slot count");
            if (node_count <= 0) throw ParseError(line_no, "node count must be positive");
            if (inst.slots <= 0) throw ParseError(line_no, "slot count must be positive");
            header_seen = true;
        } else if (toks[0] == "arc") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'arc <tail> <head>'");
            arcs.push_back({parse_int(toks[1], line_no, "tail"), parse_int(toks[2], line_no, "head")});
        } else if (toks[0] == "demand") {
            if (toks.size() != 4)
                throw ParseError(line_no, "expected 'demand <src> <dst> <volume>'");
            inst.demands.push_back({parse_int(toks[1], line_no, "source"),
                                    parse_int(toks[2], line_no, "target"),
                                    parse_int(toks[3], line_no, "volume")});
        } else {
            throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!header_seen) throw ParseError(line_no, "missing 'rsa' header");
    if (static_cast<int>(arcs.size()) != want_arcs)
        throw ParseError(line_no, "header declares " + std::to_string(want_arcs) + " arcs, found " +
                                      std::to_string(arcs.size()));
    if (static_cast<int>(inst.demands.size()) != want_demands)
        throw ParseError(line_no, "header declares " + std::to_string(want_demands) +
                                      " demands, found " + std::to_string(inst.demands.size()));

    inst.graph = Digraph(node_count, std::move(arcs));
    inst.validate();
    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SemanticError("cannot open instance file: " + path);
    // Default name: file stem.
    auto slash = path.find_last_of("/\\");
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return parse_instance(in, stem);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
    out << "# name: " << inst.name << "\n";
    out << "rsa " << inst.graph.node_count() << " " << inst.graph.arc_count() << " "
        << inst.demands.size() << " " << inst.slots << "\n";
    for (const Arc& a : inst.graph.arcs()) out << "arc " << a.tail << " " << a.head << "\n";
    for (const Demand& d : inst.demands)
        out << "demand " << d.source << " " << d.target << " " << d.volume << "\n";
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream ss;
    serialize_instance(inst, ss);
    return ss.str();
}

Instance generate_instance(const GeneratorParams& p) {
    if (p.nodes < 2) throw GeneratorError("need at least 2 nodes");
    if (p.density <= 0.0 || p.density > 1.0) throw GeneratorError("density must be in (0,1]");
    if (p.volume_min < 1 || p.volume_min > p.volume_max)
        throw GeneratorError("invalid volume range");
    if (p.volume_max > p.slots) throw GeneratorError("volume_max exceeds slots");
    if (p.demand_count < 1) throw GeneratorError("need at least one demand");

    std::mt19937_64 rng(p.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<Arc> arcs;
    for (int i = 0; i < p.nodes; ++i)
        for (int j = 0; j < p.nodes; ++j)
            if (i != j && coin(rng) < p.density) arcs.push_back({i, j});
    Digraph g(p.nodes, std::move(arcs));

    Instance inst;
    std::uniform_int_distribution<int> node_pick(0, p.nodes - 1);
    std::uniform_int_distribution<int> vol_pick(p.volume_min, p.volume_max);
    for (int k = 0; k < p.demand_count; ++k) {
        int src = -1, dst = -1;
        bool ok = false;
        for (int attempt = 0; attempt < p.retry_budget; ++attempt) {
            src = node_pick(rng);
            dst = node_pick(rng);
            if (src != dst && g.has_path(src, dst)) {
                ok = true;
                break;
            }
        }
        if (!ok) throw GeneratorError("retry budget exhausted: cannot connect demand endpoints");
        inst.demands.push_back({src, dst, vol_pick(rng)});
    }
    inst.graph = std::move(g);
    inst.slots = p.slots;
    inst.name = "gen-seed" + std::to_string(p.seed);
    inst.validate();
    return inst;
}

FeasibilityReport check_canonical_feasible(const Instance& inst, const CanonicalSolution& sol) {
    FeasibilityReport rep;
    auto fail = [&rep](std::string msg) {
        rep.feasible = false;
        rep.violations.push_back(std::move(msg));
    };

    if (sol.assignments.size() != inst.demands.size()) {
        fail("solution has " + std::to_string(sol.assignments.size()) + " entries for " +
             std::to_string(inst.demands.size()) + " demands");
        return rep;
    }

    const int k = static_cast<int>(inst.demands.size());
    for (int i = 0; i < k; ++i) {
        const Demand& d = inst.demands[i];
        const DemandAssignment& a = sol.assignments[i];
        std::string tag = "demand " + std::to_string(i) + ": ";

        if (a.path.empty()) {
            fail(tag + "empty path");
            continue;
        }
        bool arcs_ok = true;
        for (int e : a.path)
            if (e < 0 || e >= inst.graph.arc_count()) {
                fail(tag + "arc id " + std::to_string(e) + " out of range");
                arcs_ok = false;
            }
        if (!arcs_ok) continue;

        std::vector<int> visited{inst.graph.arc(a.path.front()).tail};
        bool chain_ok = true;
        for (std::size_t j = 0; j < a.path.size(); ++j) {
            const Arc& arc = inst.graph.arc(a.path[j]);
            if (arc.tail != visited.back()) {
                fail(tag + "arcs do not chain at position " + std::to_string(j));
                chain_ok = false;
                break;
            }
            visited.push_back(arc.head);
        }
        if (!chain_ok) continue;
        if (visited.front() != d.source) fail(tag + "path does not start at source");
        if (visited.back() != d.target) fail(tag + "path does not end at target");
        std::set<int> uniq(visited.begin(), visited.end());
        if (uniq.size() != visited.size()) fail(tag + "path is not simple");

        if (a.start_slot < 1 || a.start_slot + d.volume - 1 > inst.slots)
            fail(tag + "slot interval [" + std::to_string(a.start_slot) + "," +
                 std::to_string(a.start_slot + d.volume - 1) + "] outside 1.." +
                 std::to_string(inst.slots));
    }

    // Demands sharing an arc must occupy disjoint slot intervals.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const auto& ai = sol.assignments[i];
            const auto& aj = sol.assignments[j];
            bool share = false;
            for (int e : ai.path)
                if (std::find(aj.path.begin(), aj.path.end(), e) != aj.path.end()) {
                    share = true;
                    break;
                }
            if (!share) continue;
            int li = ai.start_slot, ri = ai.start_slot + inst.demands[i].volume - 1;
            int lj = aj.start_slot, rj = aj.start_slot + inst.demands[j].volume - 1;
            if (li <= rj && lj <= ri)
                fail("demands " + std::to_string(i) + " and " + std::to_string(j) +
                     " overlap: intervals [" + std::to_string(li) + "," + std::to_string(ri) +
                     "] and [" + std::to_string(lj) + "," + std::to_string(rj) +
                     "] on a shared arc");
        }
    }
    return rep;
}

int total_path_arcs(const CanonicalSolution& sol) {
    int total = 0;
    for (const auto& a : sol.assignments) total += static_cast<int>(a.path.size());
    return total;
}

}  // namespace rsabc
