#include "rsabc/bench.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace rsabc {

double compute_tau(const TauInput& in) {
    const double p = in.minutes / 4.0;
    switch (in.outcome) {
        case RunOutcome::solved: return in.minutes;
        case RunOutcome::feasible_timeout: return in.minutes + p + in.gap * p;
        case RunOutcome::nosolution_timeout: return in.minutes + 4.0 * p;
    }
    return in.minutes;
}

RunOutcome outcome_of(const SolveResult& result) {
    switch (result.status) {
        case SolveStatus::feasible_timeout: return RunOutcome::feasible_timeout;
        case SolveStatus::nosolution_timeout: return RunOutcome::nosolution_timeout;
        case SolveStatus::optimal:
        case SolveStatus::infeasible: return RunOutcome::solved;  // certainty reached
    }
    return RunOutcome::solved;
}

double tau_of(const SolveResult& result) {
    return compute_tau({result.wall_minutes, result.gap, outcome_of(result)});
}

std::vector<SuiteEntry> load_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);
    std::string dir;
    auto slash = path.find_last_of("/\\");
    if (slash != std::string::npos) dir = path.substr(0, slash + 1);

    std::vector<SuiteEntry> suite;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string file;
        if (!(ss >> file)) continue;
        SuiteEntry entry;
        entry.path = file.front() == '/' ? file : dir + file;
        entry.instance = parse_instance_file(entry.path);
        std::uint64_t seed;
        while (ss >> seed) entry.seeds.push_back(seed);
        if (entry.seeds.empty()) entry.seeds.push_back(0);
        suite.push_back(std::move(entry));
    }
    return suite;
}

std::string config_digest(const BncConfig& config) {
    std::ostringstream ss;
    ss << strategy_name(config.strategy.kind) << ";h=" << config.strategy.h
       << ";tl=" << config.time_limit_minutes << ";opt=" << config.use_optimality_cuts
       << ";static=" << config.static_rows << ";seed=" << config.seed << ";fam=";
    if (config.enabled_families) {
        for (const auto& f : *config.enabled_families) ss << f << "|";
    } else {
        ss << "all";
    }
    ss << ";eps=";
    for (const auto& [f, v] : config.eps) ss << f << "=" << v << "|";
    std::size_t h = std::hash<std::string>{}(ss.str());
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016zx", h);
    return buf;
}

namespace {

/// Best tau over `runs` deterministic re-runs with distinct seeds.
struct BestRun {
    double tau = std::numeric_limits<double>::infinity();
    bool timed_out = true;
    long cuts = 0;
};

BestRun best_of_runs(const Instance& inst, const BncConfig& base,
                     const std::vector<std::uint64_t>& seeds, int runs) {
    BestRun best;
    for (int r = 0; r < runs; ++r) {
        BncConfig cfg = base;
        cfg.seed = r < static_cast<int>(seeds.size()) ? seeds[r]
                                                      : seeds.back() + 0x9E37ull * (r + 1);
        SolveResult res = solve_bnc(inst, cfg);
        double tau = tau_of(res);
        if (tau < best.tau) {
            best.tau = tau;
            best.timed_out = res.status == SolveStatus::feasible_timeout ||
                             res.status == SolveStatus::nosolution_timeout;
            best.cuts = res.total_cuts;
        }
    }
    return best;
}

}  // namespace

std::vector<double> default_eps_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.1 * i);
    return grid;
}

std::vector<CalibrationRow> calibrate_eps(const std::vector<SuiteEntry>& suite,
                                          const std::string& family,
                                          const std::vector<double>& grid, const BncConfig& base,
                                          int runs) {
    std::vector<CalibrationRow> rows;
    for (double eps : grid) {
        BncConfig cfg = base;
        cfg.enabled_families = std::vector<std::string>{family};
        cfg.eps[family] = eps;
        CalibrationRow row{family, eps, 0.0, 0};
        for (const auto& entry : suite) {
            BestRun best = best_of_runs(entry.instance, cfg, entry.seeds, runs);
            row.sum_tau += best.tau;
            row.cuts += best.cuts;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComparisonRow> compare_strategies(const std::vector<SuiteEntry>& suite,
                                              const std::vector<StrategyKind>& strategies,
                                              const std::vector<int>& h_grid,
                                              double time_limit_minutes, const BncConfig& base,
                                              int runs, bool include_plain_bnb) {
    struct Config {
        std::string name;
        int h;
        BncConfig cfg;
    };
    std::vector<Config> configs;
    if (include_plain_bnb) {
        BncConfig cfg = base;
        cfg.time_limit_minutes = time_limit_minutes;
        cfg.enabled_families = std::vector<std::string>{};  // plain branch and bound
        configs.push_back({"bnb", 0, cfg});
    }
    for (StrategyKind kind : strategies) {
        for (int h : h_grid) {
            BncConfig cfg = base;
            cfg.time_limit_minutes = time_limit_minutes;
            cfg.strategy.kind = kind;
            cfg.strategy.h = h;
            configs.push_back({strategy_name(kind), h, cfg});
            if (kind == StrategyKind::brute_force) break;  // h is irrelevant
        }
    }

    // best tau per (instance, config)
    std::vector<std::vector<BestRun>> best(suite.size(), std::vector<BestRun>(configs.size()));
    for (std::size_t i = 0; i < suite.size(); ++i)
        for (std::size_t c = 0; c < configs.size(); ++c)
            best[i][c] = best_of_runs(suite[i].instance, configs[c].cfg, suite[i].seeds, runs);

    // Drop instances on which every configuration timed out.
    std::vector<char> keep(suite.size(), 0);
    for (std::size_t i = 0; i < suite.size(); ++i)
        for (const auto& b : best[i])
            if (!b.timed_out) keep[i] = 1;

    std::vector<ComparisonRow> rows;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        ComparisonRow row{configs[c].name, configs[c].h, 0.0, 0};
        for (std::size_t i = 0; i < suite.size(); ++i) {
            if (!keep[i]) continue;
            row.sum_tau += best[i][c].tau;
            if (best[i][c].timed_out) ++row.timeouts;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_calibration_csv(const std::vector<CalibrationRow>& rows, std::ostream& out) {
    out << "family,eps,sum_tau,cuts\n";
    for (const auto& r : rows)
        out << r.family << "," << r.eps << "," << r.sum_tau << "," << r.cuts << "\n";
}

void write_comparison_csv(const std::vector<ComparisonRow>& rows, std::ostream& out) {
    out << "strategy,h,sum_tau,timeouts\n";
    for (const auto& r : rows)
        out << r.strategy << "," << r.h << "," << r.sum_tau << "," << r.timeouts << "\n";
}

}  // namespace rsabc
