#ifndef RSABC_BENCH_HPP
#define RSABC_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rsabc/bnc.hpp"
#include "rsabc/instance.hpp"

namespace rsabc {

enum class RunOutcome { solved, feasible_timeout, nosolution_timeout };

struct TauInput {
    double minutes = 0.0;
    double gap = 0.0;  // in [0,1]
    RunOutcome outcome = RunOutcome::solved;
};

/// Penalty score: p = t/4; solved -> t; feasible at timeout -> t + p + g*p;
/// nothing found -> t + 4p.
double compute_tau(const TauInput& in);
double tau_of(const SolveResult& result);
RunOutcome outcome_of(const SolveResult& result);

/// Suite file: one instance per line, `<path> <seed> <seed> ...`, comments
/// with #. Paths are resolved relative to the suite file.
struct SuiteEntry {
    std::string path;
    Instance instance;
    std::vector<std::uint64_t> seeds;
};
std::vector<SuiteEntry> load_suite(const std::string& path);

struct RunRecord {
    std::string instance;
    std::string config_digest;
    double tau = 0.0;
    SolveStatus status = SolveStatus::infeasible;
    double objective = 0.0;
    double minutes = 0.0;
    long cuts = 0;
};

std::string config_digest(const BncConfig& config);

struct CalibrationRow {
    std::string family;
    double eps = 0.0;
    double sum_tau = 0.0;
    long cuts = 0;
};

/// Runs each instance at least `runs` times per epsilon with only `family`
/// enabled, keeps the best tau per instance, reports the sums.
std::vector<CalibrationRow> calibrate_eps(const std::vector<SuiteEntry>& suite,
                                          const std::string& family,
                                          const std::vector<double>& grid,
                                          const BncConfig& base, int runs = 3);

std::vector<double> default_eps_grid();  // {0.0, 0.1, ..., 2.0}

struct ComparisonRow {
    std::string strategy;  // "bnb" for the plain branch-and-bound baseline
    int h = 0;
    double sum_tau = 0.0;
    int timeouts = 0;
};

/// Best-of-`runs` tau per (instance, configuration); instances on which every
/// configuration timed out are excluded from all sums.
std::vector<ComparisonRow> compare_strategies(const std::vector<SuiteEntry>& suite,
                                              const std::vector<StrategyKind>& strategies,
                                              const std::vector<int>& h_grid,
                                              double time_limit_minutes, const BncConfig& base,
                                              int runs = 2, bool include_plain_bnb = true);

void write_calibration_csv(const std::vector<CalibrationRow>& rows, std::ostream& out);
void write_comparison_csv(const std::vector<ComparisonRow>& rows, std::ostream& out);

}  // namespace rsabc

#endif
