#ifndef RSABC_STRATEGY_HPP
#define RSABC_STRATEGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rsabc {

enum class StrategyKind { brute_force, rnd, eff, eff_rnd, weighted };

std::optional<StrategyKind> strategy_from_name(const std::string& name);
const char* strategy_name(StrategyKind kind);

/// Per-family separator statistics: calls and generated cuts. The
/// effectiveness coefficient is cuts/calls, recomputed on demand.
class EffectivenessStats {
public:
    EffectivenessStats() = default;
    explicit EffectivenessStats(const std::vector<std::string>& families);

    void record(const std::string& family, long cuts_found);  // throws on unknown tag
    double coefficient(const std::string& family) const;
    long calls(const std::string& family) const;
    long cuts(const std::string& family) const;
    const std::map<std::string, std::pair<long, long>>& raw() const { return data_; }

private:
    std::map<std::string, std::pair<long, long>> data_;  // family -> {calls, cuts}
};

struct StrategyConfig {
    StrategyKind kind = StrategyKind::brute_force;
    int h = 10;                     // stop after cuts from h distinct families
    double random_call_prob = 0.1;  // EFF&RND substitution probability
    std::vector<std::string> presorted;  // fixed order; empty = use live stats
    std::uint64_t seed = 0;
};

/// Lazy call plan: the consumer pulls the next family, reports whether the
/// call produced cuts, and the plan applies the stopping rule.
class CallPlan {
public:
    CallPlan(const StrategyConfig& config, std::vector<std::string> order, bool use_weights,
             std::vector<double> weights, std::uint64_t seed);

    std::optional<std::string> next();
    void report(const std::string& family, long cuts_found);
    int families_with_cuts() const { return families_with_cuts_; }

private:
    StrategyKind kind_;
    int h_;
    double random_call_prob_;
    std::vector<std::string> order_;
    std::vector<double> weights_;  // call probabilities (weighted strategy)
    bool use_weights_;
    std::size_t cursor_ = 0;
    int families_with_cuts_ = 0;
    std::vector<std::string> pending_;  // not yet called (eff_rnd)
    std::mt19937_64 rng_;
};

/// Builds the round plan for the enabled families under the given strategy.
CallPlan plan_calls(const StrategyConfig& config, const EffectivenessStats& stats,
                    const std::vector<std::string>& enabled, std::uint64_t round_seed);

void record_outcome(EffectivenessStats& stats, const std::string& family, long cuts_found);

/// Coefficient CSV: family,coefficient per line. The presort loader returns
/// family tags sorted by coefficient descending (ties by tag).
void save_stats_csv(const EffectivenessStats& stats, const std::string& path);
std::vector<std::string> load_presort_csv(const std::string& path);

}  // namespace rsabc

#endif
