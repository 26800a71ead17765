#include "rsabc/strategy.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace rsabc {

std::optional<StrategyKind> strategy_from_name(const std::string& name) {
    if (name == "brute-force") return StrategyKind::brute_force;
    if (name == "rnd") return StrategyKind::rnd;
    if (name == "eff") return StrategyKind::eff;
    if (name == "eff-rnd") return StrategyKind::eff_rnd;
    if (name == "weighted") return StrategyKind::weighted;
    return std::nullopt;
}

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::brute_force: return "brute-force";
        case StrategyKind::rnd: return "rnd";
        case StrategyKind::eff: return "eff";
        case StrategyKind::eff_rnd: return "eff-rnd";
        case StrategyKind::weighted: return "weighted";
    }
    return "?";
}

EffectivenessStats::EffectivenessStats(const std::vector<std::string>& families) {
    for (const auto& f : families) data_[f] = {0, 0};
}

void EffectivenessStats::record(const std::string& family, long cuts_found) {
    auto it = data_.find(family);
    if (it == data_.end()) throw std::invalid_argument("unknown family tag: " + family);
    it->second.first += 1;
    it->second.second += cuts_found;
}

double EffectivenessStats::coefficient(const std::string& family) const {
    auto it = data_.find(family);
    if (it == data_.end()) throw std::invalid_argument("unknown family tag: " + family);
    if (it->second.first == 0) return 0.0;
    return static_cast<double>(it->second.second) / static_cast<double>(it->second.first);
}

long EffectivenessStats::calls(const std::string& family) const {
    auto it = data_.find(family);
    return it == data_.end() ? 0 : it->second.first;
}

long EffectivenessStats::cuts(const std::string& family) const {
    auto it = data_.find(family);
    return it == data_.end() ? 0 : it->second.second;
}

CallPlan::CallPlan(const StrategyConfig& config, std::vector<std::string> order,
                   bool use_weights, std::vector<double> weights, std::uint64_t seed)
    : kind_(config.kind),
      h_(config.h),
      random_call_prob_(config.random_call_prob),
      order_(std::move(order)),
      weights_(std::move(weights)),
      use_weights_(use_weights),
      rng_(seed) {
    if (kind_ == StrategyKind::eff_rnd) pending_ = order_;
}

std::optional<std::string> CallPlan::next() {
    if (kind_ != StrategyKind::brute_force && families_with_cuts_ >= h_) return std::nullopt;

    if (kind_ == StrategyKind::eff_rnd) {
        while (!pending_.empty()) {
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            std::size_t pick = 0;
            if (pending_.size() > 1 && coin(rng_) < random_call_prob_) {
                std::uniform_int_distribution<std::size_t> uni(0, pending_.size() - 1);
                pick = uni(rng_);
            }
            std::string family = pending_[pick];
            pending_.erase(pending_.begin() + static_cast<long>(pick));
            return family;
        }
        return std::nullopt;
    }

    while (cursor_ < order_.size()) {
        std::size_t i = cursor_++;
        if (use_weights_) {
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            if (coin(rng_) >= weights_[i]) continue;  // skipped this round
        }
        return order_[i];
    }
    return std::nullopt;
}

void CallPlan::report(const std::string&, long cuts_found) {
    if (cuts_found > 0) ++families_with_cuts_;
}

CallPlan plan_calls(const StrategyConfig& config, const EffectivenessStats& stats,
                    const std::vector<std::string>& enabled, std::uint64_t round_seed) {
    std::vector<std::string> order;
    if (!config.presorted.empty()) {
        // Fixed order from prior experiments; live stats are not consulted
        // for ordering. Enabled families missing from the list follow in
        // tag order.
        for (const auto& f : config.presorted)
            if (std::find(enabled.begin(), enabled.end(), f) != enabled.end())
                order.push_back(f);
        for (const auto& f : enabled)
            if (std::find(order.begin(), order.end(), f) == order.end()) order.push_back(f);
    } else {
        order = enabled;
        std::sort(order.begin(), order.end());
        if (config.kind == StrategyKind::eff || config.kind == StrategyKind::eff_rnd ||
            config.kind == StrategyKind::weighted) {
            std::stable_sort(order.begin(), order.end(),
                             [&](const std::string& a, const std::string& b) {
                                 double ca = stats.coefficient(a), cb = stats.coefficient(b);
                                 if (ca != cb) return ca > cb;
                                 return a < b;
                             });
        }
    }

    std::mt19937_64 rng(round_seed ^ config.seed);
    if (config.kind == StrategyKind::rnd) std::shuffle(order.begin(), order.end(), rng);

    bool use_weights = config.kind == StrategyKind::weighted;
    std::vector<double> weights;
    if (use_weights) {
        double max_coeff = 0.0;
        for (const auto& f : order) max_coeff = std::max(max_coeff, stats.coefficient(f));
        weights.reserve(order.size());
        for (const auto& f : order)
            weights.push_back(max_coeff <= 0.0
                                  ? 1.0
                                  : 0.1 + 0.9 * stats.coefficient(f) / max_coeff);
    }
    return CallPlan(config, std::move(order), use_weights, std::move(weights), rng());
}

void record_outcome(EffectivenessStats& stats, const std::string& family, long cuts_found) {
    stats.record(family, cuts_found);
}

void save_stats_csv(const EffectivenessStats& stats, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stats csv: " + path);
    out << "family,coefficient\n";
    for (const auto& [family, counts] : stats.raw()) {
        double coeff = counts.first == 0
                           ? 0.0
                           : static_cast<double>(counts.second) / static_cast<double>(counts.first);
        out << family << "," << coeff << "\n";
    }
}

std::vector<std::string> load_presort_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read presort csv: " + path);
    std::vector<std::pair<std::string, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        std::string family = line.substr(0, comma);
        if (family == "family") continue;  // header
        try {
            double coeff = std::stod(line.substr(comma + 1));
            rows.push_back({family, coeff});
        } catch (const std::exception&) {
            continue;
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> order;
    for (auto& [family, coeff] : rows) order.push_back(family);
    return order;
}

}  // namespace rsabc
