#include "rsabc/appconfig.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rsabc/separation.hpp"
#include "rsabc/strategy.hpp"

namespace rsabc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument("expected boolean, got '" + v + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::optional<std::vector<std::string>> parse_families(const std::string& spec) {
    if (spec == "all") return std::nullopt;
    if (spec == "none") return std::vector<std::string>{};
    std::vector<std::string> out;
    for (const auto& tag : split(spec, ',')) {
        if (!is_family_tag(tag)) throw std::invalid_argument("unknown family tag: " + tag);
        out.push_back(tag);
    }
    return out;
}

void apply_key_values(BncConfig& config, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "time-limit") {
            config.time_limit_minutes = std::stod(value);
        } else if (key == "strategy") {
            auto kind = strategy_from_name(value);
            if (!kind) throw std::invalid_argument("unknown strategy: " + value);
            config.strategy.kind = *kind;
        } else if (key == "h") {
            config.strategy.h = std::stoi(value);
        } else if (key == "seed") {
            config.seed = std::stoull(value);
        } else if (key == "families") {
            config.enabled_families = parse_families(value);
        } else if (key == "eps") {
            for (const auto& item : split(value, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("eps entry must be family=value: " + item);
                std::string fam = trim(item.substr(0, eq));
                if (!is_family_tag(fam)) throw std::invalid_argument("unknown family tag: " + fam);
                config.eps[fam] = std::stod(item.substr(eq + 1));
            }
        } else if (key == "optimality-cuts") {
            config.use_optimality_cuts = parse_bool(value);
        } else if (key == "static-rows") {
            config.static_rows = parse_bool(value);
        } else if (key == "presort") {
            config.strategy.presorted = load_presort_csv(value);
        } else if (key == "serial") {
            config.exec = parse_bool(value) ? Exec::serial : Exec::openmp;
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

}  // namespace rsabc
