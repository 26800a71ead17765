#ifndef RSABC_APPCONFIG_HPP
#define RSABC_APPCONFIG_HPP

#include <map>
#include <string>

#include "rsabc/bnc.hpp"

namespace rsabc {

/// key=value lines, # comments. Keys: time-limit, strategy, h, seed,
/// families (all|none|csv), eps (fam=val csv), optimality-cuts, static-rows,
/// presort, serial. Unknown keys are an error.
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

/// Applies the file values onto a config; command-line flags are applied
/// afterwards by the caller and therefore override.
void apply_key_values(BncConfig& config, const std::map<std::string, std::string>& kv);

/// Parses a families spec: "all", "none", or a comma-separated tag list.
std::optional<std::vector<std::string>> parse_families(const std::string& spec);

}  // namespace rsabc

#endif
