#include "rsabc/cut.hpp"

#include <cstdio>

namespace rsabc {

std::string CutPool::key_of(const LinearRow& row) {
    // Bitwise-exact canonical key: hex floats, sense, rhs.
    std::string key;
    key.reserve(row.coeffs.size() * 24 + 32);
    char buf[40];
    for (const auto& [var, c] : row.coeffs) {
        std::snprintf(buf, sizeof buf, "%d:%a;", var, c);
        key += buf;
    }
    std::snprintf(buf, sizeof buf, "|%d|%a", static_cast<int>(row.sense), row.rhs);
    key += buf;
    return key;
}

CutPool::AddResult CutPool::add_indexed(const Cut& cut, long node) {
    std::string key = key_of(cut.row);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) {
        Entry& e = entries_[it->second];
        ++e.add_count;
        e.last_active_node = node;
        e.stale_lps = 0;
        e.active = true;
        return {it->second, false};
    }
    Entry e;
    e.cut = cut;
    e.add_count = 1;
    e.last_active_node = node;
    entries_.push_back(std::move(e));
    by_key_.emplace(std::move(key), entries_.size() - 1);
    return {entries_.size() - 1, true};
}

}  // namespace rsabc
