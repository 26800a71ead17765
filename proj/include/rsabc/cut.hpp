#ifndef RSABC_CUT_HPP
#define RSABC_CUT_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsabc/model.hpp"

namespace rsabc {

enum class CutKind : std::uint8_t { valid, equation, optimality };

const char* to_string(CutKind kind);

struct Cut {
    LinearRow row;
    CutKind kind = CutKind::valid;
    double violation = 0.0;  // at the separating point

    const std::string& family() const { return row.tag; }
};

/// Global cut pool with exact duplicate suppression (coefficients, sense and
/// rhs compared bitwise) and aging metadata for the active LP.
class CutPool {
public:
    struct Entry {
        Cut cut;
        int add_count = 0;
        long last_active_node = 0;
        int stale_lps = 0;   // consecutive node LPs with slack above threshold
        bool active = true;  // participates in node LPs
    };

    struct AddResult {
        std::size_t index;
        bool fresh;
    };

    /// Bumps add_count and reactivates either way; fresh is false for an
    /// exact duplicate.
    AddResult add_indexed(const Cut& cut, long node);
    bool add(const Cut& cut, long node) { return add_indexed(cut, node).fresh; }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<Entry>& entries() { return entries_; }

private:
    static std::string key_of(const LinearRow& row);
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> by_key_;
};

}  // namespace rsabc

#endif
