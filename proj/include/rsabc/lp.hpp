#ifndef RSABC_LP_HPP
#define RSABC_LP_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "rsabc/model.hpp"

namespace rsabc {

struct LpProblem {
    int var_count = 0;
    std::vector<double> objective;     // size var_count, minimized
    std::vector<LinearRow> rows;
    std::vector<double> lower, upper;  // per-variable bounds within [0,1]
};

enum class LpStatus { optimal, infeasible };

/// Basis identifier: which column (structural or slack) is basic in each row,
/// plus the bound each nonbasic column rests at. Enough to warm-start.
struct LpBasis {
    std::vector<int> basic_of_row;
    std::vector<std::uint8_t> at_upper;
    bool empty() const { return basic_of_row.empty(); }
};

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    FractionalPoint x;  // structural values; empty when infeasible
    LpBasis basis;
    long iterations = 0;
    double phase1_infeasibility = 0.0;  // positive artificial objective when infeasible
};

class LpStalledError : public std::runtime_error {
public:
    explicit LpStalledError(long iterations)
        : std::runtime_error("simplex stalled: iteration limit " + std::to_string(iterations) +
                             " exceeded") {}
};

class LpInternalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bounded-variable primal simplex context. A context is single-threaded;
/// distinct contexts may run concurrently. Rows may be appended between
/// solves; the re-solve continues from the prior basis.
class LpContext {
public:
    explicit LpContext(LpProblem prob, long iteration_limit = 50000);
    ~LpContext();
    LpContext(LpContext&&) noexcept;
    LpContext& operator=(LpContext&&) noexcept;

    LpResult solve(const LpBasis* warm = nullptr);
    LpResult add_rows_resolve(std::vector<LinearRow> rows);

    const LpProblem& problem() const;
    bool solved() const;
    const LpResult& last() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

LpResult solve_lp(const LpProblem& prob, const LpBasis* warm = nullptr,
                  long iteration_limit = 50000);

}  // namespace rsabc

#endif
