#include "rsabc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsabc/tolerances.hpp"

namespace rsabc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-7;       // ratio-test pivot acceptance
constexpr double kSingularTol = 1e-11;   // factorization pivot floor
constexpr double kDegenerateStep = 1e-12;
constexpr int kBlandTrigger = 200;   // consecutive degenerate pivots
constexpr int kRefactorEvery = 100;  // pivots between refactorizations

struct RestartNeeded {};  // internal: basis went numerically bad, rebuild cold
}  // namespace

/// Internal simplex state. Columns: structurals [0, n), then one slack per
/// row (a.x + slack = rhs; the slack bounds encode the sense), then transient
/// artificials. The basis inverse is dense and updated in product form.
struct LpContext::Impl {
    LpProblem prob;
    long iteration_limit;

    int nstruct = 0;
    int nrows = 0;
    int nbase = 0;  // structurals + slacks

    std::vector<std::vector<std::pair<int, double>>> cols;  // sparse (row, coeff)
    std::vector<double> lb, ub;
    std::vector<double> rhs;

    enum State : std::uint8_t { at_lower = 0, at_upper = 1, basic = 2 };
    std::vector<std::uint8_t> state;
    std::vector<int> basic_of_row;
    std::vector<double> x;
    std::vector<double> binv;  // nrows * nrows, row-major

    int artificial_count = 0;
    long iterations = 0;
    bool have_result = false;
    LpResult result;

    explicit Impl(LpProblem p, long limit) : prob(std::move(p)), iteration_limit(limit) {
        nstruct = prob.var_count;
        if (static_cast<int>(prob.objective.size()) != nstruct ||
            static_cast<int>(prob.lower.size()) != nstruct ||
            static_cast<int>(prob.upper.size()) != nstruct)
            throw LpInternalError("objective/bounds size mismatch");
        for (int j = 0; j < nstruct; ++j)
            if (prob.lower[j] > prob.upper[j] + 1e-12)
                throw LpInternalError("variable with lower bound above upper bound");
        rebuild_columns();
    }

    void rebuild_columns() {
        nrows = static_cast<int>(prob.rows.size());
        nbase = nstruct + nrows;
        cols.assign(nbase, {});
        lb.assign(nbase, 0.0);
        ub.assign(nbase, 0.0);
        rhs.assign(nrows, 0.0);
        for (int j = 0; j < nstruct; ++j) {
            lb[j] = prob.lower[j];
            ub[j] = prob.upper[j];
        }
        for (int i = 0; i < nrows; ++i) {
            const LinearRow& row = prob.rows[i];
            rhs[i] = row.rhs;
            for (const auto& [var, c] : row.coeffs) {
                if (var < 0 || var >= nstruct)
                    throw LpInternalError("row references variable out of range");
                cols[var].push_back({i, c});
            }
            int s = nstruct + i;
            cols[s].push_back({i, 1.0});
            switch (row.sense) {
                case Sense::le: lb[s] = 0.0; ub[s] = kInf; break;
                case Sense::eq: lb[s] = 0.0; ub[s] = 0.0; break;
                case Sense::ge: lb[s] = -kInf; ub[s] = 0.0; break;
            }
        }
        artificial_count = 0;
    }

    int ncols() const { return nbase + artificial_count; }

    int add_artificial(int row) {
        int j = ncols();
        ++artificial_count;
        cols.push_back({{row, 1.0}});
        lb.push_back(0.0);
        ub.push_back(kInf);
        state.push_back(at_lower);
        x.push_back(0.0);
        return j;
    }

    void drop_artificials() {
        cols.resize(nbase);
        lb.resize(nbase);
        ub.resize(nbase);
        state.resize(nbase);
        x.resize(nbase);
        artificial_count = 0;
    }

    /// Rests a nonbasic column on a finite bound consistent with its state.
    void place_nonbasic(int j) {
        if (state[j] == at_upper && ub[j] != kInf) {
            x[j] = ub[j];
            return;
        }
        if (lb[j] != -kInf) {
            state[j] = at_lower;
            x[j] = lb[j];
        } else if (ub[j] != kInf) {
            state[j] = at_upper;
            x[j] = ub[j];
        } else {
            state[j] = at_lower;  // free column; does not occur in this model
            x[j] = 0.0;
        }
    }

    void kick_to_nearest_bound(int j) {
        double lo = lb[j], hi = ub[j];
        double target;
        if (lo == -kInf) target = hi;
        else if (hi == kInf) target = lo;
        else target = (std::abs(x[j] - lo) <= std::abs(hi - x[j])) ? lo : hi;
        x[j] = target;
        state[j] = (target == hi && lo != hi) ? at_upper : at_lower;
    }

    /// Dense Gauss-Jordan inversion of the basis matrix. Returns false on a
    /// (near-)singular basis.
    bool factor() {
        const int m = nrows;
        std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
        binv.assign(static_cast<std::size_t>(m) * m, 0.0);
        for (int r = 0; r < m; ++r) {
            for (const auto& [i, c] : cols[basic_of_row[r]])
                a[static_cast<std::size_t>(i) * m + r] = c;
            binv[static_cast<std::size_t>(r) * m + r] = 1.0;
        }
        for (int col = 0; col < m; ++col) {
            int piv = -1;
            double best = kSingularTol;
            for (int r = col; r < m; ++r) {
                double v = std::abs(a[static_cast<std::size_t>(r) * m + col]);
                if (v > best) {
                    best = v;
                    piv = r;
                }
            }
            if (piv < 0) return false;
            if (piv != col)
                for (int k = 0; k < m; ++k) {
                    std::swap(a[static_cast<std::size_t>(piv) * m + k],
                              a[static_cast<std::size_t>(col) * m + k]);
                    std::swap(binv[static_cast<std::size_t>(piv) * m + k],
                              binv[static_cast<std::size_t>(col) * m + k]);
                }
            double d = 1.0 / a[static_cast<std::size_t>(col) * m + col];
            for (int k = 0; k < m; ++k) {
                a[static_cast<std::size_t>(col) * m + k] *= d;
                binv[static_cast<std::size_t>(col) * m + k] *= d;
            }
            for (int r = 0; r < m; ++r) {
                if (r == col) continue;
                double f = a[static_cast<std::size_t>(r) * m + col];
                if (f == 0.0) continue;
                for (int k = 0; k < m; ++k) {
                    a[static_cast<std::size_t>(r) * m + k] -=
                        f * a[static_cast<std::size_t>(col) * m + k];
                    binv[static_cast<std::size_t>(r) * m + k] -=
                        f * binv[static_cast<std::size_t>(col) * m + k];
                }
            }
        }
        return true;
    }

    void compute_basic_values() {
        const int m = nrows;
        std::vector<double> r(rhs);
        for (int j = 0; j < ncols(); ++j) {
            if (state[j] == basic || x[j] == 0.0) continue;
            for (const auto& [i, c] : cols[j]) r[i] -= c * x[j];
        }
        for (int i = 0; i < m; ++i) {
            double v = 0.0;
            const double* row = &binv[static_cast<std::size_t>(i) * m];
            for (int k = 0; k < m; ++k) v += row[k] * r[k];
            x[basic_of_row[i]] = v;
        }
    }

    /// Installs a basis assignment (column per row, -1 = give the row an
    /// artificial), factors, computes values, and kicks out-of-bound basic
    /// columns onto a bound. Each pass strictly grows the artificial set, so
    /// the loop terminates; the all-artificial basis is diagonal and always
    /// factors.
    void install(std::vector<int> assign) {
        for (auto& a : assign)
            if (a >= nbase) a = -1;  // stale artificial ids become fresh ones
        drop_artificials();
        for (;;) {
            basic_of_row.assign(nrows, -1);
            for (int i = 0; i < nrows; ++i) {
                int j = assign[i] >= 0 ? assign[i] : add_artificial(i);
                basic_of_row[i] = j;
                state[j] = basic;
            }
            if (!factor()) {
                bool all_artificial = true;
                for (int i = 0; i < nrows; ++i)
                    if (assign[i] >= 0) all_artificial = false;
                if (all_artificial) throw LpInternalError("all-artificial basis is singular");
                drop_artificials();
                for (int j = 0; j < nbase; ++j) {
                    if (state[j] == basic) state[j] = at_lower;
                    place_nonbasic(j);
                }
                assign.assign(nrows, -1);
                continue;
            }
            compute_basic_values();

            // An artificial whose value came out negative gets its column
            // sign flipped; that negates one row of the inverse.
            for (int i = 0; i < nrows; ++i) {
                int j = basic_of_row[i];
                if (j < nbase || x[j] >= 0.0) continue;
                cols[j][0].second = -cols[j][0].second;
                for (int k = 0; k < nrows; ++k)
                    binv[static_cast<std::size_t>(i) * nrows + k] *= -1.0;
                x[j] = -x[j];
            }

            bool dirty = false;
            for (int i = 0; i < nrows; ++i) {
                int j = basic_of_row[i];
                if (j >= nbase) {
                    assign[i] = -1;
                    continue;
                }
                if (x[j] < lb[j] - tol::feasibility || x[j] > ub[j] + tol::feasibility) {
                    kick_to_nearest_bound(j);
                    assign[i] = -1;
                    dirty = true;
                } else {
                    assign[i] = j;
                }
            }
            if (!dirty) return;
            drop_artificials();
        }
    }

    double phase_cost(int j, bool phase1) const {
        if (phase1) return j >= nbase ? 1.0 : 0.0;
        return j < nstruct ? prob.objective[j] : 0.0;
    }

    double phase_objective(bool phase1) const {
        double obj = 0.0;
        for (int j = 0; j < ncols(); ++j) {
            double c = phase_cost(j, phase1);
            if (c != 0.0) obj += c * x[j];
        }
        return obj;
    }

    /// Runs one simplex phase to optimality. Dantzig pricing with a Bland
    /// fallback after kBlandTrigger consecutive degenerate pivots.
    void optimize(bool phase1) {
        const int m = nrows;
        std::vector<double> y(m), w(m);
        int degenerate_run = 0;
        bool bland = false;
        int pivots_since_refactor = 0;

        for (;;) {
            if (++iterations > iteration_limit) throw LpStalledError(iteration_limit);

            // Duals y = cB . Binv.
            std::fill(y.begin(), y.end(), 0.0);
            for (int i = 0; i < m; ++i) {
                double cb = phase_cost(basic_of_row[i], phase1);
                if (cb == 0.0) continue;
                const double* row = &binv[static_cast<std::size_t>(i) * m];
                for (int k = 0; k < m; ++k) y[k] += cb * row[k];
            }

            int enter = -1;
            double best_score = 0.0;
            for (int j = 0; j < ncols(); ++j) {
                if (state[j] == basic) continue;
                if (lb[j] != -kInf && ub[j] != kInf && ub[j] - lb[j] < 1e-12) continue;  // fixed
                double dj = phase_cost(j, phase1);
                for (const auto& [i, c] : cols[j]) dj -= y[i] * c;
                bool eligible = (state[j] == at_lower && dj < -tol::reduced_cost) ||
                                (state[j] == at_upper && dj > tol::reduced_cost);
                if (!eligible) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                double score = std::abs(dj);
                if (score > best_score + 1e-15) {
                    best_score = score;
                    enter = j;
                }
            }
            if (enter < 0) return;  // phase optimal

            // Basic values move by -dir * t * w when the entering column
            // moves by dir * t off its bound.
            for (int i = 0; i < m; ++i) {
                double v = 0.0;
                for (const auto& [r, c] : cols[enter])
                    v += binv[static_cast<std::size_t>(i) * m + r] * c;
                w[i] = v;
            }
            const double dir = (state[enter] == at_lower) ? 1.0 : -1.0;

            double best_t = ub[enter] - lb[enter];  // entering bound flip
            int leave_row = -1;
            for (int i = 0; i < m; ++i) {
                double delta = dir * w[i];
                if (std::abs(delta) < kPivotTol) continue;
                int jb = basic_of_row[i];
                double t;
                if (delta > 0.0) {
                    if (lb[jb] == -kInf) continue;
                    t = (x[jb] - lb[jb]) / delta;
                } else {
                    if (ub[jb] == kInf) continue;
                    t = (ub[jb] - x[jb]) / (-delta);
                }
                if (t < 0.0) t = 0.0;
                if (t < best_t - 1e-12) {
                    best_t = t;
                    leave_row = i;
                } else if (leave_row >= 0 && t <= best_t + 1e-12 &&
                           basic_of_row[i] < basic_of_row[leave_row]) {
                    leave_row = i;  // deterministic tie-break: smallest index
                    if (t < best_t) best_t = t;
                }
            }
            if (best_t == kInf)
                throw LpInternalError("unbounded direction in box-bounded LP");

            if (best_t <= kDegenerateStep) {
                if (++degenerate_run >= kBlandTrigger) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }

            for (int i = 0; i < m; ++i) x[basic_of_row[i]] -= dir * best_t * w[i];

            if (leave_row < 0) {  // bound flip, no basis change
                x[enter] = (state[enter] == at_lower) ? ub[enter] : lb[enter];
                state[enter] = (state[enter] == at_lower) ? at_upper : at_lower;
                continue;
            }

            int leave = basic_of_row[leave_row];
            double delta = dir * w[leave_row];
            x[enter] = ((state[enter] == at_lower) ? lb[enter] : ub[enter]) + dir * best_t;
            x[leave] = (delta > 0.0) ? lb[leave] : ub[leave];
            state[leave] = (delta > 0.0) ? at_lower : at_upper;
            state[enter] = basic;
            basic_of_row[leave_row] = enter;

            // An artificial that leaves during phase 1 is pinned at zero.
            if (phase1 && leave >= nbase) ub[leave] = 0.0;

            double piv = w[leave_row];
            if (std::abs(piv) < kSingularTol) throw RestartNeeded{};
            double* prow = &binv[static_cast<std::size_t>(leave_row) * m];
            for (int k = 0; k < m; ++k) prow[k] /= piv;
            for (int i = 0; i < m; ++i) {
                if (i == leave_row) continue;
                double f = w[i];
                if (f == 0.0) continue;
                double* irow = &binv[static_cast<std::size_t>(i) * m];
                for (int k = 0; k < m; ++k) irow[k] -= f * prow[k];
            }

            if (++pivots_since_refactor >= kRefactorEvery) {
                if (!factor()) throw RestartNeeded{};
                compute_basic_values();
                pivots_since_refactor = 0;
            }
        }
    }

    LpResult run(std::vector<int> assign) {
        for (int attempt = 0;; ++attempt) {
            try {
                return run_once(assign);
            } catch (const RestartNeeded&) {
                if (attempt >= 1) throw LpInternalError("basis factorization failed twice");
                drop_artificials();
                for (int j = 0; j < nbase; ++j) {
                    if (state[j] == basic) state[j] = at_lower;
                    place_nonbasic(j);
                }
                assign.assign(nrows, -1);
            }
        }
    }

    LpResult run_once(std::vector<int> assign) {
        for (int repair = 0; repair < 3; ++repair) {
            install(std::move(assign));

            if (artificial_count > 0) {
                optimize(true);
                double infeas = phase_objective(true);
                if (infeas > tol::feasibility) {
                    LpResult res;
                    res.status = LpStatus::infeasible;
                    res.phase1_infeasibility = infeas;
                    res.iterations = iterations;
                    have_result = true;
                    result = res;
                    return res;
                }
                for (int j = nbase; j < ncols(); ++j) ub[j] = 0.0;  // pin for phase 2
            }

            optimize(false);

            // Recompute at optimality; the product-form inverse drifts.
            if (!factor()) throw RestartNeeded{};
            compute_basic_values();
            bool clean = true;
            for (int i = 0; i < nrows && clean; ++i) {
                int j = basic_of_row[i];
                if (x[j] < lb[j] - tol::feasibility || x[j] > ub[j] + tol::feasibility)
                    clean = false;
            }
            if (clean) return finish_result();

            // Drifted basics get repaired through a fresh phase 1.
            assign.assign(nrows, -1);
            for (int i = 0; i < nrows; ++i)
                assign[i] = basic_of_row[i] < nbase ? basic_of_row[i] : -1;
        }
        throw RestartNeeded{};
    }

    LpResult finish_result() {
        LpResult res;
        res.status = LpStatus::optimal;
        res.objective = 0.0;
        for (int j = 0; j < nstruct; ++j) res.objective += prob.objective[j] * x[j];
        res.x.assign(x.begin(), x.begin() + nstruct);
        res.iterations = iterations;
        res.basis.basic_of_row.resize(nrows);
        for (int i = 0; i < nrows; ++i) {
            int j = basic_of_row[i];
            res.basis.basic_of_row[i] = j < nbase ? j : -1;  // artificials stay private
        }
        res.basis.at_upper.assign(nbase, 0);
        for (int j = 0; j < nbase; ++j)
            res.basis.at_upper[j] = (state[j] == at_upper) ? 1 : 0;
        have_result = true;
        result = res;
        return res;
    }

    LpResult solve(const LpBasis* warm) {
        drop_artificials();
        state.assign(nbase, at_lower);
        x.assign(nbase, 0.0);
        std::vector<int> assign(nrows, -1);
        std::vector<char> used(nbase, 0);

        if (warm && !warm->empty() && static_cast<int>(warm->basic_of_row.size()) == nrows &&
            static_cast<int>(warm->at_upper.size()) == nbase) {
            for (int i = 0; i < nrows; ++i) {
                int j = warm->basic_of_row[i];
                if (j >= 0 && j < nbase && !used[j]) {
                    assign[i] = j;
                    used[j] = 1;
                }
            }
            for (int j = 0; j < nbase; ++j)
                if (warm->at_upper[j]) state[j] = at_upper;
        }
        for (int j = 0; j < nbase; ++j)
            if (!used[j]) place_nonbasic(j);
        iterations = 0;
        return run(std::move(assign));
    }

    LpResult resolve_with(std::vector<LinearRow> added) {
        if (!have_result || result.status != LpStatus::optimal)
            throw LpInternalError("add_rows_resolve requires a prior optimal result");

        const LpBasis prior = result.basis;
        const FractionalPoint prior_x = result.x;
        const int old_rows = nrows;

        for (auto& r : added) prob.rows.push_back(std::move(r));
        rebuild_columns();  // slack j of old row i keeps its index nstruct+i

        state.assign(nbase, at_lower);
        x.assign(nbase, 0.0);
        std::vector<int> assign(nrows, -1);
        std::vector<char> used(nbase, 0);
        for (int i = 0; i < old_rows; ++i) {
            int j = prior.basic_of_row[i];
            if (j >= 0 && !used[j]) {
                assign[i] = j;
                used[j] = 1;
            }
        }
        for (int j = 0; j < nstruct + old_rows; ++j)
            if (prior.at_upper[j]) state[j] = at_upper;

        // A new row whose slack absorbs the residual at the prior point gets
        // its slack basic; otherwise the row receives an artificial.
        for (int i = old_rows; i < nrows; ++i) {
            double act = 0.0;
            for (const auto& [var, c] : prob.rows[i].coeffs) act += c * prior_x[var];
            double residual = prob.rows[i].rhs - act;
            int s = nstruct + i;
            if (residual >= lb[s] - 1e-12 && residual <= ub[s] + 1e-12) {
                assign[i] = s;
                used[s] = 1;
            }
        }
        for (int j = 0; j < nbase; ++j)
            if (!used[j]) place_nonbasic(j);
        iterations = 0;
        return run(std::move(assign));
    }
};

LpContext::LpContext(LpProblem prob, long iteration_limit)
    : impl_(std::make_unique<Impl>(std::move(prob), iteration_limit)) {}
LpContext::~LpContext() = default;
LpContext::LpContext(LpContext&&) noexcept = default;
LpContext& LpContext::operator=(LpContext&&) noexcept = default;

LpResult LpContext::solve(const LpBasis* warm) { return impl_->solve(warm); }
LpResult LpContext::add_rows_resolve(std::vector<LinearRow> rows) {
    return impl_->resolve_with(std::move(rows));
}
const LpProblem& LpContext::problem() const { return impl_->prob; }
bool LpContext::solved() const { return impl_->have_result; }
const LpResult& LpContext::last() const { return impl_->result; }

LpResult solve_lp(const LpProblem& prob, const LpBasis* warm, long iteration_limit) {
    LpContext ctx(prob, iteration_limit);
    return ctx.solve(warm);
}

}  // namespace rsabc
