#ifndef RSABC_TOLERANCES_HPP
#define RSABC_TOLERANCES_HPP

namespace rsabc::tol {

// Numerical tolerances, stated once and used everywhere.
inline constexpr double feasibility = 1e-7;       // LP row satisfaction
inline constexpr double reduced_cost = 1e-7;      // simplex optimality test
inline constexpr double integrality = 1e-6;       // 0/1 rounding check
inline constexpr double bound_drift = 1e-9;       // resolve monotonicity slack
inline constexpr double min_violation = 1e-7;     // a row must beat this to count as violated
inline constexpr double witness = 1e-6;           // non-implication witness threshold
inline constexpr double coeff_match = 1e-12;      // symmetry precondition comparisons

}  // namespace rsabc::tol

#endif
