#pragma once

// Numerical verification suites for the monotonicity, sandwich, reduction and
// step-bound properties of the constant sequences. Failures are reported as
// data in the returned report, never thrown.

#include "bhc/report.hpp"

#include <cstdint>

namespace bhc {

/// Doubling factors increase to D, C and S increase, R steps are
/// non-increasing and bounded, R_{2n}/R_n decreases to D. Both fields.
/// Requires n_max >= 8.
ExperimentReport verify_monotonicity(std::uint64_t n_max);

/// C_n <= S_n <= M_n <= R_n for 3 <= n <= n_max, both fields, no tolerance.
ExperimentReport verify_sandwich(std::uint64_t n_max);

/// The continuum formulas at t = 1 against the classical closed forms,
/// n <= n_max, tolerance 1e-12.
ExperimentReport verify_reduction(std::uint64_t n_max);

/// R steps versus the step bound, the partial-sum bound and the closed bound.
ExperimentReport verify_fundamental_lemma(std::uint64_t n_max);

/// R_{2n}/R_n decreasing on [2, n_max] and the limits of R_{2n}/R_n and
/// R_{n+1}/R_n at n_max (tolerances 1e-3 and 1e-4).
ExperimentReport verify_block_ratios(std::uint64_t n_max);

/// Relative slack allowed where an inequality holds with equality in exact
/// arithmetic (the step bound at n = 2^k, the closed bound at n = 3).
inline constexpr double kTightRelativeSlack = 8.0 * 2.220446049250313e-16;

} // namespace bhc
