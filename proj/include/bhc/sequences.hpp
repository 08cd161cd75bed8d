#pragma once

// Constant sequences for the multilinear Bohnenblust-Hille inequality and the
// bounds derived from them, for real and complex scalars and for the
// continuum of exponents E_{t,n} = 2nt/((n-1)t+2), t in [1,2).
//
// Naming:
//   C  - the Khinchine-recursion constants (t = 1 is the classical case)
//   S  - the same recursion with every Khinchine factor replaced by its limit D
//   M  - the block-constant majorant, base * D^{k-1} on B_k
//   R  - M linearly interpolated across each dyadic block B_k
//
// D is the limit of the doubling factors: e^{1-gamma/2}/sqrt(2) for real
// scalars and e^{(1-gamma)/2} for complex scalars.

#include "bhc/scalar_field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhc {

/// Position of n >= 2 in the dyadic block B_k = {2^{k-1}+1, ..., 2^k}.
struct BlockPosition {
    std::uint64_t k = 0;
    std::uint64_t j = 0; // 1-based position inside B_k

    friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

enum class Family { C, S, M, R, ClosedBound, PartialSumBound, DiffBound, LowerBound };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

struct SequenceSpec {
    ScalarField scalar_field = ScalarField::Real;
    Family family = Family::C;
    double t = 1.0;

    /// Throws DomainError unless t in [1,2) and the family exists for this
    /// field/t combination.
    void validate() const;

    /// Smallest index at which the family is defined.
    std::uint64_t first_index() const;
};

struct TableRow {
    std::uint64_t n = 0;
    double value = 0.0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ConstantTable {
    SequenceSpec spec;
    std::vector<TableRow> values;
};

/// A bound of the form coefficient * n^exponent.
struct PowerLaw {
    double coefficient = 0.0;
    double exponent = 0.0;

    double operator()(double n) const;
};

/// c * (n-1)^r + p.
struct ClosedBoundCoefficients {
    double c = 0.0;
    double r = 0.0;
    double p = 0.0;
};

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

// --- constants -------------------------------------------------------------

/// D (real) or D~ (complex) in the classical closed form.
double limit_ratio(ScalarField field);

/// Continuum analogue: D_t = 2^{(t-2)/(2t)} e^{(2-t)(2-gamma)/(2t)} (real),
/// D~_t = e^{(gamma-1)(2t-4)/(4t)} (complex). Equals limit_ratio at t = 1.
double limit_ratio_t(double t, ScalarField field);

/// Value of the M and R sequences on B_1 = {2}: sqrt(2) for real scalars,
/// Gamma((t+2)/2)^{-1/t} for complex scalars (2/sqrt(pi) at t = 1).
double block_base(double t, ScalarField field);

/// A_p or A~_p depending on the field.
double khinchine(ScalarField field, double p);

/// Exponent of the continuum inequality, 2nt/((n-1)t+2).
double exponent_E(std::uint64_t n, double t);

// --- sequences -------------------------------------------------------------

BlockPosition block_of(std::uint64_t n);

double c_real(std::uint64_t n);
double c_complex(std::uint64_t n);
double c_real_t(std::uint64_t n, double t);
double c_complex_t(std::uint64_t n, double t);
double c_seq_t(std::uint64_t n, double t, ScalarField field);

/// Even-step factor A_{2mt/((m-2)t+4)}^{-m/2}; the sequence X_m of the
/// monotonicity suite at t = 1. Requires m >= 2.
double even_step_factor(std::uint64_t m, double t, ScalarField field);

/// Odd-step factor (the C-free part of the odd branch). Requires odd m >= 3.
double odd_step_factor(std::uint64_t m, double t, ScalarField field);

double s_seq(std::uint64_t n, ScalarField field);
double m_seq(std::uint64_t n, ScalarField field);
double r_seq(std::uint64_t n, ScalarField field);
double r_seq_t(std::uint64_t n, double t, ScalarField field);

/// R_{n+1} - R_n for n >= 2, evaluated per block so that steps inside a
/// block are bit-identical.
double r_seq_increment(std::uint64_t n, double t, ScalarField field);

// --- bounds ----------------------------------------------------------------

/// Coefficient and exponent of the step bound R_{n+1,t} - R_{n,t} <= a n^b.
PowerLaw step_bound(double t, ScalarField field);

double diff_bound(std::uint64_t n, double t, ScalarField field);

/// 1 + a * sum_{j=1}^{n-1} j^b with (a, b) = step_bound(t, field).
double partial_sum_bound(std::uint64_t n, ScalarField field, double t = 1.0);

/// partial_sum_bound for every n in [2, n_max]; element i holds n = i + 2.
std::vector<double> partial_sum_bounds(std::uint64_t n_max, ScalarField field, double t = 1.0);

ClosedBoundCoefficients closed_bound_coefficients(double t, ScalarField field);

double closed_bound(std::uint64_t n, double t, ScalarField field);

/// Lower estimate 2^{(n-1)(2-t)/(nt)} for the real optimal constants.
double lower_bound(std::uint64_t n, double t);

/// Crossing point t0 ~ 1.92068 of the two bilinear estimates.
double littlewood_t0();

/// Known bracket for the optimal real bilinear constant L_{R,r}, r >= 4/3.
Interval littlewood_bilinear_constant(double r);

// --- tables ----------------------------------------------------------------

/// Value of a family at a single index.
double evaluate(const SequenceSpec& spec, std::uint64_t n);

ConstantTable make_table(const SequenceSpec& spec, std::uint64_t n_max);

} // namespace bhc
