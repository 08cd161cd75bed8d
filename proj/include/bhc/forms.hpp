#pragma once

// Multilinear forms, homogeneous polynomials and their sup norms.
//
// Real multilinear sup norms over the product of cubes are exact: a form is
// affine in each argument, so the supremum is attained at sign vectors, and
// the first argument is eliminated analytically (its best choice gives a sum
// of absolute values). Complex polynomial norms over the polydisc are
// estimated from below on the torus by coordinate ascent, except for the
// 2-homogeneous two-variable closed form.

#include "bhc/scalar_field.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace bhc {

using Complex = std::complex<double>;
using MultiIndex = std::vector<unsigned>;

/// Dense m-linear form; entry (i_1..i_m) is U(e_{i_1}, ..., e_{i_m}),
/// stored row-major (last index fastest).
class MultilinearForm {
public:
    MultilinearForm(std::vector<std::size_t> dims, ScalarField field = ScalarField::Real);
    MultilinearForm(std::vector<std::size_t> dims, std::vector<Complex> coeffs, ScalarField field);

    static MultilinearForm real(std::vector<std::size_t> dims, std::span<const double> coeffs);

    std::size_t arity() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    ScalarField field() const { return field_; }

    std::span<const Complex> coefficients() const { return coeffs_; }
    std::size_t offset(std::span<const std::size_t> index) const;
    const Complex& at(std::span<const std::size_t> index) const { return coeffs_[offset(index)]; }
    void set(std::span<const std::size_t> index, Complex value);

    /// Real parts of the coefficients; DomainError if any imaginary part is nonzero.
    std::vector<double> real_coefficients() const;

    /// U(x_1, ..., x_m) for argument vectors of matching dimensions.
    Complex evaluate(std::span<const std::vector<Complex>> args) const;

    void scale(double lambda);

private:
    std::vector<std::size_t> dims_;
    std::vector<Complex> coeffs_;
    ScalarField field_;
};

/// x1y1 + x1y2 + x2y1 - x2y2.
MultilinearForm littlewood_form();

/// Degree-m polynomial in n variables, sparse over multi-indices |alpha| = m.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(unsigned degree, unsigned variables, ScalarField field = ScalarField::Complex);

    unsigned degree() const { return degree_; }
    unsigned variables() const { return variables_; }
    ScalarField field() const { return field_; }

    /// DomainError unless alpha has length n, and sums to m.
    void set(const MultiIndex& alpha, Complex value);
    Complex coefficient(const MultiIndex& alpha) const;
    const std::map<MultiIndex, Complex>& terms() const { return terms_; }

    Complex evaluate(std::span<const Complex> z) const;

    void scale(double lambda);

private:
    unsigned degree_;
    unsigned variables_;
    ScalarField field_;
    std::map<MultiIndex, Complex> terms_;
};

/// All alpha in N^n with |alpha| = m, in decreasing lexicographic order
/// (z1^m first).
std::vector<MultiIndex> enumerate_multi_indices(unsigned m, unsigned n);

/// z1^a + ... as a polynomial with the given coefficient for each (alpha, c).
HomogeneousPolynomial make_polynomial(unsigned m, unsigned n,
                                      std::span<const std::pair<MultiIndex, double>> terms);

/// a z1^2 + b z2^2 + c z1 z2.
HomogeneousPolynomial quadratic_p2(double a, double b, double c);

inline constexpr unsigned kDefaultMaxSignBits = 26;

/// Exact sup of |U| over [-1,1]^{dims}, real forms only. Enumerates the
/// 2^{dims_2 + ... + dims_m} sign vectors of arguments 2..m in Gray order.
/// CapacityError above 2^{max_sign_bits} sign vectors.
double sup_norm_real_exact(const MultilinearForm& form, unsigned max_sign_bits = kDefaultMaxSignBits);

double coeff_lq_norm(std::span<const Complex> coeffs, double q);
double coeff_lq_norm(const MultilinearForm& form, double q);
double coeff_lq_norm(const HomogeneousPolynomial& poly, double q);

/// ||coeffs||_q / ||U||. DegenerateError for the zero form.
double bh_ratio(const MultilinearForm& form, double q, unsigned max_sign_bits = kDefaultMaxSignBits);

/// Norm of a z1^2 + b z2^2 + c z1 z2 on the complex bidisc.
double norm_p2_complex(double a, double b, double c);

/// Max of |a x^2 + b y^2 + c x y| over [-1,1]^2.
double norm_p2_real(double a, double b, double c);

struct TorusMaximum {
    double value = 0.0;
    std::vector<double> phases;
};

inline constexpr unsigned kDefaultRestarts = 32;

/// Best |P(e^{i theta})| found by cyclic coordinate ascent over the phases,
/// from `restarts` random starting points. Never exceeds the true norm.
TorusMaximum maximize_on_torus(const HomogeneousPolynomial& poly, unsigned restarts, std::uint64_t seed);

double sup_norm_complex_estimate(const HomogeneousPolynomial& poly, unsigned restarts = kDefaultRestarts,
                                 std::uint64_t seed = 0);

} // namespace bhc
