#pragma once

// Kahane-Salem-Zygmund experiments: random and exhaustive Bernoulli
// polynomials, the monomial counts, and the lower-bound chain for the
// universal constant.

#include "bhc/forms.hpp"
#include "bhc/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bhc {

/// binom(n+m-1, m), the number of monomials of degree m in n variables.
/// OverflowError if the result exceeds 64 bits.
std::uint64_t monomial_count(std::uint64_t m, std::uint64_t n);

/// Most coefficients a random Bernoulli polynomial may have.
inline constexpr std::uint64_t kMaxBernoulliTerms = std::uint64_t{1} << 24;

/// Homogeneous polynomial with every coefficient +1 or -1. `seed` is empty
/// for instances produced by exhaustive enumeration.
struct BernoulliPolynomial {
    HomogeneousPolynomial poly;
    std::optional<std::uint64_t> seed;
};

/// Signs drawn from CounterRng(seed, 0), one per multi-index in the order of
/// enumerate_multi_indices. CapacityError above kMaxBernoulliTerms.
BernoulliPolynomial random_bernoulli(unsigned m, unsigned n, std::uint64_t seed, std::uint64_t stream = 0);

/// Real m-linear form on (R^n)^m with independent +-1 entries, row-major
/// from CounterRng(seed, stream).
MultilinearForm random_bernoulli_form(unsigned m, std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

/// norm / (n^{(m+1)/2} sqrt(ln m)). DomainError for m < 2 or norm <= 0.
double ksz_ratio(unsigned m, unsigned n, double norm);
double ksz_ratio(const BernoulliPolynomial& p, double norm);

/// All 8 sign patterns of a z1^2 + b z2^2 + c z1 z2 with their exact norms.
ExperimentReport exhaustive_m2n2();

/// m^{-(m+1)/2} (ln m)^{-1/2} ((2m-1)!/(m!(m-1)!))^{(m+1)/(2m)}, evaluated
/// in log space. DomainError for m < 2.
double pol_bound_chain(unsigned m);

enum class DivergenceMode { RealMultilinear, ComplexPolynomial };

struct DivergenceParams {
    unsigned m = 2;
    double q = 1.2;
    std::vector<unsigned> n_list{4, 8, 16};
    std::uint64_t seed = 0;
    unsigned trials = 64;
    DivergenceMode mode = DivergenceMode::RealMultilinear;
    unsigned restarts = kDefaultRestarts; // complex mode only
};

/// For every n, the statistic ||coeffs||_q / ||P|| over `trials` random
/// Bernoulli instances (trial i uses stream n * 2^32 + i).
ExperimentReport divergence_experiment(const DivergenceParams& params);

struct KszParams {
    unsigned m = 2;
    unsigned n = 2;
    std::uint64_t seed = 0;
    unsigned trials = 100;
    DivergenceMode mode = DivergenceMode::ComplexPolynomial;
    unsigned restarts = kDefaultRestarts;
};

/// ksz_ratio over random Bernoulli instances: polynomials with estimated
/// torus norms, or multilinear forms with exact real norms.
ExperimentReport ksz_experiment(const KszParams& params);

} // namespace bhc
