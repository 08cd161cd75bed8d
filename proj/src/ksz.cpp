#include "bhc/ksz.hpp"

#include "bhc/errors.hpp"
#include "bhc/rng.hpp"
#include "bhc/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bhc {

namespace {
__extension__ typedef unsigned __int128 uint128;
}

std::uint64_t monomial_count(std::uint64_t m, std::uint64_t n)
{
    if (m == 0 || n == 0)
        throw DomainError("monomial_count: m and n must be >= 1");
    // binom(n+m-1, k) for k = min(m, n-1), built so that every partial result is an integer.
    const std::uint64_t top = n + m - 1;
    if (top < n)
        throw OverflowError("monomial_count: n + m - 1 overflows");
    const std::uint64_t k = std::min(m, n - 1);
    uint128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (top - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw OverflowError("monomial_count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

BernoulliPolynomial random_bernoulli(unsigned m, unsigned n, std::uint64_t seed, std::uint64_t stream)
{
    if (m == 0 || n == 0)
        throw DomainError("random_bernoulli: m and n must be >= 1");
    if (monomial_count(m, n) > kMaxBernoulliTerms)
        throw CapacityError("random_bernoulli: " + std::to_string(monomial_count(m, n))
                            + " coefficients exceed the cap");
    CounterRng rng(seed, stream);
    HomogeneousPolynomial poly(m, n, ScalarField::Complex);
    for (const MultiIndex& alpha : enumerate_multi_indices(m, n))
        poly.set(alpha, static_cast<double>(rng.sign()));
    return {std::move(poly), seed};
}

MultilinearForm random_bernoulli_form(unsigned m, std::size_t n, std::uint64_t seed, std::uint64_t stream)
{
    if (m == 0 || n == 0)
        throw DomainError("random_bernoulli_form: m and n must be >= 1");
    MultilinearForm form(std::vector<std::size_t>(m, n), ScalarField::Real);
    const std::size_t size = form.coefficients().size();
    std::vector<Complex> coeffs(size);
    CounterRng rng(seed, stream);
    for (Complex& c : coeffs)
        c = static_cast<double>(rng.sign());
    return MultilinearForm(form.dims(), std::move(coeffs), ScalarField::Real);
}

double ksz_ratio(unsigned m, unsigned n, double norm)
{
    if (m < 2)
        throw DomainError("ksz_ratio: m must be >= 2");
    if (n == 0)
        throw DomainError("ksz_ratio: n must be >= 1");
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw DomainError("ksz_ratio: norm must be positive");
    return norm / (std::pow(static_cast<double>(n), (m + 1) / 2.0) * std::sqrt(std::log(static_cast<double>(m))));
}

double ksz_ratio(const BernoulliPolynomial& p, double norm)
{
    return ksz_ratio(p.poly.degree(), p.poly.variables(), norm);
}

ExperimentReport exhaustive_m2n2()
{
    ExperimentReport report;
    report.experiment = "ksz-exhaustive";
    report.params = {{"m", 2}, {"n", 2}};

    Json patterns = Json::array();
    double min_norm = std::numeric_limits<double>::infinity();
    Json witness;
    int count_three = 0;
    int count_sqrt5 = 0;
    for (unsigned bits = 0; bits < 8; ++bits) {
        const double a = (bits & 4u) ? -1.0 : 1.0;
        const double b = (bits & 2u) ? -1.0 : 1.0;
        const double c = (bits & 1u) ? -1.0 : 1.0;
        const double norm = norm_p2_complex(a, b, c);
        patterns.push_back({{"a", a}, {"b", b}, {"c", c}, {"norm", norm}});
        if (norm == 3.0)
            ++count_three;
        if (norm == std::sqrt(5.0))
            ++count_sqrt5;
        if (norm < min_norm) {
            min_norm = norm;
            witness = {{"a", a}, {"b", b}, {"c", c}};
        }
    }
    const double ratio = ksz_ratio(2, 2, min_norm);

    report.add_check("eight patterns enumerated", patterns.size() == 8);
    report.add_check("four patterns of norm 3", count_three == 4, std::nullopt, std::to_string(count_three));
    report.add_check("four patterns of norm sqrt(5)", count_sqrt5 == 4, std::nullopt, std::to_string(count_sqrt5));
    report.add_check("minimum norm is sqrt(5)", min_norm == std::sqrt(5.0));
    report.add_check("ratio at the minimum exceeds 0.9495", ratio > 0.9495);

    report.details["patterns"] = patterns;
    report.details["norm_values"] = {3.0, std::sqrt(5.0)};
    report.details["min_norm"] = min_norm;
    report.details["min_norm_witness"] = witness;
    report.details["ksz_ratio_min"] = ratio;
    report.details["pol_bound_chain"] = pol_bound_chain(2);
    return report;
}

double pol_bound_chain(unsigned m)
{
    if (m < 2)
        throw DomainError("pol_bound_chain: m must be >= 2");
    const double md = m;
    const double log_binom = log_gamma(2.0 * md) - log_gamma(md + 1.0) - log_gamma(md);
    const double log_value = (md + 1.0) / (2.0 * md) * log_binom - (md + 1.0) / 2.0 * std::log(md)
                             - 0.5 * std::log(std::log(md));
    return std::exp(log_value);
}

namespace {

const char* mode_name(DivergenceMode mode)
{
    return mode == DivergenceMode::RealMultilinear ? "real-multilinear" : "complex-polynomial";
}

Json form_witness(const MultilinearForm& form)
{
    Json signs = Json::array();
    for (const Complex& c : form.coefficients())
        signs.push_back(static_cast<int>(c.real()));
    return {{"dims", form.dims()}, {"signs", signs}};
}

Json poly_witness(const HomogeneousPolynomial& poly)
{
    Json terms = Json::array();
    for (const auto& [alpha, c] : poly.terms())
        terms.push_back({{"alpha", alpha}, {"sign", static_cast<int>(c.real())}});
    return {{"m", poly.degree()}, {"n", poly.variables()}, {"terms", terms}};
}

struct Sample {
    double stat = 0.0;
    Json witness;
};

struct Accumulator {
    PerNStat row;
    double sum = 0.0;

    void add(Sample s)
    {
        if (row.trials == 0 || s.stat > row.stat_max) {
            row.stat_max = s.stat;
            row.witness = std::move(s.witness);
        }
        row.stat_min = row.trials == 0 ? s.stat : std::min(row.stat_min, s.stat);
        sum += s.stat;
        ++row.trials;
        row.stat_mean = sum / static_cast<double>(row.trials);
    }
};

std::uint64_t trial_stream(unsigned n, unsigned trial)
{
    return (static_cast<std::uint64_t>(n) << 32) | trial;
}

} // namespace

ExperimentReport divergence_experiment(const DivergenceParams& params)
{
    if (params.m < 2)
        throw DomainError("divergence_experiment: m must be >= 2");
    if (!(params.q >= 1.0) || !std::isfinite(params.q))
        throw DomainError("divergence_experiment: q must be >= 1");
    if (params.trials == 0)
        throw DomainError("divergence_experiment: trials must be >= 1");
    if (params.n_list.empty())
        throw DomainError("divergence_experiment: empty n list");
    for (unsigned n : params.n_list) {
        if (n == 0)
            throw DomainError("divergence_experiment: n must be >= 1");
        if (params.mode == DivergenceMode::RealMultilinear
            && static_cast<std::uint64_t>(n) * (params.m - 1) > kDefaultMaxSignBits)
            throw CapacityError("divergence_experiment: n = " + std::to_string(n)
                                + " exceeds the exact real oracle capacity");
    }

    ExperimentReport report;
    report.experiment = "divergence";
    report.seed = params.seed;
    report.params = {{"m", params.m},           {"q", params.q},
                     {"n", params.n_list},      {"trials", params.trials},
                     {"mode", mode_name(params.mode)}};
    if (params.mode == DivergenceMode::ComplexPolynomial)
        report.params["restarts"] = params.restarts;

    for (unsigned n : params.n_list) {
        Accumulator acc;
        acc.row.n = n;
        for (unsigned trial = 0; trial < params.trials; ++trial) {
            const std::uint64_t stream = trial_stream(n, trial);
            Sample s;
            if (params.mode == DivergenceMode::RealMultilinear) {
                const MultilinearForm form = random_bernoulli_form(params.m, n, params.seed, stream);
                s.stat = coeff_lq_norm(form, params.q) / sup_norm_real_exact(form);
                s.witness = form_witness(form);
            } else {
                const BernoulliPolynomial p = random_bernoulli(params.m, n, params.seed, stream);
                const double norm = sup_norm_complex_estimate(p.poly, params.restarts, stream);
                s.stat = coeff_lq_norm(p.poly, params.q) / norm;
                s.witness = poly_witness(p.poly);
            }
            s.witness["stream"] = stream;
            acc.add(std::move(s));
        }
        report.per_n.push_back(std::move(acc.row));
    }

    const double md = params.m;
    const double exponent = md / params.q - (md + 1.0) / 2.0;
    const double bh_exponent = 2.0 * md / (md + 1.0);
    report.details["theoretical_exponent"] = exponent;
    report.details["critical_q"] = bh_exponent;
    const double first = report.per_n.front().stat_max;
    const double last = report.per_n.back().stat_max;
    report.details["growth_factor"] = last / first;
    report.details["theoretical_growth_factor"] =
        std::pow(static_cast<double>(params.n_list.back()) / params.n_list.front(), exponent);

    if (params.q < bh_exponent && report.per_n.size() >= 2) {
        std::optional<std::uint64_t> violation;
        for (std::size_t i = 1; i < report.per_n.size(); ++i) {
            if (!(report.per_n[i].stat_max > report.per_n[i - 1].stat_max)) {
                violation = report.per_n[i].n;
                break;
            }
        }
        report.add_check("stat_max strictly increasing in n", !violation, violation);
    }
    if (params.q >= 2.0) {
        // Orthogonality gives ||P|| >= ||coeffs||_2 >= ||coeffs||_q; equality occurs, so allow rounding.
        std::optional<std::uint64_t> violation;
        for (const PerNStat& row : report.per_n) {
            if (row.stat_max > 1.0 + 1e-12) {
                violation = row.n;
                break;
            }
        }
        report.add_check("statistic bounded by 1", !violation, violation);
    }
    return report;
}

ExperimentReport ksz_experiment(const KszParams& params)
{
    if (params.m < 2)
        throw DomainError("ksz_experiment: m must be >= 2");
    if (params.trials == 0)
        throw DomainError("ksz_experiment: trials must be >= 1");
    if (params.m == 2 && params.n == 2 && params.mode == DivergenceMode::ComplexPolynomial) {
        ExperimentReport report = exhaustive_m2n2();
        report.experiment = "ksz";
        report.params["mode"] = "exhaustive";
        return report;
    }
    if (params.mode == DivergenceMode::RealMultilinear
        && static_cast<std::uint64_t>(params.n) * (params.m - 1) > kDefaultMaxSignBits)
        throw CapacityError("ksz_experiment: n exceeds the exact real oracle capacity");

    ExperimentReport report;
    report.experiment = "ksz";
    report.seed = params.seed;
    report.params = {{"m", params.m}, {"n", params.n}, {"trials", params.trials}, {"mode", mode_name(params.mode)}};
    if (params.mode == DivergenceMode::ComplexPolynomial)
        report.params["restarts"] = params.restarts;

    Accumulator acc;
    acc.row.n = params.n;
    for (unsigned trial = 0; trial < params.trials; ++trial) {
        const std::uint64_t stream = trial_stream(params.n, trial);
        Sample s;
        if (params.mode == DivergenceMode::RealMultilinear) {
            const MultilinearForm form = random_bernoulli_form(params.m, params.n, params.seed, stream);
            s.stat = ksz_ratio(params.m, params.n, sup_norm_real_exact(form));
            s.witness = form_witness(form);
        } else {
            const BernoulliPolynomial p = random_bernoulli(params.m, params.n, params.seed, stream);
            s.stat = ksz_ratio(p, sup_norm_complex_estimate(p.poly, params.restarts, stream));
            s.witness = poly_witness(p.poly);
        }
        s.witness["stream"] = stream;
        acc.add(std::move(s));
    }
    report.per_n.push_back(std::move(acc.row));
    report.details["min_ratio_observed"] = report.per_n.front().stat_min;
    return report;
}

} // namespace bhc
