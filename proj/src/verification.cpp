#include "bhc/verification.hpp"

#include "bhc/errors.hpp"
#include "bhc/sequences.hpp"
#include "bhc/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace bhc {

namespace {

using Predicate = std::function<bool(std::uint64_t)>;

// Runs pred over [first, last]; records the first failing index.
bool check_range(ExperimentReport& report, std::string name, std::uint64_t first, std::uint64_t last,
                 const Predicate& pred)
{
    for (std::uint64_t n = first; n <= last; ++n) {
        if (!pred(n))
            return report.add_check(std::move(name), false, n);
    }
    return report.add_check(std::move(name), true);
}

std::string prefix(ScalarField field)
{
    return std::string(to_string(field)) + ": ";
}

bool tight_leq(double a, double b)
{
    return a <= b * (1.0 + kTightRelativeSlack);
}

// Rounded literals quoted with the step bounds.
PowerLaw quoted_step_bound(ScalarField field)
{
    return field == ScalarField::Real ? PowerLaw{0.87, -0.473678} : PowerLaw{0.44, -0.695025};
}

void monotonicity_for(ExperimentReport& report, ScalarField field, std::uint64_t n_max)
{
    const std::string p = prefix(field);
    const double d = limit_ratio(field);

    // Real scalars: 2m/(m+2) <= p0 puts X_m on the closed-form branch, where X_m = sqrt(2) exactly.
    std::uint64_t flat_end = 1;
    if (field == ScalarField::Real) {
        while (2.0 * (flat_end + 1) / (flat_end + 3.0) <= find_p0())
            ++flat_end;
        check_range(report, p + "X_m = sqrt(2) on the closed-form branch", 2, std::min(flat_end, n_max),
                    [&](std::uint64_t m) {
                        // pow(., -m/2) amplifies the rounding of the base by about m/2.
                        return std::abs(even_step_factor(m, 1.0, field) - std::sqrt(2.0))
                               <= static_cast<double>(m) * std::numeric_limits<double>::epsilon() * std::sqrt(2.0);
                    });
    }
    check_range(report, p + "doubling factor X_m strictly increasing", std::max<std::uint64_t>(flat_end, 2),
                n_max - 1, [&](std::uint64_t m) {
                    return even_step_factor(m, 1.0, field) < even_step_factor(m + 1, 1.0, field);
                });
    check_range(report, p + "doubling factor X_m < D", 2, n_max,
                [&](std::uint64_t m) { return even_step_factor(m, 1.0, field) < d; });
    check_range(report, p + "odd-step factor < D", 3, n_max, [&](std::uint64_t m) {
        return m % 2 == 0 || odd_step_factor(m, 1.0, field) < d;
    });
    check_range(report, p + "C_n strictly increasing", 1, n_max - 1,
                [&](std::uint64_t n) { return c_seq_t(n, 1.0, field) < c_seq_t(n + 1, 1.0, field); });
    check_range(report, p + "S_n strictly increasing", 1, n_max - 1,
                [&](std::uint64_t n) { return s_seq(n, field) < s_seq(n + 1, field); });

    // R_{n+1} - R_n is constant on each block and drops strictly at each
    // block boundary.
    check_range(report, p + "R steps non-increasing", 2, n_max - 1, [&](std::uint64_t n) {
        return r_seq_increment(n + 1, 1.0, field) <= r_seq_increment(n, 1.0, field);
    });
    check_range(report, p + "R steps strictly decrease across blocks", 2, n_max - 1, [&](std::uint64_t n) {
        if (block_of(n).k == block_of(n + 1).k)
            return true;
        return r_seq_increment(n + 1, 1.0, field) < r_seq_increment(n, 1.0, field);
    });
    check_range(report, p + "R steps match R_{n+1}-R_n", 2, n_max - 1, [&](std::uint64_t n) {
        const double direct = r_seq(n + 1, field) - r_seq(n, field);
        const double ulp = std::numeric_limits<double>::epsilon() * r_seq(n + 1, field);
        return std::abs(direct - r_seq_increment(n, 1.0, field)) <= 16.0 * ulp;
    });
    check_range(report, p + "R steps <= diff_bound", 2, n_max - 1, [&](std::uint64_t n) {
        return tight_leq(r_seq_increment(n, 1.0, field), diff_bound(n, 1.0, field));
    });
    const PowerLaw quoted = quoted_step_bound(field);
    check_range(report, p + "R steps < quoted rounded bound", 2, n_max - 1, [&](std::uint64_t n) {
        return r_seq_increment(n, 1.0, field) < quoted(static_cast<double>(n));
    });

    check_range(report, p + "R_{2n}/R_n strictly decreasing", 2, n_max - 1, [&](std::uint64_t n) {
        return r_seq(2 * n + 2, field) / r_seq(n + 1, field) < r_seq(2 * n, field) / r_seq(n, field);
    });
    check_range(report, p + "|R_{2n}/R_n - D| decreasing", 2, n_max - 1, [&](std::uint64_t n) {
        const double a = std::abs(r_seq(2 * n, field) / r_seq(n, field) - d);
        const double b = std::abs(r_seq(2 * n + 2, field) / r_seq(n + 1, field) - d);
        return b < a;
    });
}

} // namespace

ExperimentReport verify_monotonicity(std::uint64_t n_max)
{
    if (n_max < 8)
        throw DomainError("verify_monotonicity: n_max must be >= 8");
    ExperimentReport report;
    report.experiment = "monotonicity";
    report.params["n_max"] = n_max;
    monotonicity_for(report, ScalarField::Real, n_max);
    monotonicity_for(report, ScalarField::Complex, n_max);
    report.details["D"] = limit_ratio(ScalarField::Real);
    report.details["D_complex"] = limit_ratio(ScalarField::Complex);
    report.details["D_minus_X_at_n_max"] = limit_ratio(ScalarField::Real) - even_step_factor(n_max, 1.0, ScalarField::Real);
    return report;
}

ExperimentReport verify_sandwich(std::uint64_t n_max)
{
    if (n_max < 3)
        throw DomainError("verify_sandwich: n_max must be >= 3");
    ExperimentReport report;
    report.experiment = "sandwich";
    report.params["n_max"] = n_max;
    for (ScalarField field : {ScalarField::Real, ScalarField::Complex}) {
        const std::string p = prefix(field);
        check_range(report, p + "C_n <= S_n", 3, n_max,
                    [&](std::uint64_t n) { return c_seq_t(n, 1.0, field) <= s_seq(n, field); });
        check_range(report, p + "S_n <= M_n", 3, n_max,
                    [&](std::uint64_t n) { return s_seq(n, field) <= m_seq(n, field); });
        check_range(report, p + "M_n <= R_n", 3, n_max,
                    [&](std::uint64_t n) { return m_seq(n, field) <= r_seq(n, field); });
    }
    return report;
}

namespace {

// Classical recursion with the t = 1 Khinchine indices written out.
std::vector<double> classical_c(std::uint64_t n_max, ScalarField field)
{
    std::vector<double> c(n_max + 1, 0.0);
    c[1] = 1.0;
    for (std::uint64_t m = 2; m <= n_max; ++m) {
        const double md = static_cast<double>(m);
        if (m % 2 == 0) {
            c[m] = 1.0 / std::pow(khinchine(field, 2.0 * md / (md + 2.0)), md / 2.0) * c[m / 2];
        } else {
            const double a = std::pow(khinchine(field, (2.0 * md - 2.0) / (md + 1.0)), (-1.0 - md) / 2.0) * c[(m - 1) / 2];
            const double b = std::pow(khinchine(field, (2.0 * md + 2.0) / (md + 3.0)), (1.0 - md) / 2.0) * c[(m + 1) / 2];
            c[m] = std::pow(a, (md - 1.0) / (2.0 * md)) * std::pow(b, (md + 1.0) / (2.0 * md));
        }
    }
    return c;
}

double classical_r(std::uint64_t n, ScalarField field)
{
    const auto [k, j] = block_of(n);
    const double base = field == ScalarField::Real ? std::sqrt(2.0) : 2.0 / kSqrtPi;
    const double d = limit_ratio(field);
    const double kd = static_cast<double>(k);
    return base
        * (std::pow(d, kd - 1.0)
           + static_cast<double>(j - 1) * ((std::pow(d, kd) - std::pow(d, kd - 1.0)) / std::pow(2.0, kd - 1.0)));
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

ExperimentReport verify_reduction(std::uint64_t n_max)
{
    if (n_max < 2)
        throw DomainError("verify_reduction: n_max must be >= 2");
    constexpr double tol = 1e-12;
    const double g = kEulerGamma;
    ExperimentReport report;
    report.experiment = "reduction";
    report.params["n_max"] = n_max;
    report.params["tolerance"] = tol;

    for (ScalarField field : {ScalarField::Real, ScalarField::Complex}) {
        const std::string p = prefix(field);
        const auto classical = classical_c(n_max, field);
        check_range(report, p + "C_{n,1} equals classical C_n", 1, n_max,
                    [&](std::uint64_t n) { return close(c_seq_t(n, 1.0, field), classical[n], tol); });
        check_range(report, p + "R_{n,1} equals classical R_n", 2, n_max,
                    [&](std::uint64_t n) { return close(r_seq_t(n, 1.0, field), classical_r(n, field), tol); });
        report.add_check(p + "D_t at t=1 equals D", close(limit_ratio_t(1.0, field), limit_ratio(field), tol));
    }
    check_range(report, "E_{1,n} = 2n/(n+1)", 1, n_max, [&](std::uint64_t n) {
        const double nd = static_cast<double>(n);
        return close(exponent_E(n, 1.0), 2.0 * nd / (nd + 1.0), tol);
    });
    check_range(report, "lower bound at t=1 equals 2^{1-1/n}", 1, n_max, [&](std::uint64_t n) {
        return close(lower_bound(n, 1.0), std::pow(2.0, 1.0 - 1.0 / static_cast<double>(n)), tol);
    });

    // Continuum step bound at t = 1 against the classical closed form.
    const PowerLaw real = step_bound(1.0, ScalarField::Real);
    report.add_check("real: step bound coefficient at t=1",
                     close(real.coefficient, 2.0 * std::sqrt(2.0) - 4.0 * std::exp(g / 2.0 - 1.0), tol));
    report.add_check("real: step bound exponent at t=1",
                     close(real.exponent, std::log2(std::pow(2.0, -1.5) * std::exp(1.0 - g / 2.0)), tol));
    const PowerLaw cplx = step_bound(1.0, ScalarField::Complex);
    report.add_check("complex: step bound coefficient at t=1",
                     close(cplx.coefficient, 4.0 / kSqrtPi * (1.0 - std::exp(g / 2.0 - 0.5)), tol));
    report.add_check("complex: step bound exponent at t=1",
                     close(cplx.exponent, std::log2(std::exp(0.5 - g / 2.0) / 2.0), tol));

    // Closed bounds against the t = 1 corollaries.
    const double e1 = std::exp(1.0 - g / 2.0);
    const auto rc = closed_bound_coefficients(1.0, ScalarField::Real);
    const double c_classical = (std::pow(2.0, 2.5) - 8.0 * std::exp(-1.0 + g / 2.0)) / (2.0 * std::log2(e1) - 1.0);
    const double p_classical = 1.0
        + (std::pow(2.0, 1.5) - 4.0 * std::exp(g / 2.0 - 1.0))
            * (std::pow(2.0, -0.5) * e1 / (0.5 - std::log2(e1)) + (1.0 + std::pow(2.0, -1.5) * e1));
    report.add_check("real: closed bound c(1)", close(rc.c, c_classical, tol));
    report.add_check("real: closed bound r(1)", close(rc.r, std::log2(e1 / std::sqrt(2.0)), tol));
    report.add_check("real: closed bound p(1)", close(rc.p, p_classical, tol));

    const double dt = std::exp(0.5 - g / 2.0);
    const double ccoef = 4.0 / kSqrtPi - 4.0 / (dt * kSqrtPi);
    const auto cc = closed_bound_coefficients(1.0, ScalarField::Complex);
    const double p_complex = (2.0 * std::exp(0.5) - 2.0 * std::exp(g / 2.0)) / kSqrtPi
            * ((-4.0 * std::exp(0.5) * std::log(2.0) + (1.0 - g) * (std::exp(0.5) + 2.0 * std::exp(g / 2.0)))
               / (std::exp(g / 2.0 + 0.5) * (1.0 - g)))
        + 1.0;
    report.add_check("complex: closed bound c'(1)", close(cc.c, ccoef / (1.0 + std::log2(dt / 2.0)), tol));
    report.add_check("complex: closed bound r'(1)", close(cc.r, std::log2(dt), tol));
    report.add_check("complex: closed bound p'(1)", close(cc.p, p_complex, tol));
    return report;
}

ExperimentReport verify_fundamental_lemma(std::uint64_t n_max)
{
    if (n_max < 4)
        throw DomainError("verify_fundamental_lemma: n_max must be >= 4");
    ExperimentReport report;
    report.experiment = "fundamental-lemma";
    report.params["n_max"] = n_max;
    for (ScalarField field : {ScalarField::Real, ScalarField::Complex}) {
        const std::string p = prefix(field);
        check_range(report, p + "R steps non-increasing", 2, n_max - 1, [&](std::uint64_t n) {
            return r_seq_increment(n + 1, 1.0, field) <= r_seq_increment(n, 1.0, field);
        });
        check_range(report, p + "R steps <= diff_bound", 2, n_max, [&](std::uint64_t n) {
            return tight_leq(r_seq_increment(n, 1.0, field), diff_bound(n, 1.0, field));
        });
        const auto sums = partial_sum_bounds(n_max, field);
        check_range(report, p + "R_n <= partial-sum bound", 2, n_max,
                    [&](std::uint64_t n) { return r_seq(n, field) <= sums[n - 2]; });
        check_range(report, p + "partial-sum bound <= closed bound", 3, n_max,
                    [&](std::uint64_t n) { return tight_leq(sums[n - 2], closed_bound(n, 1.0, field)); });
        check_range(report, p + "R_n < closed bound", 2, n_max,
                    [&](std::uint64_t n) { return r_seq(n, field) < closed_bound(n, 1.0, field); });
    }
    return report;
}

ExperimentReport verify_block_ratios(std::uint64_t n_max)
{
    if (n_max < 4)
        throw DomainError("verify_block_ratios: n_max must be >= 4");
    ExperimentReport report;
    report.experiment = "block-ratios";
    report.params["n_max"] = n_max;
    for (ScalarField field : {ScalarField::Real, ScalarField::Complex}) {
        const std::string p = prefix(field);
        const double d = limit_ratio(field);
        double previous = r_seq(4, field) / r_seq(2, field);
        bool ok = true;
        std::optional<std::uint64_t> bad;
        for (std::uint64_t n = 3; n <= n_max; ++n) {
            const double ratio = r_seq(2 * n, field) / r_seq(n, field);
            if (!(ratio < previous)) {
                ok = false;
                bad = n;
                break;
            }
            previous = ratio;
        }
        report.add_check(p + "R_{2n}/R_n strictly decreasing", ok, bad);

        const double doubling = r_seq(2 * n_max, field) / r_seq(n_max, field);
        const double successive = r_seq(n_max + 1, field) / r_seq(n_max, field);
        std::ostringstream a, b;
        a.precision(6);
        b.precision(6);
        a << "|R_{2n}/R_n - D| = " << std::abs(doubling - d);
        b << "|R_{n+1}/R_n - 1| = " << std::abs(successive - 1.0);
        report.add_check(p + "|R_{2n}/R_n - D| < 1e-3 at n_max", std::abs(doubling - d) < 1e-3, std::nullopt, a.str());
        report.add_check(p + "|R_{n+1}/R_n - 1| < 1e-4 at n_max", std::abs(successive - 1.0) < 1e-4, std::nullopt,
                         b.str());
    }
    return report;
}

} // namespace bhc
