#include "bhc/sequences.hpp"

#include "bhc/errors.hpp"
#include "bhc/special_fn.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace bhc {

namespace {

void require_t(double t)
{
    if (!(t >= 1.0 && t < 2.0))
        throw DomainError("t must lie in [1, 2), got " + std::to_string(t));
}

void require_n(std::uint64_t n, std::uint64_t min, const char* what)
{
    if (n < min)
        throw DomainError(std::string(what) + ": n must be >= " + std::to_string(min));
}

// Bottom-up memo for the recursive families. Keyed by (family, field, t);
// t is compared by bit pattern.
class RecursionCache {
public:
    using Filler = double (*)(const std::vector<double>&, std::uint64_t, double, ScalarField);

    double get(Family family, ScalarField field, double t, std::uint64_t n, Filler fill)
    {
        const Key key{static_cast<int>(family), static_cast<int>(field), std::bit_cast<std::uint64_t>(t)};
        {
            std::shared_lock lock(mutex_);
            auto it = tables_.find(key);
            if (it != tables_.end() && it->second.size() > n)
                return it->second[n];
        }
        std::unique_lock lock(mutex_);
        auto& values = tables_[key];
        if (values.empty())
            values.push_back(0.0); // index 0 unused
        values.reserve(n + 1);
        while (values.size() <= n)
            values.push_back(fill(values, values.size(), t, field));
        return values[n];
    }

    static RecursionCache& instance()
    {
        static RecursionCache cache;
        return cache;
    }

private:
    using Key = std::tuple<int, int, std::uint64_t>;
    std::shared_mutex mutex_;
    std::map<Key, std::vector<double>> tables_;
};

double fill_c(const std::vector<double>& c, std::uint64_t n, double t, ScalarField field)
{
    if (n == 1)
        return 1.0;
    if (n % 2 == 0)
        return even_step_factor(n, t, field) * c[n / 2];
    const double nd = static_cast<double>(n);
    const double lo = khinchine(field, 2.0 * (nd - 1.0) * t / ((nd - 3.0) * t + 4.0));
    const double hi = khinchine(field, 2.0 * (nd + 1.0) * t / ((nd - 1.0) * t + 4.0));
    const double left = std::pow(lo, -(nd + 1.0) / 2.0) * c[(n - 1) / 2];
    const double right = std::pow(hi, -(nd - 1.0) / 2.0) * c[(n + 1) / 2];
    return std::pow(left, (nd - 1.0) / (2.0 * nd)) * std::pow(right, (nd + 1.0) / (2.0 * nd));
}

double fill_s(const std::vector<double>& s, std::uint64_t n, double t, ScalarField field)
{
    const double base = block_base(t, field);
    if (n == 1)
        return 1.0;
    if (n == 2)
        return base;
    const double d = limit_ratio_t(t, field);
    if (n % 2 == 0)
        return d * s[n / 2];
    const double nd = static_cast<double>(n);
    return d * std::pow(s[(n - 1) / 2], (nd - 1.0) / (2.0 * nd)) * std::pow(s[(n + 1) / 2], (nd + 1.0) / (2.0 * nd));
}

// base * D^{k-1}, accumulated by repeated multiplication exactly as the
// M and S recursions do, so block anchors agree bit-for-bit with them.
double block_anchor(std::uint64_t k, double base, double d)
{
    double value = base;
    for (std::uint64_t i = 1; i < k; ++i)
        value = d * value;
    return value;
}

} // namespace

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::M: return "M";
    case Family::R: return "R";
    case Family::ClosedBound: return "closed";
    case Family::PartialSumBound: return "partial";
    case Family::DiffBound: return "diff";
    case Family::LowerBound: return "lower";
    }
    return "?";
}

Family family_from_string(std::string_view name)
{
    for (Family f : {Family::C, Family::S, Family::M, Family::R, Family::ClosedBound, Family::PartialSumBound,
                     Family::DiffBound, Family::LowerBound}) {
        if (to_string(f) == name)
            return f;
    }
    throw DomainError("unknown family '" + std::string(name) + "'");
}

void SequenceSpec::validate() const
{
    require_t(t);
    switch (family) {
    case Family::S:
    case Family::M:
        if (t != 1.0)
            throw DomainError(std::string(to_string(family)) + " family is only defined for t = 1");
        break;
    case Family::LowerBound:
        if (scalar_field != ScalarField::Real)
            throw DomainError("lower family is only available for real scalars");
        break;
    default:
        break;
    }
}

std::uint64_t SequenceSpec::first_index() const
{
    switch (family) {
    case Family::R:
    case Family::ClosedBound:
    case Family::PartialSumBound:
        return 2;
    default:
        return 1;
    }
}

double PowerLaw::operator()(double n) const
{
    return coefficient * std::pow(n, exponent);
}

double limit_ratio(ScalarField field)
{
    if (field == ScalarField::Real)
        return std::exp(1.0 - kEulerGamma / 2.0) / std::sqrt(2.0);
    return std::exp((1.0 - kEulerGamma) / 2.0);
}

double limit_ratio_t(double t, ScalarField field)
{
    require_t(t);
    if (field == ScalarField::Real)
        return std::pow(2.0, (t - 2.0) / (2.0 * t)) * std::exp((2.0 - t) * (2.0 - kEulerGamma) / (2.0 * t));
    return std::exp((kEulerGamma - 1.0) * (2.0 * t - 4.0) / (4.0 * t));
}

double block_base(double t, ScalarField field)
{
    require_t(t);
    if (field == ScalarField::Real)
        return std::sqrt(2.0);
    return 1.0 / khinchine_complex(t);
}

double khinchine(ScalarField field, double p)
{
    return field == ScalarField::Real ? khinchine_real(p) : khinchine_complex(p);
}

double exponent_E(std::uint64_t n, double t)
{
    require_n(n, 1, "exponent_E");
    require_t(t);
    const double nd = static_cast<double>(n);
    return 2.0 * nd * t / ((nd - 1.0) * t + 2.0);
}

BlockPosition block_of(std::uint64_t n)
{
    require_n(n, 2, "block_of");
    const std::uint64_t k = std::bit_width(n - 1);
    return {k, n - (std::uint64_t{1} << (k - 1))};
}

double even_step_factor(std::uint64_t m, double t, ScalarField field)
{
    require_n(m, 2, "even_step_factor");
    const double md = static_cast<double>(m);
    return std::pow(khinchine(field, 2.0 * md * t / ((md - 2.0) * t + 4.0)), -md / 2.0);
}

double odd_step_factor(std::uint64_t m, double t, ScalarField field)
{
    if (m < 3 || m % 2 == 0)
        throw DomainError("odd_step_factor: m must be odd and >= 3");
    const double md = static_cast<double>(m);
    const double lo = khinchine(field, 2.0 * (md - 1.0) * t / ((md - 3.0) * t + 4.0));
    const double hi = khinchine(field, 2.0 * (md + 1.0) * t / ((md - 1.0) * t + 4.0));
    return std::pow(std::pow(lo, -(md + 1.0) / 2.0), (md - 1.0) / (2.0 * md))
        * std::pow(std::pow(hi, -(md - 1.0) / 2.0), (md + 1.0) / (2.0 * md));
}

double c_seq_t(std::uint64_t n, double t, ScalarField field)
{
    require_n(n, 1, "c_seq");
    require_t(t);
    return RecursionCache::instance().get(Family::C, field, t, n, &fill_c);
}

double c_real(std::uint64_t n) { return c_seq_t(n, 1.0, ScalarField::Real); }
double c_complex(std::uint64_t n) { return c_seq_t(n, 1.0, ScalarField::Complex); }
double c_real_t(std::uint64_t n, double t) { return c_seq_t(n, t, ScalarField::Real); }
double c_complex_t(std::uint64_t n, double t) { return c_seq_t(n, t, ScalarField::Complex); }

double s_seq(std::uint64_t n, ScalarField field)
{
    require_n(n, 1, "s_seq");
    return RecursionCache::instance().get(Family::S, field, 1.0, n, &fill_s);
}

double m_seq(std::uint64_t n, ScalarField field)
{
    require_n(n, 1, "m_seq");
    if (n == 1)
        return 1.0;
    return block_anchor(block_of(n).k, block_base(1.0, field), limit_ratio_t(1.0, field));
}

double r_seq_t(std::uint64_t n, double t, ScalarField field)
{
    require_n(n, 2, "r_seq");
    require_t(t);
    const auto [k, j] = block_of(n);
    const double base = block_base(t, field);
    const double d = limit_ratio_t(t, field);
    const double start = block_anchor(k, base, d);
    const double next = d * start;
    const double step = (next - start) / std::ldexp(1.0, static_cast<int>(k - 1));
    return start + static_cast<double>(j - 1) * step;
}

double r_seq(std::uint64_t n, ScalarField field)
{
    return r_seq_t(n, 1.0, field);
}

double r_seq_increment(std::uint64_t n, double t, ScalarField field)
{
    require_n(n, 2, "r_seq_increment");
    require_t(t);
    // Inside B_k every step is the same; the step leaving B_k at n = 2^k
    // reduces algebraically to the same value.
    const std::uint64_t k = block_of(n).k;
    const double start = block_anchor(k, block_base(t, field), limit_ratio_t(t, field));
    const double next = limit_ratio_t(t, field) * start;
    return (next - start) / std::ldexp(1.0, static_cast<int>(k - 1));
}

PowerLaw step_bound(double t, ScalarField field)
{
    require_t(t);
    const double g = kEulerGamma;
    if (field == ScalarField::Real) {
        const double coefficient = std::pow(2.0, 1.5)
            - std::pow(2.0, (t + 1.0) / t) * std::exp((t - 2.0) / t + (2.0 - t) * g / (2.0 * t));
        const double exponent = std::log2(std::pow(2.0, (-t - 2.0) / (2.0 * t))
                                          * std::exp((2.0 - t) / t - (2.0 - t) * g / (2.0 * t)));
        return {coefficient, exponent};
    }
    const double e = std::exp((g - 1.0) * (2.0 * t - 4.0) / (4.0 * t));
    const double coefficient = 2.0 * std::exp(-log_gamma((t + 2.0) / 2.0) / t) * (e - 1.0) / e;
    return {coefficient, std::log2(e / 2.0)};
}

double diff_bound(std::uint64_t n, double t, ScalarField field)
{
    require_n(n, 1, "diff_bound");
    return step_bound(t, field)(static_cast<double>(n));
}

std::vector<double> partial_sum_bounds(std::uint64_t n_max, ScalarField field, double t)
{
    require_n(n_max, 2, "partial_sum_bound");
    const PowerLaw law = step_bound(t, field);
    std::vector<double> out;
    out.reserve(n_max - 1);
    double sum = 0.0;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        sum += std::pow(static_cast<double>(n - 1), law.exponent);
        out.push_back(1.0 + law.coefficient * sum);
    }
    return out;
}

double partial_sum_bound(std::uint64_t n, ScalarField field, double t)
{
    require_n(n, 2, "partial_sum_bound");
    return partial_sum_bounds(n, field, t).back();
}

ClosedBoundCoefficients closed_bound_coefficients(double t, ScalarField field)
{
    require_t(t);
    const double g = kEulerGamma;
    if (field == ScalarField::Real) {
        const double e = std::exp((2.0 - t) / t - (2.0 - t) * g / (2.0 * t));
        const double coef = std::pow(2.0, 1.5)
            - std::pow(2.0, (t + 1.0) / t) * std::exp((t - 2.0) / t + (2.0 - t) * g / (2.0 * t));
        const double denom = t - 2.0 + 2.0 * t * std::log2(e);
        ClosedBoundCoefficients out;
        out.p = 1.0
            - coef
                * (std::pow(2.0, (3.0 * t - 2.0) / (2.0 * t)) * t * e / denom - 1.0
                   - std::pow(2.0, (-t - 2.0) / (2.0 * t)) * e);
        out.c = 4.0 * t
            * (std::sqrt(2.0) - std::pow(2.0, 1.0 / t) * std::exp((t - 2.0) / t + (2.0 - t) * g / (2.0 * t)))
            / denom;
        out.r = (t - 2.0) / (2.0 * t) + std::log2(e);
        return out;
    }
    const double e = std::exp((g - 1.0) * (2.0 * t - 4.0) / (4.0 * t));
    const double gamma_root = std::exp(log_gamma((t + 2.0) / 2.0) / t); // Gamma((t+2)/2)^{1/t}
    ClosedBoundCoefficients out;
    out.p = 1.0 + (-2.0 / std::log2(e) + 2.0 / e + 1.0) / (gamma_root * (1.0 / (e - 1.0)));
    out.c = 2.0 * (1.0 / gamma_root) * (e - 1.0) / (std::log2(e) * e);
    out.r = std::log2(e);
    return out;
}

double closed_bound(std::uint64_t n, double t, ScalarField field)
{
    require_n(n, 2, "closed_bound");
    const auto k = closed_bound_coefficients(t, field);
    return k.c * std::pow(static_cast<double>(n - 1), k.r) + k.p;
}

double lower_bound(std::uint64_t n, double t)
{
    require_n(n, 1, "lower_bound");
    require_t(t);
    const double nd = static_cast<double>(n);
    return std::pow(2.0, (nd - 1.0) * (2.0 - t) / (nd * t));
}

namespace {

double littlewood_lower(double r) { return std::pow(2.0, (2.0 - r) / r); }

double littlewood_upper(double r)
{
    const double arg = (4.0 + r) / (2.0 * (4.0 - r));
    return std::exp(((4.0 - r) / (2.0 * r)) * (std::log(kSqrtPi) - log_gamma(arg))) / std::sqrt(2.0);
}

} // namespace

double littlewood_t0()
{
    static const double t0 = bisect_root(
        [](double r) { return littlewood_lower(r) - littlewood_upper(r); }, 1.9, 1.95, 1e-14);
    return t0;
}

Interval littlewood_bilinear_constant(double r)
{
    if (!(r >= 4.0 / 3.0) || !std::isfinite(r))
        throw DomainError("littlewood_bilinear_constant: r must be >= 4/3");
    if (r >= 2.0)
        return {1.0, 1.0};
    const double lower = littlewood_lower(r);
    if (r <= littlewood_t0())
        return {lower, lower};
    return {lower, littlewood_upper(r)};
}

double evaluate(const SequenceSpec& spec, std::uint64_t n)
{
    spec.validate();
    switch (spec.family) {
    case Family::C: return c_seq_t(n, spec.t, spec.scalar_field);
    case Family::S: return s_seq(n, spec.scalar_field);
    case Family::M: return m_seq(n, spec.scalar_field);
    case Family::R: return r_seq_t(n, spec.t, spec.scalar_field);
    case Family::ClosedBound: return closed_bound(n, spec.t, spec.scalar_field);
    case Family::PartialSumBound: return partial_sum_bound(n, spec.scalar_field, spec.t);
    case Family::DiffBound: return diff_bound(n, spec.t, spec.scalar_field);
    case Family::LowerBound: return lower_bound(n, spec.t);
    }
    throw DomainError("unknown family");
}

ConstantTable make_table(const SequenceSpec& spec, std::uint64_t n_max)
{
    spec.validate();
    const std::uint64_t first = spec.first_index();
    if (n_max < first)
        throw DomainError("n_max must be >= " + std::to_string(first) + " for family "
                          + std::string(to_string(spec.family)));
    ConstantTable table{spec, {}};
    table.values.reserve(n_max - first + 1);
    if (spec.family == Family::PartialSumBound) {
        const auto sums = partial_sum_bounds(n_max, spec.scalar_field, spec.t);
        for (std::uint64_t n = 2; n <= n_max; ++n)
            table.values.push_back({n, sums[n - 2]});
        return table;
    }
    for (std::uint64_t n = first; n <= n_max; ++n)
        table.values.push_back({n, evaluate(spec, n)});
    return table;
}

} // namespace bhc
