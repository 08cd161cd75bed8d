#include "bhc/special_fn.hpp"

#include "bhc/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace bhc {

namespace {

// (-1)^k zeta(k)/k for k = 2..31: ln Gamma(1+z) = -gamma z + sum c_k z^k.
constexpr std::array<double, 30> kZetaSeries = {
    0.822467033424113218236,   -0.400685634386531428467,  0.270580808427784547879,
    -0.207385551028673985266,  0.169557176997408189952,   -0.14404989676884611812,
    0.125509669524743042422,   -0.111334265869564690491,  0.100099457512781808534,
    -0.0909540171458290422326, 0.0833538405461090040249,  -0.0769325164113521914728,
    0.0714329462953613360592,  -0.0666687058824204680329, 0.062500955141213040742,
    -0.058823978658684582339,  0.0555557676274036111022,  -0.0526316793796166607336,
    0.0500000476981016936398,  -0.0476190703301422279908, 0.0454545562932046694424,
    -0.0434782660530402593614, 0.0416666691503412104691,  -0.0400000011921401405861,
    0.0384615390346751857063,  -0.0370370373129893255495, 0.0357142858473333580282,
    -0.0344827586849193008108, 0.0333333333643775810807,  -0.0322580645311504163388,
};

// ln Gamma(1+z), |z| <= 1/4.
double log_gamma_near_one(double z)
{
    double sum = 0.0;
    for (std::size_t i = kZetaSeries.size(); i-- > 0;)
        sum = (sum + kZetaSeries[i]) * z;
    return (sum * z) - kEulerGamma * z;
}

// Lanczos approximation, g = 671/128, 14 terms.
double log_gamma_lanczos(double x)
{
    static constexpr std::array<double, 14> cof = {
        57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
        -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
        -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
        .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
        -.261908384015814087e-4, .368991826595316234e-5,
    };
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : cof)
        ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

} // namespace

double log_gamma(double x)
{
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("log_gamma: argument must be finite and positive, got " + std::to_string(x));

    if (x < 0.5)
        return log_gamma(x + 1.0) - std::log(x);
    if (std::abs(x - 1.0) <= 0.25)
        return log_gamma_near_one(x - 1.0);
    if (std::abs(x - 2.0) <= 0.25)
        return log_gamma_near_one(x - 2.0) + std::log1p(x - 2.0);
    return log_gamma_lanczos(x);
}

double find_p0()
{
    static const double p0 = [] {
        const double target = std::log(kSqrtPi / 2.0);
        auto f = [target](double p) { return log_gamma((p + 1.0) / 2.0) - target; };
        // p = 2 is a second root (Gamma(3/2) = sqrt(pi)/2); keep it outside the bracket.
        return bisect_root(f, 1.0, 1.95, 1e-14);
    }();
    return p0;
}

double khinchine_real(double p)
{
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("khinchine_real: p must be >= 1");
    if (p <= find_p0())
        return std::pow(2.0, 0.5 - 1.0 / p);
    return std::sqrt(2.0) * std::exp((log_gamma((p + 1.0) / 2.0) - std::log(kSqrtPi)) / p);
}

double khinchine_complex(double p)
{
    if (!(p >= 1.0) || !std::isfinite(p))
        throw DomainError("khinchine_complex: p must be >= 1");
    return std::exp(log_gamma((p + 2.0) / 2.0) / p);
}

double qi_ratio(double r, double s)
{
    if (!(r > 0.0) || !(s > 0.0))
        throw DomainError("qi_ratio: arguments must be positive");
    if (r == s)
        throw DomainError("qi_ratio: r == s is a removable singularity and is not evaluated");
    return std::exp((log_gamma(s) - log_gamma(r)) / (s - r));
}

} // namespace bhc
