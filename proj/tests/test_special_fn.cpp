#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/errors.hpp"
#include "bhc/special_fn.hpp"

#include <cmath>
#include <limits>
#include <utility>

using namespace bhc;

namespace {

// ln Gamma reference values computed with 30-digit arithmetic.
const std::pair<double, double> kLogGammaTable[] = {
    {0.001, 6.9071788853838536825},
    {0.5, 0.57236494292470008707},
    {0.75, 0.20328095143129537148},
    {1.0001, -0.000057713342220477623308},
    {1.3, -0.10817480950786047095},
    {1.7, -0.095807697407065864527},
    {1.999, -0.00042246180069215377611},
    {2.2, 0.096947466790638776492},
    {2.6, 0.35741186354897977006},
    {3.5, 1.2009736023470742248},
    {7.25, 7.0521854507385394449},
    {10.0, 12.801827480081469611},
    {123.456, 469.60554712992946873},
    {1000.5, 5908.6741758486774887},
    {1e5, 1051287.7089736568949},
    {1e6, 12815504.56914761166},
};

} // namespace

TEST_CASE("log_gamma anchors")
{
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(log_gamma(2.0)) < 1e-15);
    CHECK(log_gamma(0.5) == doctest::Approx(std::log(kSqrtPi)).epsilon(1e-13));
    CHECK(log_gamma(1.5) == doctest::Approx(std::log(kSqrtPi / 2.0)).epsilon(1e-13));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK(std::exp(log_gamma(0.5)) == doctest::Approx(kSqrtPi).epsilon(1e-12));
}

TEST_CASE("log_gamma against high-precision reference")
{
    for (const auto& [x, expected] : kLogGammaTable) {
        CAPTURE(x);
        const double err = std::abs(log_gamma(x) - expected);
        CHECK(err <= 1e-13 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("log_gamma recurrence")
{
    for (double x = 0.55; x < 40.0; x += 0.37) {
        CAPTURE(x);
        CHECK(log_gamma(x + 1.0) - log_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-12));
    }
}

TEST_CASE("log_gamma domain")
{
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
}

TEST_CASE("find_p0")
{
    const double p0 = find_p0();
    CHECK(p0 == doctest::Approx(1.84741633607634).epsilon(1e-12));
    CHECK(std::abs(std::exp(log_gamma((p0 + 1.0) / 2.0)) - kSqrtPi / 2.0) < 1e-12);
    auto f = [](double p) { return std::exp(log_gamma((p + 1.0) / 2.0)) - kSqrtPi / 2.0; };
    CHECK(f(1.0) > 0.0);
    CHECK(f(1.95) < 0.0);
    // The defining equation also holds at p = 2.
    CHECK(std::abs(f(2.0)) < 1e-15);
    CHECK(find_p0() == p0);
}

TEST_CASE("khinchine_real")
{
    CHECK(khinchine_real(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(khinchine_real(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(khinchine_real(4.0 / 3.0) == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(khinchine_real(0.99), DomainError);

    const double p0 = find_p0();
    CHECK(std::abs(khinchine_real(p0 - 1e-9) - khinchine_real(p0 + 1e-9)) < 1e-7);

    double previous = khinchine_real(1.0);
    for (int i = 1; i <= 300; ++i) {
        const double p = 1.0 + i / 100.0;
        const double a = khinchine_real(p);
        CAPTURE(p);
        CHECK(a >= previous);
        if (p <= 2.0) {
            CHECK(a > 0.0);
            CHECK(a <= 1.0 + 1e-15);
        }
        previous = a;
    }
}

TEST_CASE("khinchine_complex")
{
    CHECK(khinchine_complex(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(khinchine_complex(1.0) == doctest::Approx(kSqrtPi / 2.0).epsilon(1e-14));
    CHECK(khinchine_complex(4.0 / 3.0) == doctest::Approx(0.92613420528818625751).epsilon(1e-13));
    CHECK_THROWS_AS(khinchine_complex(0.5), DomainError);
}

TEST_CASE("qi_ratio")
{
    CHECK(qi_ratio(1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(qi_ratio(2.0, 3.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(qi_ratio(1.5, 2.5) == doctest::Approx(1.5).epsilon(1e-13));
    CHECK_THROWS_AS(qi_ratio(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(qi_ratio(0.0, 1.0), DomainError);

    for (int i = 1; i <= 100; ++i) {
        for (int j = 1; j <= 100; ++j) {
            const double r = i / 10.0;
            const double s = j / 10.0;
            if (i == j)
                continue;
            const double v = qi_ratio(r, s);
            CAPTURE(r);
            CAPTURE(s);
            if (i + 1 <= 100 && i + 1 != j)
                CHECK(qi_ratio(r + 0.1, s) >= v * (1.0 - 1e-12));
            if (j + 1 <= 100 && j + 1 != i)
                CHECK(qi_ratio(r, s + 0.1) >= v * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("Euler-Mascheroni constant")
{
    CHECK(kEulerGamma == doctest::Approx(0.57721566490153286).epsilon(1e-16));
}
