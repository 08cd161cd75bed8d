#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/errors.hpp"
#include "bhc/ksz.hpp"
#include "bhc/rng.hpp"

#include <cmath>
#include <limits>

using namespace bhc;

TEST_CASE("monomial_count")
{
    CHECK(monomial_count(2, 2) == 3);
    CHECK(monomial_count(2, 3) == 6);
    CHECK(monomial_count(3, 3) == 10);
    CHECK(monomial_count(1, 17) == 17);
    CHECK(monomial_count(9, 1) == 1);
    CHECK(monomial_count(30, 30) == 59132290782430712ULL);
    CHECK(monomial_count(1000000, 3) == 500001500001ULL);
    CHECK_THROWS_AS(monomial_count(0, 3), DomainError);
    CHECK_THROWS_AS(monomial_count(40, 40), OverflowError);
    CHECK_THROWS_AS(monomial_count(std::numeric_limits<std::uint64_t>::max(), 2), OverflowError);
    for (unsigned m = 1; m <= 5; ++m) {
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(monomial_count(m, n) == enumerate_multi_indices(m, n).size());
    }
}

TEST_CASE("random Bernoulli polynomials")
{
    const BernoulliPolynomial p = random_bernoulli(2, 2, 123);
    CHECK(p.poly.terms().size() == 3);
    CHECK(p.seed == 123u);
    for (const auto& [alpha, c] : p.poly.terms())
        CHECK((c == Complex(1.0) || c == Complex(-1.0)));

    const BernoulliPolynomial q = random_bernoulli(3, 5, 9);
    CHECK(q.poly.terms() == random_bernoulli(3, 5, 9).poly.terms());
    CHECK(q.poly.terms().size() == monomial_count(3, 5));
    CHECK(q.poly.terms() != random_bernoulli(3, 5, 10).poly.terms());
    CHECK_THROWS_AS(random_bernoulli(12, 40, 0), CapacityError);
}

TEST_CASE("Bernoulli sign frequencies")
{
    const unsigned draws = 10000;
    const auto indices = enumerate_multi_indices(2, 4);
    std::vector<double> sums(indices.size(), 0.0);
    for (unsigned s = 0; s < draws; ++s) {
        const BernoulliPolynomial p = random_bernoulli(2, 4, s);
        for (std::size_t i = 0; i < indices.size(); ++i)
            sums[i] += p.poly.coefficient(indices[i]).real();
    }
    const double sigma = 1.0 / std::sqrt(static_cast<double>(draws));
    for (double s : sums)
        CHECK(std::abs(s / draws) < 4.0 * sigma);
}

TEST_CASE("RNG stream")
{
    CounterRng a(42, 3);
    CounterRng b(42, 3);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    CHECK(a.position() == 100);
    CounterRng c(42, 3);
    CHECK(c.at(57) == CounterRng(42, 3).at(57));
    CHECK(CounterRng(42, 3).at(0) != CounterRng(42, 4).at(0));
    CHECK(CounterRng(42, 3).at(0) != CounterRng(43, 3).at(0));
    // The stream is the SplitMix64 sequence started from the key.
    std::uint64_t state = c.key();
    for (std::uint64_t i = 0; i < 10; ++i) {
        state += CounterRng::kGolden;
        CHECK(c.at(i) == splitmix64_mix(state));
    }
    CounterRng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("ksz_ratio")
{
    const double r5 = ksz_ratio(2, 2, std::sqrt(5.0));
    CHECK(r5 == doctest::Approx(0.949570640108255).epsilon(1e-14));
    CHECK(r5 > 0.9495);
    CHECK(ksz_ratio(2, 2, 3.0) == doctest::Approx(1.273982700432028).epsilon(1e-14));
    CHECK(ksz_ratio(3, 4, 2.0) == doctest::Approx(2.0 * ksz_ratio(3, 4, 1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(ksz_ratio(1, 2, 1.0), DomainError);
    CHECK_THROWS_AS(ksz_ratio(2, 2, 0.0), DomainError);
    const BernoulliPolynomial p = random_bernoulli(2, 2, 0);
    CHECK(ksz_ratio(p, 3.0) == ksz_ratio(2, 2, 3.0));
}

TEST_CASE("exhaustive m = n = 2")
{
    const ExperimentReport r = exhaustive_m2n2();
    CHECK(r.passed());
    CHECK(r.details["patterns"].size() == 8);
    CHECK(r.details["min_norm"].get<double>() == std::sqrt(5.0));
    const Json w = r.details["min_norm_witness"];
    CHECK(w["a"].get<double>() * w["b"].get<double>() < 0.0);
    int three = 0, root5 = 0;
    for (const Json& p : r.details["patterns"]) {
        const double norm = p["norm"].get<double>();
        three += norm == 3.0;
        root5 += norm == std::sqrt(5.0);
        CHECK((p["a"].get<double>() * p["b"].get<double>() >= 0.0) == (norm == 3.0));
    }
    CHECK(three == 4);
    CHECK(root5 == 4);
}

TEST_CASE("pol_bound_chain")
{
    const double c2 = pol_bound_chain(2);
    CHECK(c2 > 0.9679);
    CHECK(c2 < 0.9681);
    CHECK(c2 == doctest::Approx(0.968017518691038).epsilon(1e-13));
    CHECK(c2 / 1.7432 > 0.5553);
    CHECK(pol_bound_chain(3) == doctest::Approx(0.492041723372961).epsilon(1e-13));
    CHECK(std::isfinite(pol_bound_chain(5000)));
    CHECK_THROWS_AS(pol_bound_chain(1), DomainError);
}

TEST_CASE("divergence experiment")
{
    DivergenceParams p;
    p.m = 2;
    p.q = 4.0 / 3.0;
    p.n_list = {2, 4};
    p.trials = 8;
    p.seed = 3;
    const ExperimentReport r = divergence_experiment(p);
    REQUIRE(r.per_n.size() == 2);
    CHECK(r.details["theoretical_exponent"].get<double>() == doctest::Approx(0.0));
    CHECK(r.seed == 3u);
    for (const PerNStat& row : r.per_n) {
        CHECK(row.trials == 8);
        CHECK(row.stat_min <= row.stat_mean);
        CHECK(row.stat_mean <= row.stat_max);
        CHECK(row.witness.contains("signs"));
    }
    const ExperimentReport again = divergence_experiment(p);
    CHECK(again.to_json() == r.to_json());

    p.q = 2.0;
    p.n_list = {4, 8, 16};
    p.trials = 16;
    const ExperimentReport parseval = divergence_experiment(p);
    CHECK(parseval.find_check("statistic bounded by 1")->passed);

    p.mode = DivergenceMode::ComplexPolynomial;
    p.n_list = {2, 3};
    p.trials = 4;
    p.restarts = 4;
    const ExperimentReport poly = divergence_experiment(p);
    CHECK(poly.find_check("statistic bounded by 1")->passed);

    p.mode = DivergenceMode::RealMultilinear;
    p.n_list = {40};
    CHECK_THROWS_AS(divergence_experiment(p), CapacityError);
    p.q = 0.5;
    CHECK_THROWS_AS(divergence_experiment(p), DomainError);
}

TEST_CASE("ksz experiment")
{
    KszParams p;
    const ExperimentReport exhaustive = ksz_experiment(p);
    CHECK(exhaustive.details["min_norm"].get<double>() == std::sqrt(5.0));

    // 7 x 143 = 1001 exact-norm instances; the maximum must not keep growing with n.
    p.mode = DivergenceMode::RealMultilinear;
    p.trials = 143;
    double small = 0.0, large = 0.0;
    for (unsigned n = 2; n <= 8; ++n) {
        p.n = n;
        const ExperimentReport r = ksz_experiment(p);
        const double worst = r.per_n.front().stat_max;
        MESSAGE("real multilinear KSZ ratio, m = 2, n = " << n << ": max " << worst);
        double& bucket = n <= 4 ? small : large;
        bucket = std::max(bucket, worst);
    }
    CHECK(large <= 1.1 * small);
}
