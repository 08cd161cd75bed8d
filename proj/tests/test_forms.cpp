#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/errors.hpp"
#include "bhc/forms.hpp"
#include "bhc/ksz.hpp"
#include "bhc/rng.hpp"
#include "bhc/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace bhc;

namespace {

// Maximum of |U| over every vertex of the product of cubes, all arguments.
double naive_vertex_norm(const MultilinearForm& form)
{
    const auto& dims = form.dims();
    const std::size_t bits = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<std::vector<Complex>> args;
        std::size_t b = 0;
        for (std::size_t d : dims) {
            std::vector<Complex> x(d);
            for (std::size_t i = 0; i < d; ++i, ++b)
                x[i] = ((mask >> b) & 1u) ? -1.0 : 1.0;
            args.push_back(std::move(x));
        }
        best = std::max(best, std::abs(form.evaluate(args)));
    }
    return best;
}

MultilinearForm random_real_form(CounterRng& rng, std::size_t m, std::size_t max_dim, bool integer)
{
    std::vector<std::size_t> dims(m);
    for (auto& d : dims)
        d = 1 + static_cast<std::size_t>(rng.uniform() * max_dim);
    MultilinearForm shape(dims);
    std::vector<double> c(shape.coefficients().size());
    for (double& v : c)
        v = integer ? std::floor(rng.uniform() * 11.0) - 5.0 : 2.0 * rng.uniform() - 1.0;
    return MultilinearForm::real(dims, c);
}

} // namespace

TEST_CASE("multilinear form construction")
{
    const double one[] = {1.0};
    const MultilinearForm u = MultilinearForm::real({1, 1}, one);
    CHECK(u.arity() == 2);
    CHECK_THROWS_AS(MultilinearForm({}, ScalarField::Real), DomainError);
    CHECK_THROWS_AS(MultilinearForm({2, 0}, ScalarField::Real), DomainError);
    const double two[] = {1.0, 2.0};
    CHECK_THROWS_AS(MultilinearForm::real({3}, two), DomainError);
    const double bad[] = {std::nan("")};
    CHECK_THROWS_AS(MultilinearForm::real({1}, bad), DomainError);

    MultilinearForm f({2, 3}, ScalarField::Real);
    const std::size_t idx[] = {1, 2};
    f.set(idx, 7.0);
    CHECK(f.offset(idx) == 5);
    CHECK(f.at(idx) == Complex(7.0));
    CHECK_THROWS_AS(f.set(idx, Complex(0.0, 1.0)), DomainError);
    const std::size_t out_of_range[] = {2, 0};
    CHECK_THROWS_AS(f.offset(out_of_range), DomainError);

    const MultilinearForm l = littlewood_form();
    std::vector<std::vector<Complex>> args{{1.0, 1.0}, {1.0, -1.0}};
    CHECK(l.evaluate(args) == Complex(2.0));
}

TEST_CASE("sup_norm_real_exact examples")
{
    const double one[] = {1.0};
    CHECK(sup_norm_real_exact(MultilinearForm::real({1, 1}, one)) == 1.0);
    CHECK(sup_norm_real_exact(littlewood_form()) == 2.0);
    const double ones[] = {1.0, 1.0, 1.0, 1.0};
    CHECK(sup_norm_real_exact(MultilinearForm::real({2, 2}, ones)) == 4.0);
    const double linear[] = {1.0, -2.0, 3.0};
    CHECK(sup_norm_real_exact(MultilinearForm::real({3}, linear)) == 6.0);

    CHECK_THROWS_AS(sup_norm_real_exact(random_bernoulli_form(2, 30, 1)), CapacityError);
    CHECK_NOTHROW(sup_norm_real_exact(random_bernoulli_form(2, 12, 1), 12));
    CHECK_THROWS_AS(sup_norm_real_exact(random_bernoulli_form(2, 12, 1), 11), CapacityError);
    MultilinearForm complex_form({2}, {Complex(1.0, 1.0), 1.0}, ScalarField::Complex);
    CHECK_THROWS_AS(sup_norm_real_exact(complex_form), DomainError);
}

TEST_CASE("shortcut oracle equals full vertex enumeration")
{
    CounterRng rng(2024);
    for (int i = 0; i < 300; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 3);
        const MultilinearForm f = random_real_form(rng, m, 3, i % 2 == 0);
        CAPTURE(i);
        const double naive = naive_vertex_norm(f);
        const double fast = sup_norm_real_exact(f);
        if (i % 2 == 0)
            CHECK(fast == naive);
        else
            CHECK(fast == doctest::Approx(naive).epsilon(1e-14));
    }
}

TEST_CASE("Gray-code enumeration stays exact over long runs")
{
    const MultilinearForm f = random_bernoulli_form(3, 6, 99);
    CHECK(sup_norm_real_exact(f) == naive_vertex_norm(f));
}

TEST_CASE("coefficient norms and ratios")
{
    const MultilinearForm l = littlewood_form();
    CHECK(coeff_lq_norm(l, 4.0 / 3.0) == doctest::Approx(std::pow(4.0, 0.75)).epsilon(1e-15));
    CHECK(std::abs(bh_ratio(l, 4.0 / 3.0) - std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(bh_ratio(l, 4.0 / 3.0) - lower_bound(2, 1.0)) <= 1e-12);

    const double single[] = {-3.5};
    const MultilinearForm s = MultilinearForm::real({1, 1, 1}, single);
    for (double q : {1.0, 1.5, 2.0, 7.0}) {
        CHECK(coeff_lq_norm(s, q) == doctest::Approx(3.5).epsilon(1e-15));
        CHECK(bh_ratio(s, q) == doctest::Approx(1.0).epsilon(1e-15));
    }
    const double ones[] = {1.0, 1.0, 1.0, 1.0};
    const MultilinearForm all = MultilinearForm::real({2, 2}, ones);
    CHECK(coeff_lq_norm(all, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bh_ratio(all, 4.0 / 3.0) == doctest::Approx(std::pow(4.0, 0.75) / 4.0).epsilon(1e-15));

    CHECK_THROWS_AS(coeff_lq_norm(all, 0.5), DomainError);
    const MultilinearForm zero({2, 2}, ScalarField::Real);
    CHECK_THROWS_AS(bh_ratio(zero, 1.5), DegenerateError);
}

TEST_CASE("homogeneity")
{
    CounterRng rng(7);
    for (int i = 0; i < 50; ++i) {
        MultilinearForm f = random_real_form(rng, 2, 3, false);
        const double norm = sup_norm_real_exact(f);
        const double lq = coeff_lq_norm(f, 1.5);
        const double ratio = bh_ratio(f, 1.5);
        f.scale(3.25);
        CHECK(sup_norm_real_exact(f) == doctest::Approx(3.25 * norm).epsilon(1e-12));
        CHECK(coeff_lq_norm(f, 1.5) == doctest::Approx(3.25 * lq).epsilon(1e-12));
        CHECK(bh_ratio(f, 1.5) == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("realized ratios stay below the R constants")
{
    for (unsigned m = 2; m <= 3; ++m) {
        const double q = 2.0 * m / (m + 1.0);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const double ratio = bh_ratio(random_bernoulli_form(m, n, seed), q);
                CHECK(ratio <= r_seq(m, ScalarField::Real));
                CHECK(ratio <= c_real(m) * (1.0 + 1e-15));
            }
        }
    }
}

TEST_CASE("polynomials")
{
    HomogeneousPolynomial p(2, 2);
    CHECK_THROWS_AS(p.set({1, 0}, 1.0), DomainError);
    CHECK_THROWS_AS(p.set({1, 1, 0}, 1.0), DomainError);
    p.set({1, 1}, 2.0);
    CHECK(p.coefficient({1, 1}) == Complex(2.0));
    CHECK(p.coefficient({2, 0}) == Complex(0.0));
    p.set({1, 1}, 0.0);
    CHECK(p.terms().empty());

    const HomogeneousPolynomial q = quadratic_p2(1.0, -1.0, 1.0);
    const Complex z[] = {Complex(1.0), Complex(2.0)};
    CHECK(q.evaluate(z) == Complex(1.0 - 4.0 + 2.0));
    CHECK(coeff_lq_norm(q, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    const auto idx = enumerate_multi_indices(2, 2);
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == MultiIndex{2, 0});
    CHECK(idx[1] == MultiIndex{1, 1});
    CHECK(idx[2] == MultiIndex{0, 2});
    CHECK(enumerate_multi_indices(3, 3).size() == 10);
    CHECK(enumerate_multi_indices(4, 5).size() == monomial_count(4, 5));
}

TEST_CASE("two-variable quadratic norms")
{
    CHECK(norm_p2_complex(1, 1, 1) == 3.0);
    CHECK(norm_p2_complex(1, -1, 1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(norm_p2_complex(1, 0, 0) == 1.0);
    CHECK(norm_p2_real(1, -1, 1) == 1.25);
    CHECK(norm_p2_real(1, 1, 1) == 3.0);
    CHECK(norm_p2_real(1, 0, 0) == 1.0);

    CounterRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double a = 4.0 * rng.uniform() - 2.0;
        const double b = 4.0 * rng.uniform() - 2.0;
        const double c = 4.0 * rng.uniform() - 2.0;
        CHECK(norm_p2_real(a, b, c) <= norm_p2_complex(a, b, c) * (1.0 + 1e-15));
    }
}

TEST_CASE("real quadratic norm against a dense grid")
{
    CounterRng rng(5);
    for (int i = 0; i < 40; ++i) {
        const double a = 2.0 * rng.uniform() - 1.0;
        const double b = 2.0 * rng.uniform() - 1.0;
        const double c = 2.0 * rng.uniform() - 1.0;
        double grid = 0.0;
        for (int x = -200; x <= 200; ++x) {
            for (int y = -200; y <= 200; ++y) {
                const double u = x / 200.0, v = y / 200.0;
                grid = std::max(grid, std::abs(a * u * u + b * v * v + c * u * v));
            }
        }
        const double exact = norm_p2_real(a, b, c);
        CHECK(exact >= grid - 1e-12);
        CHECK(exact <= grid + 0.05);
    }
}

TEST_CASE("torus estimate")
{
    HomogeneousPolynomial mono(2, 2);
    mono.set({2, 0}, 1.0);
    CHECK(sup_norm_complex_estimate(mono, 4, 3) == doctest::Approx(1.0).epsilon(1e-14));

    const HomogeneousPolynomial plus = quadratic_p2(1.0, 2.0, 0.5);
    CHECK(sup_norm_complex_estimate(plus, 8, 1) == doctest::Approx(3.5).epsilon(1e-12));

    const HomogeneousPolynomial mixed = quadratic_p2(1.0, -1.0, 1.0);
    const double est = sup_norm_complex_estimate(mixed, 64, 0);
    CHECK(std::abs(est - std::sqrt(5.0)) <= 1e-6);
    CHECK(est <= std::sqrt(5.0) * (1.0 + 4e-16));

    CounterRng rng(17);
    for (int i = 0; i < 100; ++i) {
        const double a = 2.0 * rng.uniform() - 1.0;
        const double b = 2.0 * rng.uniform() - 1.0;
        const double c = 2.0 * rng.uniform() - 1.0;
        const double exact = norm_p2_complex(a, b, c);
        const double found = sup_norm_complex_estimate(quadratic_p2(a, b, c), 16, i);
        CAPTURE(i);
        CHECK(found <= exact * (1.0 + 1e-14));
        CHECK(found >= exact * (1.0 - 1e-6));
    }

    CHECK(sup_norm_complex_estimate(mixed, 8, 42) == sup_norm_complex_estimate(mixed, 8, 42));
    CHECK_THROWS_AS(sup_norm_complex_estimate(mixed, 0, 0), DomainError);
}
