#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/errors.hpp"
#include "bhc/verification.hpp"

#include <string>

using namespace bhc;

namespace {

std::string failures(const ExperimentReport& r)
{
    std::string out;
    for (const CheckResult& c : r.checks) {
        if (!c.passed)
            out += c.name + " at " + (c.first_violation ? std::to_string(*c.first_violation) : "-") + "; ";
    }
    return out;
}

} // namespace

TEST_CASE("monotonicity suite")
{
    const ExperimentReport r = verify_monotonicity(1000);
    INFO(failures(r));
    CHECK(r.passed());
    CHECK(r.checks.size() > 10);
    CHECK(r.details["D_minus_X_at_n_max"].get<double>() > 0.0);
    CHECK_THROWS_AS(verify_monotonicity(7), DomainError);
}

TEST_CASE("sandwich suite")
{
    const ExperimentReport r = verify_sandwich(4096);
    INFO(failures(r));
    CHECK(r.passed());
}

TEST_CASE("reduction suite")
{
    const ExperimentReport r = verify_reduction(64);
    INFO(failures(r));
    CHECK(r.passed());
}

TEST_CASE("fundamental lemma suite")
{
    const ExperimentReport r = verify_fundamental_lemma(10000);
    INFO(failures(r));
    CHECK(r.passed());
}

TEST_CASE("block ratio suite")
{
    const ExperimentReport r = verify_block_ratios(1 << 14);
    INFO(failures(r));
    // The limits are only asserted at large n; check the monotone part here.
    CHECK(r.find_check("real: R_{2n}/R_n strictly decreasing")->passed);
    CHECK(r.find_check("complex: R_{2n}/R_n strictly decreasing")->passed);
}

TEST_CASE("report structure")
{
    ExperimentReport a;
    a.experiment = "x";
    a.add_check("one", true);
    CHECK(a.passed());
    CHECK(a.verdict() == "pass");
    ExperimentReport b;
    b.add_check("two", false, 17, "detail");
    a.merge(b);
    CHECK_FALSE(a.passed());
    CHECK(a.verdict() == "fail");
    REQUIRE(a.find_check("two") != nullptr);
    CHECK(*a.find_check("two")->first_violation == 17);
    CHECK(a.find_check("three") == nullptr);

    a.seed = 5;
    const Json j = a.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    const std::vector<std::string> expected{"experiment", "params", "seed", "per_n", "checks", "details", "verdict"};
    CHECK(keys == expected);
    CHECK(j["verdict"] == "fail");
}
