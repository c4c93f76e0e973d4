#include <doctest.h>

#include "primecomp/tune.hpp"
#include "primecomp/verify.hpp"
#include "test_util.hpp"

using namespace primecomp;

namespace {

const PrimeTable& table_1e5() {
    static const PrimeTable t = sieve_range(0, 100'000);
    return t;
}

std::vector<std::uint64_t> ten_seeds() {
    std::vector<std::uint64_t> s;
    for (std::uint64_t k = 1; k <= 10; k++) s.push_back(k);
    return s;
}

}  // namespace

TEST_CASE("tune_c baseline at 1e5") {
    auto r = tune_c(100'000, ten_seeds(), 0.5, table_1e5());
    REQUIRE(r.attained);
    CHECK(r.c == doctest::Approx(1.25));  // recorded baseline, fixed seeds 1..10
    CHECK(r.success >= 0.5);
    CHECK(r.outcomes.size() == 10);
}

TEST_CASE("tune_c with target 0 returns the search floor") {
    auto r = tune_c(100'000, ten_seeds(), 0.0, table_1e5());
    REQUIRE(r.attained);
    CHECK(r.c == doctest::Approx(0.25));
}

TEST_CASE("success fraction is monotone under c doubling") {
    auto r = tune_c(100'000, ten_seeds(), 0.5, table_1e5());
    REQUIRE(r.attained);
    auto doubled = coverage_outcomes(2 * r.c, 100'000, ten_seeds(), table_1e5());
    CHECK(success_fraction(doubled) >= r.success);
    // coupling makes this per-seed monotone, not just in aggregate
    for (std::size_t k = 0; k < doubled.size(); k++)
        if (r.outcomes[k].success) CHECK(doubled[k].success);
}

TEST_CASE("tune_c reports unattainable targets") {
    auto r = tune_c(100'000, ten_seeds(), 1.01, table_1e5(), 0.25, 4.0);
    CHECK_FALSE(r.attained);
}

TEST_CASE("coverage_outcomes validates inputs") {
    CHECK_THROWS_AS(coverage_outcomes(1.0, 100'000, {}, table_1e5()), std::invalid_argument);
    CHECK_THROWS_AS(coverage_outcomes(1.0, 5'000, ten_seeds(), table_1e5()),
                    std::invalid_argument);
}
