#include <doctest.h>

#include <cmath>
#include <numeric>

#include "primecomp/numtheory.hpp"
#include "primecomp/randcomplement.hpp"
#include "primecomp/sieve.hpp"
#include "test_util.hpp"

using namespace primecomp;

TEST_CASE("omega, tau, phi, squarefree on the worked examples") {
    const auto& f = pctest::fact_1e6();
    CHECK(omega(1, f) == 0);
    CHECK(omega(12, f) == 2);
    CHECK(omega(30, f) == 3);

    CHECK(tau(1, f) == 1);
    CHECK(tau(12, f) == 6);
    CHECK(tau(30, f) == 8);

    CHECK(euler_phi(1, f) == 1);
    CHECK(euler_phi(10, f) == 4);
    for (std::uint64_t p : {2ull, 3ull, 97ull, 99991ull}) CHECK(euler_phi(p, f) == p - 1);

    CHECK(is_squarefree(1, f));
    CHECK_FALSE(is_squarefree(12, f));
    CHECK(is_squarefree(30, f));

    CHECK_THROWS_AS(omega(0, f), std::invalid_argument);
}

TEST_CASE("tau equals 2^omega exactly on squarefree numbers") {
    const auto& f = pctest::fact_1e6();
    for (std::uint64_t d = 1; d <= 1'000'000; d++) {
        if (!is_squarefree(d, f)) continue;
        if (tau(d, f) != (std::uint64_t{1} << omega(d, f))) {
            CAPTURE(d);
            REQUIRE(tau(d, f) == (std::uint64_t{1} << omega(d, f)));
        }
    }
}

TEST_CASE("phi is multiplicative on coprime pairs") {
    const auto& f = pctest::fact_1e6();
    int checked = 0;
    for (std::uint64_t k = 0; checked < 300; k++) {
        std::uint64_t a = 2 + counter_hash(99, 2 * k) % 999;
        std::uint64_t b = 2 + counter_hash(99, 2 * k + 1) % 999;
        if (std::gcd(a, b) != 1) continue;
        CHECK(euler_phi(a * b, f) == euler_phi(a, f) * euler_phi(b, f));
        checked++;
    }
}

TEST_CASE("spf factorization agrees with trial division") {
    const auto& f = pctest::fact_1e6();
    for (std::uint64_t k = 0; k < 200; k++) {
        std::uint64_t n = 1 + counter_hash(7, k) % 1'000'000;
        CHECK(f.factorize(n) == trial_factorize(n));
    }
}

TEST_CASE("phi reciprocal sums") {
    CHECK(phi_reciprocal_sum(1) == doctest::Approx(1.0));
    CHECK(phi_reciprocal_sum(10) == doctest::Approx(4.583333333333333).epsilon(1e-12));
    CHECK_THROWS_AS(phi_reciprocal_sum(0), std::invalid_argument);

    // sum / log x stays in a narrow band: ratios within a factor 2
    double lo = 1e300, hi = 0;
    for (std::uint64_t x : {1'000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
        double r = phi_reciprocal_sum(x) / std::log(static_cast<double>(x));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(hi / lo < 2.0);
}

TEST_CASE("divisor sums over shifted primes") {
    CHECK(divisor_sum_over_shifted_primes(4) == 3);
    CHECK(divisor_sum_over_shifted_primes(10) == 10);
    CHECK_THROWS_AS(divisor_sum_over_shifted_primes(2), std::invalid_argument);

    // sum_{i<n prime} tau(n-i) stays below a small multiple of n
    std::uint64_t v = divisor_sum_over_shifted_primes(100'000);
    CHECK(static_cast<double>(v) <= 2.0 * 100'000);
    CHECK(v > 0);
}

namespace {

// Independent product oracle: classic char-array sieve, serial double.
double oracle_universal_product(std::uint64_t P) {
    std::vector<char> mark(P + 1, 1);
    double prod = 1.0;
    for (std::uint64_t i = 2; i <= P; i++) {
        if (!mark[i]) continue;
        for (std::uint64_t j = i * i; j <= P; j += i) mark[j] = 0;
        if (i >= 3) {
            double q = static_cast<double>(i) - 1.0;
            prod *= 1.0 - 1.0 / (q * q);
        }
    }
    return prod;
}

}  // namespace

TEST_CASE("universal product checkpoints against an independent oracle") {
    auto vals = universal_product_checkpoints({1'000, 100'000});
    CHECK(vals[0] == doctest::Approx(oracle_universal_product(1'000)).epsilon(1e-14));
    CHECK(vals[1] == doctest::Approx(oracle_universal_product(100'000)).epsilon(1e-14));
    CHECK(vals[1] < vals[0]);  // more factors below 1

    // thread-count independence
    auto serial = universal_product_checkpoints({100'000}, 1);
    auto parallel = universal_product_checkpoints({100'000}, 4);
    CHECK(serial[0] == parallel[0]);
}

TEST_CASE("singular series values and properties") {
    const auto& f = pctest::fact_1e6();
    SingularSeries series({0, 1e-6}, 6.0);

    CHECK(series.eval(15, f) == 0.0);  // odd: exactly zero
    CHECK(series.eval(9999, f) == 0.0);
    CHECK_THROWS_AS(series.eval(1, f), std::invalid_argument);

    // C(2) = 2 * prod_{p>=3} (1 - 1/(p-1)^2)
    CHECK(series.eval(2, f) == doctest::Approx(1.3203236).epsilon(1e-6));
    CHECK(series.eval(2, f) == doctest::Approx(2.0 * oracle_universal_product(2'000'000)).epsilon(1e-7));

    for (std::uint64_t n = 2; n <= 10'000; n += 2) {
        if (!(series.eval(n, f) > 0.6)) {
            CAPTURE(n);
            REQUIRE(series.eval(n, f) > 0.6);
        }
    }
}

TEST_CASE("singular series truncation consistency") {
    const auto& f = pctest::fact_1e6();
    SingularSeries loose({0, 1e-5}, 6.0);
    SingularSeries tight({0, 5e-6}, 6.0);
    CHECK(tight.truncation_bound() > loose.truncation_bound());
    for (std::uint64_t n : {2ull, 6ull, 30ull, 9240ull, 30030ull, 999'998ull}) {
        double a = loose.eval(n, f), b = tight.eval(n, f);
        CHECK(std::abs(a - b) <= 1e-5);
        CHECK(a >= b);  // truncation error is one-sided
    }
}

TEST_CASE("C(m)^2 <= 4 * prod_{p|m}(1 + 2/p) on even m <= 1e4") {
    const auto& f = pctest::fact_1e6();
    SingularSeries series({0, 1e-6}, 6.0);
    for (std::uint64_t m = 2; m <= 10'000; m += 2) {
        double rhs = 1.0;  // sum over squarefree d | m of 2^omega(d)/d
        for (auto [p, e] : f.factorize(m)) rhs *= 1.0 + 2.0 / static_cast<double>(p);
        double c = series.eval(m, f);
        if (!(c * c <= 4.0 * rhs)) {
            CAPTURE(m);
            REQUIRE(c * c <= 4.0 * rhs);
        }
    }
}

TEST_CASE("unattainable tolerance is rejected") {
    const auto& f = pctest::fact_1e6();
    SingularSeries series({1'000, 1e-12});
    CHECK_THROWS_AS(series.eval(2, f), std::invalid_argument);
    CHECK_THROWS_AS(SingularSeries({0, -1.0}), std::invalid_argument);
}

TEST_CASE("tail bound is a decreasing upper envelope") {
    CHECK(SingularSeries::tail_bound(1'000) > SingularSeries::tail_bound(10'000));
    CHECK(SingularSeries::tail_bound(1'000'000) < 1e-6);
    // oracle: actual prime tail sum between two bounds
    double tail_actual = 0;
    for (std::uint64_t p : pctest::oracle_primes(1'001, 100'000)) {
        double q = static_cast<double>(p) - 1.0;
        tail_actual += 1.0 / (q * q);
    }
    CHECK(tail_actual < SingularSeries::tail_bound(1'000));
}
