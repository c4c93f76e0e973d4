#include <doctest.h>

#include <cmath>

#include "primecomp/goldbach.hpp"
#include "primecomp/randcomplement.hpp"
#include "test_util.hpp"

using namespace primecomp;

TEST_CASE("goldbach_count ordered-pair examples") {
    const auto& t = pctest::table_small();
    CHECK(goldbach_count(4, t) == 1);    // 2+2
    CHECK(goldbach_count(10, t) == 3);   // (3,7),(5,5),(7,3)
    CHECK(goldbach_count(100, t) == 12);

    CHECK_THROWS_AS(goldbach_count(7, t), std::invalid_argument);
    CHECK_THROWS_AS(goldbach_count(2, t), std::invalid_argument);
    auto tiny = sieve_range(0, 50);
    CHECK_THROWS_AS(goldbach_count(100, tiny), std::invalid_argument);
}

TEST_CASE("every even n in [4, 2e5] has a representation") {
    const auto& t = pctest::table_1e6();
    for (std::uint64_t n = 4; n <= 200'000; n += 2) {
        std::uint64_t p = first_goldbach_prime(n, t);
        if (p == 0) {
            CAPTURE(n);
            REQUIRE(p != 0);
        }
    }
}

TEST_CASE("goldbach_count against a brute double loop") {
    const auto& t = pctest::table_small();
    for (std::uint64_t n : {4ull, 6ull, 36ull, 128ull, 1000ull, 9000ull}) {
        std::uint64_t brute = 0;
        for (std::uint64_t p1 = 2; p1 <= n - 2; p1++)
            if (t.is_prime(p1) && t.is_prime(n - p1)) brute++;
        CHECK(goldbach_count(n, t) == brute);
    }
}

TEST_CASE("short interval pair counts") {
    const auto& t = pctest::table_small();

    IntervalPairQuery degenerate{100, 0, 40, 0.5};
    CHECK_THROWS_AS(short_interval_pair_count(100, degenerate, t), std::invalid_argument);

    IntervalPairQuery q{96, 8, 40, 0.5};
    CHECK(short_interval_pair_count(100, q, t) == 2);  // (41,59),(47,53)

    CHECK_THROWS_AS(short_interval_pair_count(99, q, t), std::invalid_argument);   // parity
    CHECK_THROWS_AS(short_interval_pair_count(90, q, t), std::invalid_argument);   // below x
    CHECK_THROWS_AS(short_interval_pair_count(106, q, t), std::invalid_argument);  // above x+M

    // brute oracle across a batch of windows
    for (std::uint64_t x : {2'000ull, 9'000ull, 20'000ull}) {
        IntervalPairQuery w{x, 200, x / 2, 0.5};
        for (std::uint64_t n = x; n <= x + 200; n += 2) {
            std::uint64_t brute = 0;
            for (std::uint64_t p1 = w.y; p1 <= w.y + w.M; p1++) {
                if (!t.is_prime(p1)) continue;
                std::uint64_t p2 = n - p1;
                if (p2 >= 2 && p2 >= x - w.y - w.M && p2 <= x - w.y + w.M && t.is_prime(p2)) brute++;
            }
            CHECK(short_interval_pair_count(n, w, t) == brute);
        }
    }
}

TEST_CASE("short interval and z counts on a large window") {
    auto t = sieve_range(0, 1'010'000);

    IntervalPairQuery q{1'000'000, 10'000, 500'000, 0.5};
    std::uint64_t brute = 0;
    for (std::uint64_t p1 = q.y; p1 <= q.y + q.M; p1++) {
        if (!t.is_prime(p1)) continue;
        std::uint64_t p2 = 1'000'002 - p1;
        if (p2 >= q.x - q.y - q.M && p2 <= q.x - q.y + q.M && t.is_prime(p2)) brute++;
    }
    CHECK(short_interval_pair_count(1'000'002, q, t) == brute);
    CHECK(brute > 0);

    std::uint64_t zbrute = 0;
    for (std::uint64_t p1 = 500; p1 <= 600; p1++)
        if (t.is_prime(p1) && t.is_prime(1'000'001 - p1)) zbrute++;
    CHECK(z_count(1'000'001, 500, 600, t) == zbrute);
}

TEST_CASE("short interval mirror symmetry at n = x") {
    const auto& t = pctest::table_small();
    for (std::uint64_t y : {100ull, 3'000ull, 5'000ull}) {
        IntervalPairQuery q{10'000, 500, y, 0.5};
        IntervalPairQuery mirror{10'000, 500, q.x - y - q.M, 0.5};
        CHECK(short_interval_pair_count(q.x, q, t) == short_interval_pair_count(q.x, mirror, t));
    }
}

TEST_CASE("z_count") {
    const auto& t = pctest::table_small();
    CHECK(z_count(10, 3, 7, t) == 3);
    CHECK(z_count(11, 3, 7, t) == 0);  // 8, 6, 4 all composite
    CHECK_THROWS_AS(z_count(4, 3, 7, t), std::invalid_argument);

    // z(n, I) <= pi(I_hi) - pi(I_lo - 1)
    const auto& big = pctest::table_1e6();
    for (std::uint64_t n : {999'999ull, 999'000ull, 500'000ull}) {
        std::uint64_t z = z_count(n, 500, 600, big);
        CHECK(z <= big.count_primes(600) - big.count_primes(499));
    }
}

TEST_CASE("exceptional_set with cstar = 0 is empty") {
    const auto& t = pctest::table_small();
    const auto& f = pctest::fact_1e6();
    SingularSeries series({0, 1e-6}, 6.0);
    IntervalPairQuery q{10'000, 1'000, 5'000, 0.0};
    auto rep = exceptional_set(q, t, series, f);
    CHECK(rep.exceptional_count == 0);
    CHECK(rep.tested == 501);
    CHECK(rep.predicted_cap == doctest::Approx(1'000.0 / std::pow(std::log(1e4), 2)));
}

TEST_CASE("exceptional_set against a brute recount") {
    const auto& t = pctest::table_small();
    const auto& f = pctest::fact_1e6();
    SingularSeries series({0, 1e-6}, 6.0);
    IntervalPairQuery q{10'000, 1'000, 5'000, 0.5};
    auto rep = exceptional_set(q, t, series, f);

    std::uint64_t brute_exceptional = 0;
    std::vector<std::uint64_t> brute_list;
    double brute_inf = 1e300;
    for (std::uint64_t n = 10'000; n <= 11'000; n += 2) {
        double s = static_cast<double>(short_interval_pair_count(n, q, t));
        double cn = series.eval(n, f);
        double logn = std::log(static_cast<double>(n));
        double threshold = q.cstar * cn * 1'000.0 / (3.0 * logn * logn);
        if (s < threshold) {
            brute_exceptional++;
            brute_list.push_back(n);
        } else {
            brute_inf = std::min(brute_inf, s * logn * logn / (cn * 1'000.0));
        }
    }
    CHECK(rep.exceptional_count == brute_exceptional);
    CHECK(rep.exceptional == brute_list);
    if (rep.has_infimum) CHECK(rep.infimum_ratio == doctest::Approx(brute_inf).epsilon(1e-12));

    // partitioning independence
    auto serial = exceptional_set(q, t, series, f, 1);
    auto parallel = exceptional_set(q, t, series, f, 4);
    CHECK(serial.exceptional_count == parallel.exceptional_count);
    CHECK(serial.exceptional == parallel.exceptional);
    CHECK(serial.infimum_ratio == parallel.infimum_ratio);
}

TEST_CASE("Hardy-Littlewood ratio band on sampled even n") {
    const auto& t = pctest::table_1e6();
    const auto& f = pctest::fact_1e6();
    SingularSeries series({0, 1e-6}, 6.0);
    for (std::uint64_t k = 0; k < 200; k++) {
        std::uint64_t n = 100'000 + 2 * (counter_hash(1234, k) % 450'000);
        double r = static_cast<double>(goldbach_count(n, t));
        double logn = std::log(static_cast<double>(n));
        double ratio = r * logn * logn / (series.eval(n, f) * static_cast<double>(n));
        if (!(ratio >= 0.5 && ratio <= 2.5)) {
            CAPTURE(n);
            CAPTURE(ratio);
            REQUIRE((ratio >= 0.5 && ratio <= 2.5));
        }
    }
}
