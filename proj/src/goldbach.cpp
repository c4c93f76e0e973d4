#include "primecomp/goldbach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace primecomp {

std::uint64_t goldbach_count(std::uint64_t n, const PrimeTable& table) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("goldbach_count: n must be even, >= 4");
    if (!table.covers(2, n)) throw std::invalid_argument("goldbach_count: table too small");
    std::uint64_t count = 0;
    table.for_each_prime(2, n - 2, [&](std::uint64_t p) { count += table.is_prime(n - p); });
    return count;
}

std::uint64_t first_goldbach_prime(std::uint64_t n, const PrimeTable& table) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("first_goldbach_prime: n must be even, >= 4");
    if (!table.covers(2, n)) throw std::invalid_argument("first_goldbach_prime: table too small");
    if (table.is_prime(n - 2)) return 2;
    for (std::uint64_t p = 3; p + p <= n; p += 2)
        if (table.is_prime(p) && table.is_prime(n - p)) return p;
    return 0;
}

void IntervalPairQuery::validate() const {
    if (M == 0) throw std::invalid_argument("IntervalPairQuery: M must be >= 1");
    if (x < M || y > x - M) throw std::invalid_argument("IntervalPairQuery: need 0 <= y <= x - M");
    if (cstar < 0) throw std::invalid_argument("IntervalPairQuery: cstar < 0");
    double m_lo = std::pow(static_cast<double>(x), 1.0 - c0);
    if (static_cast<double>(M) < m_lo || M > x)
        warn("IntervalPairQuery: M outside [x^(1-c0), x]; window assumption violated");
}

std::uint64_t short_interval_pair_count(std::uint64_t n, const IntervalPairQuery& query,
                                        const PrimeTable& table) {
    query.validate();
    if (n % 2 != 0) throw std::invalid_argument("short_interval_pair_count: n must be even");
    if (n < query.x || n > query.x + query.M)
        throw std::invalid_argument("short_interval_pair_count: n outside [x, x+M]");
    if (!table.covers(2, query.x + query.M))
        throw std::invalid_argument("short_interval_pair_count: table too small");

    const std::uint64_t p2_lo = query.x - query.y - query.M;  // y <= x - M
    const std::uint64_t p2_hi = query.x - query.y + query.M;
    std::uint64_t p1_lo = std::max<std::uint64_t>(query.y, 2);
    std::uint64_t p1_hi = std::min(query.y + query.M, n - 2);
    if (p1_lo > p1_hi) return 0;

    std::uint64_t count = 0;
    table.for_each_prime(p1_lo, p1_hi, [&](std::uint64_t p1) {
        std::uint64_t p2 = n - p1;
        if (p2 >= std::max<std::uint64_t>(p2_lo, 2) && p2 <= p2_hi && table.is_prime(p2)) count++;
    });
    return count;
}

std::uint64_t z_count(std::uint64_t n, std::uint64_t I_lo, std::uint64_t I_hi,
                      const PrimeTable& table) {
    if (I_lo > I_hi) throw std::invalid_argument("z_count: empty interval");
    if (n <= I_lo + 1) throw std::invalid_argument("z_count: no room for p2 >= 2");
    if (!table.covers(2, n)) throw std::invalid_argument("z_count: table too small");
    std::uint64_t hi = std::min(I_hi, n - 2);
    std::uint64_t count = 0;
    table.for_each_prime(std::max<std::uint64_t>(I_lo, 2), hi,
                         [&](std::uint64_t p1) { count += table.is_prime(n - p1); });
    return count;
}

ExceptionalReport exceptional_set(const IntervalPairQuery& query, const PrimeTable& table,
                                  const SingularSeries& series, const SmallestFactorTable& fact,
                                  unsigned threads) {
    query.validate();
    if (!table.covers(2, query.x + query.M))
        throw std::invalid_argument("exceptional_set: table too small");
    if (query.x + query.M > fact.limit())
        throw std::invalid_argument("exceptional_set: factor table too small");

    const std::uint64_t first = query.x + (query.x % 2);
    std::vector<std::uint64_t> evens;
    for (std::uint64_t n = first; n <= query.x + query.M; n += 2) evens.push_back(n);

    ExceptionalReport report;
    report.window = query;
    report.tested = evens.size();
    report.predicted_cap =
        static_cast<double>(query.M) / std::pow(std::log(static_cast<double>(query.x)), 2);

    std::vector<char> is_exceptional(evens.size(), 0);
    std::vector<double> ratio(evens.size(), std::numeric_limits<double>::infinity());

    auto scan = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; k++) {
            const std::uint64_t n = evens[k];
            const std::uint64_t s = short_interval_pair_count(n, query, table);
            const double cn = series.eval(n, fact);
            const double logn = std::log(static_cast<double>(n));
            const double threshold = query.cstar * cn * static_cast<double>(query.M) /
                                     (3.0 * logn * logn);
            if (static_cast<double>(s) < threshold) {
                is_exceptional[k] = 1;
            } else if (cn > 0) {
                ratio[k] = static_cast<double>(s) * logn * logn /
                           (cn * static_cast<double>(query.M));
            }
        }
    };

    unsigned T = threads != 0 ? threads : thread_budget();
    T = static_cast<unsigned>(std::min<std::size_t>(T, std::max<std::size_t>(evens.size(), 1)));
    if (T <= 1 || evens.size() < 256) {
        scan(0, evens.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (evens.size() + T - 1) / T;
        for (unsigned t = 0; t < T; t++) {
            std::size_t lo = t * chunk, hi = std::min(evens.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] { scan(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t k = 0; k < evens.size(); k++) {
        if (is_exceptional[k]) {
            report.exceptional_count++;
            if (report.exceptional.size() < kExceptionalSampleCap)
                report.exceptional.push_back(evens[k]);
        } else if (ratio[k] < std::numeric_limits<double>::infinity()) {
            if (!report.has_infimum || ratio[k] < report.infimum_ratio) {
                report.infimum_ratio = ratio[k];
                report.has_infimum = true;
            }
        }
    }
    return report;
}

}  // namespace primecomp
