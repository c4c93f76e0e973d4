#pragma once

#include <cstdint>
#include <vector>

#include "primecomp/numtheory.hpp"
#include "primecomp/sieve.hpp"

namespace primecomp {

// Pair counts are ORDERED throughout: (3,7) and (7,3) are two
// representations of 10. This matches the unrestricted double sums the
// counts feed into; halve externally if an unordered convention is needed.

// Number of ordered prime pairs (p1, p2) with p1 + p2 = n. n even >= 4.
std::uint64_t goldbach_count(std::uint64_t n, const PrimeTable& table);

// Smallest prime p with n - p prime, or 0 if none. Existence-only fast path.
std::uint64_t first_goldbach_prime(std::uint64_t n, const PrimeTable& table);

// Short-interval window of even integers [x, x+M] with first-prime offset y
// and a candidate implied constant cstar.
struct IntervalPairQuery {
    std::uint64_t x = 0;
    std::uint64_t M = 0;
    std::uint64_t y = 0;
    double cstar = 0.0;
    double c0 = 7.0 / 12.0 + 0.01;

    // Throws on hard violations (M = 0, y > x - M, cstar < 0); warns when
    // M falls outside [x^{1-c0}, x].
    void validate() const;
};

// Ordered prime pairs p1 + p2 = n with y <= p1 <= y+M and
// x-y-M <= p2 <= x-y+M. n must be even and inside [x, x+M].
std::uint64_t short_interval_pair_count(std::uint64_t n, const IntervalPairQuery& query,
                                        const PrimeTable& table);

// z(n) = |{p1 prime in [I_lo, I_hi] : n - p1 prime}|.
std::uint64_t z_count(std::uint64_t n, std::uint64_t I_lo, std::uint64_t I_hi,
                      const PrimeTable& table);

struct ExceptionalReport {
    IntervalPairQuery window;
    std::uint64_t tested = 0;             // even n in [x, x+M]
    std::uint64_t exceptional_count = 0;  // exact, even when the sample is capped
    std::vector<std::uint64_t> exceptional;  // capped sample of failing n
    double predicted_cap = 0.0;              // M / (log x)^2
    double infimum_ratio = 0.0;  // min over non-exceptional n of s(n)(log n)^2/(C(n) M)
    bool has_infimum = false;
};

inline constexpr std::size_t kExceptionalSampleCap = 100000;

// Scans every even n in [x, x+M]; n is exceptional when its short-interval
// pair count falls below cstar * C(n) * M / (3 (log n)^2). Chunked scans run
// concurrently; the report is independent of the partitioning.
ExceptionalReport exceptional_set(const IntervalPairQuery& query, const PrimeTable& table,
                                  const SingularSeries& series, const SmallestFactorTable& fact,
                                  unsigned threads = 0);

}  // namespace primecomp
