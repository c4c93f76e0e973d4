#pragma once

#include <cstdint>
#include <vector>

#include "primecomp/randcomplement.hpp"
#include "primecomp/sieve.hpp"

namespace primecomp {

// One sampled-A coverage run: does every odd n in [n0_cap, range_max] have a
// representation a1 + a2 + p?
struct SeedOutcome {
    std::uint64_t seed = 0;
    bool success = false;
    std::uint64_t largest_failure = 0;  // largest uncovered odd above n0_cap, 0 if none
    std::uint64_t set_size = 0;         // |A|, i.e. A(range_max)
};

std::vector<SeedOutcome> coverage_outcomes(double c, std::uint64_t range_max,
                                           const std::vector<std::uint64_t>& seeds,
                                           const PrimeTable& table,
                                           std::uint64_t n0_cap = 10000);

double success_fraction(const std::vector<SeedOutcome>& outcomes);

struct TuneResult {
    bool attained = false;
    double c = 0;                 // minimal c on the 0.25 grid reaching the target
    double success = 0;           // success fraction at that c
    std::vector<std::pair<double, double>> trace;  // evaluated (c, fraction), in order
    std::vector<SeedOutcome> outcomes;             // per-seed detail at the found c
};

inline constexpr double kTuneResolution = 0.25;

// Doubling-then-bisection search for the smallest c (resolution 0.25)
// whose success fraction reaches target. Monotone coupling of sample_A in c
// makes per-seed success monotone, so bisection is sound.
TuneResult tune_c(std::uint64_t range_max, const std::vector<std::uint64_t>& seeds, double target,
                  const PrimeTable& table, double c_floor = 0.25, double c_ceiling = 512.0,
                  std::uint64_t n0_cap = 10000);

}  // namespace primecomp
