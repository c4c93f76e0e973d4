#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primecomp/randcomplement.hpp"
#include "primecomp/sieve.hpp"

namespace primecomp {

enum class Parity { Odd, Even };

struct CoverageOptions {
    Parity parity = Parity::Odd;
    bool per_n_counts = true;      // false = existence-only fast path
    std::size_t failures_cap = 10000;
    unsigned threads = 0;
};

// Per-range representation statistics for n = a1 + a2 + p, a1, a2 ordered
// from A, p prime. counts[k] is the representation count of the k-th n of
// the scanned parity.
struct CoverageReport {
    std::uint64_t n_lo = 0, n_hi = 0;
    Parity parity = Parity::Odd;
    std::uint64_t covered = 0, tested = 0;
    std::vector<std::uint64_t> failures;  // capped sample
    std::uint64_t failures_total = 0;
    std::uint64_t min_reps = 0;           // min representation count over covered n
    std::uint64_t threshold_n0 = 0;       // smallest n with no failure at or above it
    std::vector<std::uint32_t> counts;    // empty in existence-only mode
};

// Counts |{(a1, a2, p) : a1, a2 in A ordered, p prime, a1 + a2 + p = n}|
// for every n of the stated parity in [n_lo, n_hi]. The scan partitions the
// pair-sum list across threads with per-thread tallies merged by addition,
// so reports are independent of thread count.
CoverageReport coverage_scan(const SparseComplement& A, std::uint64_t n_lo, std::uint64_t n_hi,
                             const PrimeTable& table, const CoverageOptions& opts = {});

// Largest odd n in [n_lo, n_hi] with no representation, or 0 when all are
// covered.
// Early-exit existence scan used inside parameter searches.
std::uint64_t largest_uncovered_odd(const SparseComplement& A, std::uint64_t n_lo,
                                    std::uint64_t n_hi, const PrimeTable& table);

// |{n <= x : n = b + p, b in B, p prime}| / x, computed exactly.
double sumset_density(const SparseComplement& B, std::uint64_t x, const PrimeTable& table);

// Deficit grid for S = P + B on even integers: x_j = N / eta^j with
// eta = 1 + eps/2, kept while x_j >= N^c1. densities[j] is the covered
// fraction of even n <= x_j; deficits[j] the count of uncovered evens.
struct DensityGrid {
    std::uint64_t N = 0;
    double eta = 1;
    double eps = 0;
    double c1 = 0;
    std::vector<std::uint64_t> x_values;
    std::vector<double> densities;
    std::vector<std::uint64_t> deficits;
    std::vector<bool> flagged;  // deficit >= (eps/2) * evens(x_j)
};

DensityGrid density_grid(const SparseComplement& B, std::uint64_t N, double eps, double c1,
                         const PrimeTable& table);

// Counting-function samples with the log-normalised ratio. For assembled
// sets, cap carries 2 K / (c0 c1 (1 - c1)) from the stored schedule
// (K = max per-block value); NaN otherwise.
struct ProfilePoint {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    double ratio = 0;  // count / log x
    double cap = 0;
};

std::vector<ProfilePoint> counting_function_profile(const SparseComplement& S,
                                                    const std::vector<std::uint64_t>& grid);

// Truncation-loss annotation for assembled schedules: for each block i >= 1
// at x = N_i, the chain loses at most N_{i-1} * 2x / log x representations,
// to be compared against eps_i * x.
struct TruncationLossRow {
    std::size_t block = 0;
    std::uint64_t x = 0;
    double loss_bound = 0;
    double eps_budget = 0;
};

std::vector<TruncationLossRow> truncation_loss_annotations(const ScaleSchedule& schedule);

}  // namespace primecomp
