#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primecomp/common.hpp"

namespace primecomp {

// (prime, exponent) pairs, ascending by prime.
using Factorization = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

// Smallest-prime-factor table; factorization of n <= limit in O(log n).
class SmallestFactorTable {
public:
    explicit SmallestFactorTable(std::uint64_t limit);
    std::uint64_t limit() const { return spf_.size() - 1; }
    Factorization factorize(std::uint64_t n) const;

private:
    std::vector<std::uint32_t> spf_;
};

// Independent O(sqrt n) factorization, used by loaders and test oracles.
Factorization trial_factorize(std::uint64_t n);
bool trial_is_prime(std::uint64_t n);

std::uint32_t omega(std::uint64_t d, const SmallestFactorTable& fact);
std::uint64_t tau(std::uint64_t d, const SmallestFactorTable& fact);
std::uint64_t euler_phi(std::uint64_t d, const SmallestFactorTable& fact);
bool is_squarefree(std::uint64_t d, const SmallestFactorTable& fact);

// Exact partial sum  sum_{k<=x} 1/phi(k), fixed summation order.
double phi_reciprocal_sum(std::uint64_t x);

// Exact  sum over primes i < n of tau(n - i), n >= 3.
std::uint64_t divisor_sum_over_shifted_primes(std::uint64_t n);

// Prefix products  prod_{3 <= p <= c} (1 - 1/(p-1)^2)  at each checkpoint c
// (checkpoints ascending). One streamed sieve pass; accumulation order is
// fixed, so results are thread-count independent.
std::vector<double> universal_product_checkpoints(const std::vector<std::uint64_t>& checkpoints,
                                                  unsigned threads = 0);

struct SingularSeriesParams {
    std::uint64_t truncation_bound = 0;  // 0 = derive from tolerance
    double tolerance = 1e-9;             // absolute error budget per value
};

// The Goldbach singular series
//   C(n) = prod_{p not| n} (1 - 1/(p-1)^2) * prod_{p|n} (1 + 1/(p-1)),
// zero for odd n. The product over all p >= 3 is truncated at
// truncation_bound; per-n prime factors contribute exact correction
// factors, so truncation error is one-sided (truncated value >= true
// value) and bounded by value * tail_bound(truncation_bound).
class SingularSeries {
public:
    // corr_hint bounds prod_{odd p | n} (p-1)/(p-2) over the n to be
    // evaluated; only consulted when truncation_bound is 0.
    explicit SingularSeries(SingularSeriesParams params, double corr_hint = 8.0,
                            unsigned threads = 0);

    // Reuse a universal product already computed for
    // params.truncation_bound (which must be set).
    static SingularSeries with_universal(SingularSeriesParams params,
                                         double precomputed_universal);

    // n >= 2. Returns exactly 0 for odd n. Throws std::invalid_argument if
    // the tolerance is unattainable at this truncation bound.
    double eval(std::uint64_t n, const SmallestFactorTable& fact) const;

    double universal_product() const { return universal_; }
    std::uint64_t truncation_bound() const { return params_.truncation_bound; }
    double tolerance() const { return params_.tolerance; }

    // Upper bound on sum_{p > P} 1/(p-1)^2 using only that primes > 3 are
    // coprime to 6.
    static double tail_bound(std::uint64_t P);
    static std::uint64_t choose_truncation(double tolerance, double corr_hint);

private:
    SingularSeriesParams params_;
    double universal_;
};

}  // namespace primecomp
