#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "primecomp/sieve.hpp"

namespace primecomp {

// ---------------------------------------------------------------------------
// Counter-based per-element randomness. Every inclusion decision is a pure
// function of (seed, element), so sampling is reproducible and independent
// of evaluation order and thread count, and raising the inclusion
// probability with the same seed can only grow the sampled set (monotone
// coupling: the same uniform is compared against a larger threshold).
// ---------------------------------------------------------------------------

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t element);

// Uniform value in [0, 1) drawn from the (seed, element) counter stream.
double uniform_draw(std::uint64_t seed, std::uint64_t element);

// True iff uniform_draw(seed, element) < rho. rho must lie in [0, 1].
bool bernoulli_draw(std::uint64_t seed, std::uint64_t element, double rho);

// ---------------------------------------------------------------------------
// Sampler configurations and sampled sets
// ---------------------------------------------------------------------------

// Order-2 complement sampler: each prime x <= range_max enters with
// probability min(1, c log x / x).
struct SamplerConfigA {
    double c = 1.0;
    std::uint64_t range_max = 3;
    std::uint64_t seed = 0;
};

// Inclusion probability for element x under config A, clamped to [0, 1].
double rho_a(double c, std::uint64_t x);

// Block sampler: primes in [N^c0, 2 N^c0], each kept with probability
// rho = K log N / (2 L) where L is the number of primes in the interval.
struct SamplerConfigB {
    std::uint64_t N = 4;
    double K = 1.0;
    double c0 = 0.5;
    std::uint64_t seed = 0;
};

// Nesting data for the assembled construction: scales N_i (by default
// chained via N_{i+1} = floor(N_i^{1/c1}) + 1), per-block epsilons and K
// values, and a record of the target growth function w(x).
struct ScaleSchedule {
    double c0 = 0.5;
    double c1 = 0.7;
    double cstar = 0.5;
    std::vector<double> eps_schedule;    // default eps_i = 1/(i+2)
    std::vector<std::uint64_t> N_sequence;
    std::vector<double> K_values;        // empty = derive via k_of_eps
    std::string w_description = "log log x";
    bool desk_override = false;          // skip the chain-consistency check

    void validate() const;
    double eps_for(std::size_t i) const;
    double k_for(std::size_t i) const;
};

// floor(N^{1/c1}) + 1
std::uint64_t next_scale(std::uint64_t N, double c1);

enum class ComplementKind { A, BBlock, BAssembled };

const char* kind_name(ComplementKind k);
ComplementKind kind_from_name(const std::string& name);

// A sampled sparse subset of primes together with its generation
// parameters. Elements are sorted and duplicate-free; immutable once built.
struct SparseComplement {
    ComplementKind kind = ComplementKind::A;
    std::uint64_t seed = 0;
    std::variant<SamplerConfigA, SamplerConfigB, ScaleSchedule> config;
    std::vector<std::uint64_t> elements;

    std::uint64_t counting_function(std::uint64_t x) const;
};

SparseComplement sample_A(const SamplerConfigA& config, const PrimeTable& table);
SparseComplement sample_B_block(const SamplerConfigB& config, const PrimeTable& table);

// Union over scales of sample_B_block at N_i, block i truncated to the
// window [N_{i-1}, N_{i+1}]. The lower end is clamped to the block's own
// interval start so a desk-scale override schedule cannot silently erase a
// block; with the literal construction the window never cuts into the
// block. Per-block seeds derive from (seed, i).
SparseComplement assemble_B(const ScaleSchedule& schedule, std::uint64_t seed,
                            const PrimeTable& table);

// K(eps) = max{ (10/(c0 cstar)) log(16/eps^2), 20 }
double k_of_eps(double eps, double c0, double cstar);

// ---------------------------------------------------------------------------
// Janson lower-tail certificate
// ---------------------------------------------------------------------------

struct JansonCertificate {
    double expected = 0;
    double delta = 0;
    double eps = 0;
    double bound = 1;  // exp(-(eps E)^2 / (2 (E + Delta)))
};

JansonCertificate janson_bound(double expected, double delta, double eps);

// ---------------------------------------------------------------------------
// Exact first/second-moment evaluation for the order-2 construction
// ---------------------------------------------------------------------------

struct EYDelta {
    double expected = 0;   // E(Y*) over X = {(i,j): i,j >= M, i+j >= n^{1-eps}, i,j,n-i-j prime}
    double delta = 0;      // sum over ordered overlapping pairs alpha != beta of E(I_a I_b)
    std::uint64_t x_size = 0;
};

// Exhaustive enumeration with M = n^{1-2 eps}. Ordered pairs, diagonal kept
// (t^2 = t). n must be odd and small enough to enumerate.
EYDelta exact_ey_delta(std::uint64_t n, double c, double eps, const PrimeTable& table);

inline constexpr std::uint64_t kEyDeltaMaxN = 2'000'000;

}  // namespace primecomp
