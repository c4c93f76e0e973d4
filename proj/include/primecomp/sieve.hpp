#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "primecomp/common.hpp"

namespace primecomp {

struct SieveOptions {
    std::uint64_t segment_len = std::uint64_t{1} << 22;  // numbers per segment
    unsigned threads = 0;                                // 0 = global budget
};

// Immutable prime-membership table over an inclusive integer interval.
// One bit per integer; construction is segment-parallel but deterministic,
// so tables are bit-identical regardless of thread count. Safe for
// unrestricted concurrent reads once built.
class PrimeTable {
public:
    PrimeTable(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> bits)
        : lo_(lo), hi_(hi), bits_(std::move(bits)) {}

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    bool covers(std::uint64_t a, std::uint64_t b) const { return lo_ <= a && b <= hi_; }

    // n must lie in [lo, hi].
    bool is_prime(std::uint64_t n) const {
        if (n < lo_ || n > hi_) throw std::out_of_range("PrimeTable::is_prime: n outside table");
        std::uint64_t k = n - lo_;
        return (bits_[k >> 6] >> (k & 63)) & 1u;
    }

    // |{p prime : lo <= p <= x}|. x must not exceed hi; x < lo yields 0.
    std::uint64_t count_primes(std::uint64_t x) const;

    // Count of primes p <= x, p >= lo, p == r (mod d).
    std::uint64_t count_in_ap(std::uint64_t x, std::uint64_t d, std::uint64_t r) const;

    // Primes in [a, b] intersected with the table range, ascending.
    std::vector<std::uint64_t> primes_in(std::uint64_t a, std::uint64_t b) const;

    // Calls fn(p) for each prime p in [a, b] ascending. [a, b] must be covered.
    template <typename Fn>
    void for_each_prime(std::uint64_t a, std::uint64_t b, Fn&& fn) const {
        if (b < a) return;
        if (!covers(a, b)) throw std::out_of_range("PrimeTable::for_each_prime: range not covered");
        std::uint64_t k = a - lo_, kend = b - lo_;
        std::uint64_t w = k >> 6;
        std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (k & 63));
        const std::uint64_t wend = kend >> 6;
        while (true) {
            if (w == wend) word &= ~std::uint64_t{0} >> (63 - (kend & 63));
            while (word) {
                std::uint64_t bit = word & (~word + 1);
                fn(lo_ + (w << 6) + static_cast<std::uint64_t>(__builtin_ctzll(word)));
                word ^= bit;
            }
            if (w == wend) break;
            word = bits_[++w];
        }
    }

    const std::vector<std::uint64_t>& words() const { return bits_; }

private:
    std::uint64_t lo_, hi_;
    std::vector<std::uint64_t> bits_;  // bit k <=> (lo + k) is prime
};

// Primes up to limit via the classic in-memory sieve. Intended for base
// primes (limit up to ~1e8); larger ranges go through sieve_range.
std::vector<std::uint64_t> simple_primes(std::uint64_t limit);

// Segmented sieve of [lo, hi]. Throws std::invalid_argument for lo > hi and
// ResourceLimitError when the bitmap would exceed the memory ceiling.
PrimeTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts = {});

// Streams [lo, hi] as consecutive segments, each delivered as a PrimeTable.
// Segments are sieved in parallel but consume() sees them strictly in
// ascending order, so order-dependent accumulation stays deterministic.
void stream_prime_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_len,
                           unsigned threads,
                           const std::function<void(const PrimeTable&)>& consume);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace primecomp
