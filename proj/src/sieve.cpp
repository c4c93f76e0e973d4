#include "primecomp/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

namespace primecomp {

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

std::vector<std::uint64_t> simple_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<char> mark(limit + 1, 1);
    mark[0] = 0;
    mark[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; i++)
        if (mark[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (std::uint64_t i = 2; i <= limit; i++)
        if (mark[i]) primes.push_back(i);
    return primes;
}

namespace {

// Sieve the word-aligned bit range [bit_lo, bit_hi) of a bitmap whose bit k
// represents the integer base + k. Words touched are disjoint across
// aligned segments, so segments can run concurrently.
void sieve_segment(std::uint64_t base, std::uint64_t bit_lo, std::uint64_t bit_hi,
                   const std::vector<std::uint64_t>& base_primes,
                   std::vector<std::uint64_t>& bits) {
    const std::uint64_t seg_lo = base + bit_lo;
    const std::uint64_t seg_hi = base + bit_hi - 1;  // inclusive

    for (std::uint64_t w = bit_lo >> 6; w <= (bit_hi - 1) >> 6; w++) bits[w] = ~std::uint64_t{0};

    auto clear_bit = [&](std::uint64_t n) {
        std::uint64_t k = n - base;
        bits[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
    };

    for (std::uint64_t p : base_primes) {
        if (p * p > seg_hi) break;
        std::uint64_t start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
        for (std::uint64_t n = start; n <= seg_hi; n += p) clear_bit(n);
    }
    if (seg_lo <= 1) {
        if (seg_lo == 0) clear_bit(0);
        if (seg_hi >= 1) clear_bit(1);
    }
}

// Trim bits beyond the last valid index.
void trim_tail(std::uint64_t n_bits, std::vector<std::uint64_t>& bits) {
    if (n_bits & 63) bits.back() &= ~std::uint64_t{0} >> (64 - (n_bits & 63));
}

std::uint64_t aligned_segment_len(std::uint64_t requested) {
    std::uint64_t s = std::max<std::uint64_t>(requested, 1 << 16);
    return s & ~std::uint64_t{63};
}

unsigned effective_threads(unsigned requested) {
    return requested != 0 ? requested : thread_budget();
}

}  // namespace

PrimeTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    if (lo > hi) throw std::invalid_argument("sieve_range: lo > hi");
    const std::uint64_t n_bits = hi - lo + 1;
    const std::uint64_t n_words = (n_bits + 63) / 64;
    const std::uint64_t bytes = n_words * 8 + isqrt(hi) + 1;
    if (bytes > memory_ceiling())
        throw ResourceLimitError("sieve_range: range exceeds memory ceiling (" +
                                 std::to_string(bytes) + " bytes needed)");

    const auto base_primes = simple_primes(isqrt(hi));
    std::vector<std::uint64_t> bits(n_words, 0);

    const std::uint64_t seg = aligned_segment_len(opts.segment_len);
    const std::uint64_t n_segments = (n_bits + seg - 1) / seg;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(opts.threads), n_segments));

    auto run = [&](std::atomic<std::uint64_t>& next) {
        for (std::uint64_t s = next.fetch_add(1); s < n_segments; s = next.fetch_add(1)) {
            std::uint64_t bit_lo = s * seg;
            std::uint64_t bit_hi = std::min(bit_lo + seg, n_bits);
            sieve_segment(lo, bit_lo, bit_hi, base_primes, bits);
        }
    };

    std::atomic<std::uint64_t> next{0};
    if (threads <= 1) {
        run(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; t++) pool.emplace_back([&] { run(next); });
        for (auto& t : pool) t.join();
    }

    trim_tail(n_bits, bits);
    return PrimeTable(lo, hi, std::move(bits));
}

void stream_prime_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_len,
                           unsigned threads,
                           const std::function<void(const PrimeTable&)>& consume) {
    if (lo > hi) throw std::invalid_argument("stream_prime_segments: lo > hi");
    const auto base_primes = simple_primes(isqrt(hi));
    const std::uint64_t seg = aligned_segment_len(segment_len);
    const std::uint64_t n_bits = hi - lo + 1;
    const std::uint64_t n_segments = (n_bits + seg - 1) / seg;
    const unsigned T = std::max(1u, effective_threads(threads));

    auto build = [&](std::uint64_t s) {
        std::uint64_t bit_lo = s * seg;
        std::uint64_t bit_hi = std::min(bit_lo + seg, n_bits);
        std::vector<std::uint64_t> bits((bit_hi - bit_lo + 63) / 64, 0);
        sieve_segment(lo + bit_lo, 0, bit_hi - bit_lo, base_primes, bits);
        trim_tail(bit_hi - bit_lo, bits);
        return PrimeTable(lo + bit_lo, lo + bit_hi - 1, std::move(bits));
    };

    // Sieve batches of T segments in parallel, consume in order.
    std::vector<PrimeTable> batch;
    for (std::uint64_t s0 = 0; s0 < n_segments; s0 += T) {
        const std::uint64_t cnt = std::min<std::uint64_t>(T, n_segments - s0);
        batch.clear();
        batch.reserve(cnt);
        for (std::uint64_t i = 0; i < cnt; i++) batch.push_back(PrimeTable(0, 0, {0}));
        if (cnt == 1) {
            batch[0] = build(s0);
        } else {
            std::vector<std::thread> pool;
            for (std::uint64_t i = 0; i < cnt; i++)
                pool.emplace_back([&, i] { batch[i] = build(s0 + i); });
            for (auto& t : pool) t.join();
        }
        for (std::uint64_t i = 0; i < cnt; i++) consume(batch[i]);
    }
}

std::uint64_t PrimeTable::count_primes(std::uint64_t x) const {
    if (x > hi_) throw std::out_of_range("count_primes: x beyond table");
    if (x < lo_) return 0;
    std::uint64_t kend = x - lo_;
    std::uint64_t count = 0;
    const std::uint64_t wend = kend >> 6;
    for (std::uint64_t w = 0; w < wend; w++) count += std::popcount(bits_[w]);
    count += std::popcount(bits_[wend] & (~std::uint64_t{0} >> (63 - (kend & 63))));
    return count;
}

std::uint64_t PrimeTable::count_in_ap(std::uint64_t x, std::uint64_t d, std::uint64_t r) const {
    if (d == 0) throw std::invalid_argument("count_in_ap: d = 0");
    if (r >= d) throw std::invalid_argument("count_in_ap: residue out of range");
    if (x > hi_) throw std::out_of_range("count_in_ap: x beyond table");
    if (x < lo_) return 0;
    // first n >= lo with n == r (mod d)
    std::uint64_t n = lo_ + ((r + d - lo_ % d) % d);
    std::uint64_t count = 0;
    for (; n <= x; n += d) count += is_prime(n);
    return count;
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t a, std::uint64_t b) const {
    std::vector<std::uint64_t> out;
    a = std::max(a, lo_);
    b = std::min(b, hi_);
    if (a > b) return out;
    for_each_prime(a, b, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace primecomp
