#include "primecomp/tune.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "primecomp/verify.hpp"

namespace primecomp {

std::vector<SeedOutcome> coverage_outcomes(double c, std::uint64_t range_max,
                                           const std::vector<std::uint64_t>& seeds,
                                           const PrimeTable& table, std::uint64_t n0_cap) {
    if (seeds.empty()) throw std::invalid_argument("coverage_outcomes: seeds list empty");
    if (n0_cap + 1 > range_max) throw std::invalid_argument("coverage_outcomes: n0_cap >= range_max");

    std::vector<SeedOutcome> out(seeds.size());
    auto run = [&](std::size_t k) {
        SamplerConfigA cfg;
        cfg.c = c;
        cfg.range_max = range_max;
        cfg.seed = seeds[k];
        SparseComplement A = sample_A(cfg, table);
        SeedOutcome& o = out[k];
        o.seed = seeds[k];
        o.set_size = A.elements.size();
        o.largest_failure = largest_uncovered_odd(A, n0_cap + 1, range_max, table);
        o.success = o.largest_failure == 0;
    };

    unsigned T = std::min<std::size_t>(thread_budget(), seeds.size());
    if (T <= 1) {
        for (std::size_t k = 0; k < seeds.size(); k++) run(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < T; t++)
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < seeds.size(); k = next.fetch_add(1))
                    run(k);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

double success_fraction(const std::vector<SeedOutcome>& outcomes) {
    if (outcomes.empty()) return 0;
    std::size_t ok = 0;
    for (const auto& o : outcomes) ok += o.success;
    return static_cast<double>(ok) / static_cast<double>(outcomes.size());
}

TuneResult tune_c(std::uint64_t range_max, const std::vector<std::uint64_t>& seeds, double target,
                  const PrimeTable& table, double c_floor, double c_ceiling,
                  std::uint64_t n0_cap) {
    if (c_floor <= 0 || c_ceiling < c_floor) throw std::invalid_argument("tune_c: bad c range");

    TuneResult result;
    auto evaluate = [&](double c) {
        auto outcomes = coverage_outcomes(c, range_max, seeds, table, n0_cap);
        double frac = success_fraction(outcomes);
        result.trace.emplace_back(c, frac);
        return std::make_pair(frac, std::move(outcomes));
    };

    // Doubling phase.
    double lo = 0, hi = 0;
    std::vector<SeedOutcome> hi_outcomes;
    for (double c = c_floor;; c *= 2) {
        if (c > c_ceiling) {
            result.attained = false;
            return result;  // target unattainable below the ceiling; reported, not thrown
        }
        auto [frac, outcomes] = evaluate(c);
        if (frac >= target) {
            hi = c;
            hi_outcomes = std::move(outcomes);
            break;
        }
        lo = c;
    }

    // Bisection down to the resolution grid.
    while (hi - lo > kTuneResolution + 1e-12) {
        double steps = std::floor((hi - lo) / (2 * kTuneResolution));
        double mid = lo + std::max(1.0, steps) * kTuneResolution;
        if (mid >= hi) break;
        auto [frac, outcomes] = evaluate(mid);
        if (frac >= target) {
            hi = mid;
            hi_outcomes = std::move(outcomes);
        } else {
            lo = mid;
        }
    }

    result.attained = true;
    result.c = hi;
    result.success = success_fraction(hi_outcomes);
    result.outcomes = std::move(hi_outcomes);
    return result;
}

}  // namespace primecomp
