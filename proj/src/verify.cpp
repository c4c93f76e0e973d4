#include "primecomp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace primecomp {

namespace {

// Ordered pair sums of A as (sum, multiplicity), ascending, sums capped.
std::vector<std::pair<std::uint64_t, std::uint32_t>> pair_sums(
    const std::vector<std::uint64_t>& a, std::uint64_t max_sum) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    if (a.empty()) return out;
    std::uint64_t n_pairs = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] + a[0] > max_sum) break;
        n_pairs += std::upper_bound(a.begin(), a.end(), max_sum - a[i]) - a.begin();
    }
    if (n_pairs * sizeof(std::uint64_t) > memory_ceiling())
        throw ResourceLimitError("pair_sums: ordered pair list exceeds memory ceiling");
    std::vector<std::uint64_t> sums;
    sums.reserve(n_pairs);
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] + a[0] > max_sum) break;
        for (std::size_t j = 0; j < a.size(); j++) {
            std::uint64_t s = a[i] + a[j];
            if (s > max_sum) break;
            sums.push_back(s);
        }
    }
    std::sort(sums.begin(), sums.end());
    for (std::size_t k = 0; k < sums.size();) {
        std::size_t e = k;
        while (e < sums.size() && sums[e] == sums[k]) e++;
        out.emplace_back(sums[k], static_cast<std::uint32_t>(e - k));
        k = e;
    }
    return out;
}

}  // namespace

CoverageReport coverage_scan(const SparseComplement& A, std::uint64_t n_lo, std::uint64_t n_hi,
                           const PrimeTable& table, const CoverageOptions& opts) {
    if (n_lo > n_hi) throw std::invalid_argument("coverage_scan: n_lo > n_hi");
    if (!table.covers(2, n_hi)) throw std::invalid_argument("coverage_scan: table too small");

    CoverageReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.parity = opts.parity;

    const std::uint64_t want = opts.parity == Parity::Odd ? 1 : 0;
    std::uint64_t first = n_lo + ((want + 2 - n_lo % 2) % 2);
    if (first > n_hi) return report;
    const std::uint64_t slots = (n_hi - first) / 2 + 1;
    report.tested = slots;

    std::vector<std::uint32_t> counts(slots, 0);
    const auto sums = pair_sums(A.elements, n_hi >= 2 ? n_hi - 2 : 0);

    unsigned T = opts.threads != 0 ? opts.threads : thread_budget();
    T = static_cast<unsigned>(std::min<std::size_t>(T, std::max<std::size_t>(sums.size(), 1)));

    auto scan = [&](std::size_t s_lo, std::size_t s_hi, std::vector<std::uint32_t>& tally) {
        for (std::size_t k = s_lo; k < s_hi; k++) {
            const auto [s, mult] = sums[k];
            // n = s + p must land on the right parity
            std::uint64_t p_lo = first > s + 2 ? first - s : 2;
            table.for_each_prime(p_lo, n_hi - s, [&](std::uint64_t p) {
                std::uint64_t n = s + p;
                if (n < first || (n - first) % 2 != 0) return;
                tally[(n - first) / 2] += mult;
            });
        }
    };

    if (T <= 1 || sums.size() < 64) {
        scan(0, sums.size(), counts);
    } else {
        std::vector<std::vector<std::uint32_t>> tallies(T, std::vector<std::uint32_t>(slots, 0));
        std::vector<std::thread> pool;
        const std::size_t chunk = (sums.size() + T - 1) / T;
        for (unsigned t = 0; t < T; t++) {
            std::size_t lo = t * chunk, hi = std::min(sums.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, t, lo, hi] { scan(lo, hi, tallies[t]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& tally : tallies)
            for (std::size_t k = 0; k < slots; k++) counts[k] += tally[k];
    }

    std::uint64_t max_failure = 0;
    std::uint64_t min_reps = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t k = 0; k < slots; k++) {
        if (counts[k] == 0) {
            report.failures_total++;
            max_failure = first + 2 * k;
            if (report.failures.size() < opts.failures_cap)
                report.failures.push_back(first + 2 * k);
        } else {
            report.covered++;
            min_reps = std::min<std::uint64_t>(min_reps, counts[k]);
        }
    }
    report.min_reps = report.covered ? min_reps : 0;
    report.threshold_n0 = report.failures_total ? max_failure + 1 : n_lo;
    if (opts.per_n_counts) report.counts = std::move(counts);
    return report;
}

std::uint64_t largest_uncovered_odd(const SparseComplement& A, std::uint64_t n_lo,
                                    std::uint64_t n_hi, const PrimeTable& table) {
    if (n_lo > n_hi) throw std::invalid_argument("largest_uncovered_odd: n_lo > n_hi");
    if (n_lo < 9) throw std::invalid_argument("largest_uncovered_odd: n_lo must be >= 9");
    if (!table.covers(2, n_hi)) throw std::invalid_argument("largest_uncovered_odd: table too small");

    const std::uint64_t n_start = n_hi - (n_hi % 2 == 0 ? 1 : 0);
    if (n_start < n_lo) return 0;  // no odd n in range

    std::vector<std::uint64_t> sums;  // distinct ordered pair sums
    for (const auto& [s, mult] : pair_sums(A.elements, n_hi >= 2 ? n_hi - 2 : 0)) sums.push_back(s);
    if (sums.empty()) return n_start;

    for (std::uint64_t n = n_start; n >= n_lo; n -= 2) {
        bool covered = false;
        for (std::uint64_t s : sums) {
            if (s + 2 > n) break;
            if (table.is_prime(n - s)) {
                covered = true;
                break;
            }
        }
        if (!covered) return n;
    }
    return 0;
}

double sumset_density(const SparseComplement& B, std::uint64_t x, const PrimeTable& table) {
    if (x == 0) throw std::invalid_argument("sumset_density: x = 0");
    if (!table.covers(2, x)) throw std::invalid_argument("sumset_density: table too small");
    if (B.elements.empty()) return 0.0;
    std::vector<bool> hit(x + 1, false);
    for (std::uint64_t b : B.elements) {
        if (b + 2 > x) break;
        table.for_each_prime(2, x - b, [&](std::uint64_t p) { hit[b + p] = true; });
    }
    std::uint64_t covered = 0;
    for (std::uint64_t n = 1; n <= x; n++) covered += hit[n];
    return static_cast<double>(covered) / static_cast<double>(x);
}

DensityGrid density_grid(const SparseComplement& B, std::uint64_t N, double eps, double c1,
                         const PrimeTable& table) {
    if (!(eps > 0 && eps < 2)) throw std::invalid_argument("density_grid: eps must lie in (0, 2)");
    if (!(c1 > 0 && c1 < 1)) throw std::invalid_argument("density_grid: c1 must lie in (0, 1)");
    if (!table.covers(2, N)) throw std::invalid_argument("density_grid: table too small");

    DensityGrid grid;
    grid.N = N;
    grid.eps = eps;
    grid.c1 = c1;
    grid.eta = 1.0 + eps / 2.0;

    const double logN = std::log(static_cast<double>(N));
    const long j_max = static_cast<long>(
        std::floor((1.0 - c1) * logN / std::log(grid.eta) + 1.0 + 1e-9));
    const double x_floor = std::pow(static_cast<double>(N), c1);
    for (long j = 0; j <= j_max; j++) {
        double xr = static_cast<double>(N) / std::pow(grid.eta, static_cast<double>(j));
        if (xr < x_floor - 1e-9) break;
        std::uint64_t xi = static_cast<std::uint64_t>(int_threshold_floor(xr));
        if (!grid.x_values.empty() && xi >= grid.x_values.back()) continue;
        grid.x_values.push_back(xi);
    }

    // covered evens <= N, one marking pass
    std::vector<bool> hit(N + 1, false);
    for (std::uint64_t b : B.elements) {
        if (b + 2 > N) break;
        table.for_each_prime(2, N - b, [&](std::uint64_t p) {
            if ((b + p) % 2 == 0) hit[b + p] = true;
        });
    }
    // prefix counts at the (descending) grid points via one ascending pass
    std::vector<std::uint64_t> covered_at(grid.x_values.size(), 0);
    {
        std::vector<std::size_t> order(grid.x_values.size());
        for (std::size_t k = 0; k < order.size(); k++) order[k] = order.size() - 1 - k;
        std::size_t oi = 0;
        std::uint64_t covered = 0;
        for (std::uint64_t n = 2; n <= N && oi < order.size(); n += 2) {
            while (oi < order.size() && grid.x_values[order[oi]] < n)
                covered_at[order[oi++]] = covered;
            covered += hit[n];
        }
        while (oi < order.size()) covered_at[order[oi++]] = covered;
    }

    for (std::size_t k = 0; k < grid.x_values.size(); k++) {
        const std::uint64_t evens = grid.x_values[k] / 2;
        const std::uint64_t deficit = evens - covered_at[k];
        grid.densities.push_back(evens ? static_cast<double>(covered_at[k]) /
                                             static_cast<double>(evens)
                                       : 1.0);
        grid.deficits.push_back(deficit);
        grid.flagged.push_back(static_cast<double>(deficit) >=
                               (eps / 2.0) * static_cast<double>(evens));
    }
    return grid;
}

std::vector<ProfilePoint> counting_function_profile(const SparseComplement& S,
                                                    const std::vector<std::uint64_t>& grid) {
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("counting_function_profile: grid not ascending");
    double cap = std::numeric_limits<double>::quiet_NaN();
    if (S.kind == ComplementKind::BAssembled) {
        const auto& sched = std::get<ScaleSchedule>(S.config);
        double kmax = 0;
        for (std::size_t i = 0; i < sched.N_sequence.size(); i++)
            kmax = std::max(kmax, sched.k_for(i));
        cap = 2.0 * kmax / (sched.c0 * sched.c1 * (1.0 - sched.c1));
    }
    std::vector<ProfilePoint> out;
    for (std::uint64_t x : grid) {
        ProfilePoint pt;
        pt.x = x;
        pt.count = S.counting_function(x);
        pt.ratio = x > 1 ? static_cast<double>(pt.count) / std::log(static_cast<double>(x)) : 0.0;
        pt.cap = cap;
        out.push_back(pt);
    }
    return out;
}

std::vector<TruncationLossRow> truncation_loss_annotations(const ScaleSchedule& schedule) {
    std::vector<TruncationLossRow> rows;
    const auto& N = schedule.N_sequence;
    for (std::size_t i = 1; i < N.size(); i++) {
        TruncationLossRow row;
        row.block = i;
        row.x = N[i];
        double x = static_cast<double>(N[i]);
        row.loss_bound = static_cast<double>(N[i - 1]) * 2.0 * x / std::log(x);
        row.eps_budget = schedule.eps_for(i) * x;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace primecomp
