#include "primecomp/randcomplement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace primecomp {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t element) {
    std::uint64_t z = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    z = mix64(z + element * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    return mix64(z + element);
}

double uniform_draw(std::uint64_t seed, std::uint64_t element) {
    return static_cast<double>(counter_hash(seed, element) >> 11) * 0x1.0p-53;
}

bool bernoulli_draw(std::uint64_t seed, std::uint64_t element, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("bernoulli_draw: rho outside [0, 1]");
    return uniform_draw(seed, element) < rho;
}

double rho_a(double c, std::uint64_t x) {
    if (x < 2) return 0.0;
    return std::min(1.0, c * std::log(static_cast<double>(x)) / static_cast<double>(x));
}

const char* kind_name(ComplementKind k) {
    switch (k) {
        case ComplementKind::A: return "A";
        case ComplementKind::BBlock: return "B-block";
        case ComplementKind::BAssembled: return "B-assembled";
    }
    return "?";
}

ComplementKind kind_from_name(const std::string& name) {
    if (name == "A") return ComplementKind::A;
    if (name == "B-block") return ComplementKind::BBlock;
    if (name == "B-assembled") return ComplementKind::BAssembled;
    throw std::invalid_argument("unknown complement kind: " + name);
}

std::uint64_t SparseComplement::counting_function(std::uint64_t x) const {
    return static_cast<std::uint64_t>(
        std::upper_bound(elements.begin(), elements.end(), x) - elements.begin());
}

SparseComplement sample_A(const SamplerConfigA& config, const PrimeTable& table) {
    if (config.c <= 0) throw std::invalid_argument("sample_A: c must be positive");
    if (config.range_max < 3) throw std::invalid_argument("sample_A: range_max < 3");
    if (!table.covers(2, config.range_max))
        throw std::invalid_argument("sample_A: table does not cover [2, range_max]");

    SparseComplement out;
    out.kind = ComplementKind::A;
    out.seed = config.seed;
    out.config = config;

    std::uint64_t clamped_above_100 = 0;
    table.for_each_prime(2, config.range_max, [&](std::uint64_t p) {
        double raw = config.c * std::log(static_cast<double>(p)) / static_cast<double>(p);
        if (raw > 1.0 && p > 100) clamped_above_100++;
        if (bernoulli_draw(config.seed, p, std::min(1.0, raw))) out.elements.push_back(p);
    });
    if (clamped_above_100 > 0)
        warn("sample_A: inclusion probability clamped to 1 for " +
             std::to_string(clamped_above_100) + " primes above 100");
    return out;
}

SparseComplement sample_B_block(const SamplerConfigB& config, const PrimeTable& table) {
    if (config.K <= 0) throw std::invalid_argument("sample_B_block: K must be positive");
    if (config.c0 <= 0 || config.c0 >= 1)
        throw std::invalid_argument("sample_B_block: c0 must lie in (0, 1)");
    const std::uint64_t M = static_cast<std::uint64_t>(
        int_threshold_floor(std::pow(static_cast<double>(config.N), config.c0)));
    if (M < 2) throw std::invalid_argument("sample_B_block: N^c0 < 2");
    if (!table.covers(2, 2 * M))
        throw std::invalid_argument("sample_B_block: table does not cover [2, 2 N^c0]");

    const auto interval = table.primes_in(M, 2 * M);
    if (interval.empty()) throw std::invalid_argument("sample_B_block: interval has no primes");

    double rho = config.K * std::log(static_cast<double>(config.N)) /
                 (2.0 * static_cast<double>(interval.size()));
    if (rho > 1.0) {
        warn("sample_B_block: rho = " + std::to_string(rho) + " clamped to 1 (N=" +
             std::to_string(config.N) + ", K=" + std::to_string(config.K) + ", L=" +
             std::to_string(interval.size()) + ")");
        rho = 1.0;
    }

    SparseComplement out;
    out.kind = ComplementKind::BBlock;
    out.seed = config.seed;
    out.config = config;
    for (std::uint64_t p : interval)
        if (bernoulli_draw(config.seed, p, rho)) out.elements.push_back(p);
    return out;
}

std::uint64_t next_scale(std::uint64_t N, double c1) {
    if (c1 <= 0 || c1 >= 1) throw std::invalid_argument("next_scale: c1 must lie in (0, 1)");
    return static_cast<std::uint64_t>(
               int_threshold_floor(std::pow(static_cast<double>(N), 1.0 / c1))) +
           1;
}

double ScaleSchedule::eps_for(std::size_t i) const {
    if (i < eps_schedule.size()) return eps_schedule[i];
    return 1.0 / static_cast<double>(i + 2);
}

double ScaleSchedule::k_for(std::size_t i) const {
    if (i < K_values.size()) return K_values[i];
    return k_of_eps(eps_for(i), c0, cstar);
}

void ScaleSchedule::validate() const {
    if (!(c0 > 0 && c0 < c1 && c1 < 1))
        throw std::invalid_argument("ScaleSchedule: need 0 < c0 < c1 < 1");
    if (N_sequence.empty()) throw std::invalid_argument("ScaleSchedule: empty N_sequence");
    for (std::size_t i = 1; i < N_sequence.size(); i++) {
        if (N_sequence[i] <= N_sequence[i - 1])
            throw std::invalid_argument("ScaleSchedule: N_sequence not strictly increasing");
        if (!desk_override && N_sequence[i] != next_scale(N_sequence[i - 1], c1))
            throw std::invalid_argument(
                "ScaleSchedule: N_sequence breaks the N_{i+1} = floor(N_i^{1/c1}) + 1 chain "
                "(set desk_override to accept)");
    }
}

SparseComplement assemble_B(const ScaleSchedule& schedule, std::uint64_t seed,
                            const PrimeTable& table) {
    schedule.validate();
    SparseComplement out;
    out.kind = ComplementKind::BAssembled;
    out.seed = seed;
    out.config = schedule;

    const auto& N = schedule.N_sequence;
    for (std::size_t i = 0; i < N.size(); i++) {
        SamplerConfigB cfg;
        cfg.N = N[i];
        cfg.K = schedule.k_for(i);
        cfg.c0 = schedule.c0;
        cfg.seed = counter_hash(seed, static_cast<std::uint64_t>(i));
        SparseComplement block = sample_B_block(cfg, table);

        const std::uint64_t block_lo = static_cast<std::uint64_t>(
            int_threshold_floor(std::pow(static_cast<double>(N[i]), schedule.c0)));
        std::uint64_t window_lo = (i == 0) ? 0 : std::min(N[i - 1], block_lo);
        std::uint64_t window_hi =
            (i + 1 < N.size()) ? N[i + 1] : std::numeric_limits<std::uint64_t>::max();
        if (i > 0 && N[i - 1] > block_lo)
            warn("assemble_B: window floor N_" + std::to_string(i - 1) +
                 " exceeds block " + std::to_string(i) + " interval; clamping to keep the block");

        for (std::uint64_t b : block.elements)
            if (b >= window_lo && b <= window_hi) out.elements.push_back(b);
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                       out.elements.end());
    return out;
}

double k_of_eps(double eps, double c0, double cstar) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("k_of_eps: eps must lie in (0, 1)");
    if (c0 <= 0 || cstar <= 0) throw std::invalid_argument("k_of_eps: c0, cstar must be positive");
    return std::max(10.0 / (c0 * cstar) * std::log(16.0 / (eps * eps)), 20.0);
}

JansonCertificate janson_bound(double expected, double delta, double eps) {
    if (!(expected > 0)) throw std::invalid_argument("janson_bound: expected must be positive");
    if (delta < 0) throw std::invalid_argument("janson_bound: delta < 0");
    if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("janson_bound: eps must lie in (0, 1]");
    JansonCertificate cert;
    cert.expected = expected;
    cert.delta = delta;
    cert.eps = eps;
    cert.bound = std::exp(-(eps * expected) * (eps * expected) / (2.0 * (expected + delta)));
    return cert;
}

EYDelta exact_ey_delta(std::uint64_t n, double c, double eps, const PrimeTable& table) {
    if (n % 2 == 0) throw std::invalid_argument("exact_ey_delta: n must be odd");
    if (n > kEyDeltaMaxN) throw std::invalid_argument("exact_ey_delta: n too large to enumerate");
    if (!table.covers(2, n)) throw std::invalid_argument("exact_ey_delta: table too small");
    if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("exact_ey_delta: eps must lie in (0, 0.5)");

    const std::uint64_t m_min = static_cast<std::uint64_t>(
        std::max<std::int64_t>(2, int_threshold_ceil(std::pow(static_cast<double>(n), 1.0 - 2.0 * eps))));
    const std::uint64_t ij_min = static_cast<std::uint64_t>(
        std::max<std::int64_t>(4, int_threshold_ceil(std::pow(static_cast<double>(n), 1.0 - eps))));

    EYDelta out;
    if (n < m_min + m_min + 2) return out;  // no room for i + j + p = n

    // rho and per-value accumulators indexed by element value
    std::vector<double> rho(n + 1, 0.0), sw(n + 1, 0.0), sw2(n + 1, 0.0), corr(n + 1, 0.0);
    const auto primes = table.primes_in(m_min, n - m_min - 2);
    for (std::uint64_t p : primes) rho[p] = rho_a(c, p);

    KahanSum expected, pair_prod;  // pair_prod = sum_{(i,j) in X, i<j} rho_i rho_j
    for (std::uint64_t i : primes) {
        std::uint64_t j_lo = std::max(m_min, ij_min > i ? ij_min - i : 0);
        if (j_lo + i + 2 > n) continue;
        table.for_each_prime(j_lo, n - i - 2, [&](std::uint64_t j) {
            if (!table.is_prime(n - i - j)) return;
            out.x_size++;
            if (i == j) {
                expected.add(rho[i]);  // E(t_i^2) = rho_i
                sw[i] += 1.0;
                sw2[i] += 1.0;
            } else {
                expected.add(rho[i] * rho[j]);
                sw[i] += rho[j];
                sw2[i] += rho[j] * rho[j];
                sw[j] += rho[i];
                sw2[j] += rho[i] * rho[i];
                corr[i] += rho[j] - rho[j] * rho[j];
                if (i < j) pair_prod.add(rho[i] * rho[j]);
            }
        });
    }

    // Delta over ordered overlapping pairs, grouped by shared value v:
    //   D_v = rho_v ((sum_w)^2 - sum_w^2) + 2 rho_v sum_a (rho_a - rho_a^2)
    // where the correction replaces rho_a^2 by rho_a for the two ordered
    // pairs ((v,a),(a,v)) whose union is just {v,a}. Pairs sharing both
    // values are counted once per value, so subtract them once.
    KahanSum delta;
    for (std::uint64_t v : primes)
        if (sw[v] != 0.0 || corr[v] != 0.0)
            delta.add(rho[v] * (sw[v] * sw[v] - sw2[v] + 2.0 * corr[v]));
    out.delta = delta.value() - 2.0 * pair_prod.value();
    out.expected = expected.value();
    return out;
}

}  // namespace primecomp
