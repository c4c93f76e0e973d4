#include "primecomp/numtheory.hpp"

#include <algorithm>
#include <cmath>

#include "primecomp/sieve.hpp"

namespace primecomp {

SmallestFactorTable::SmallestFactorTable(std::uint64_t limit) {
    if (limit < 1) limit = 1;
    if (limit >= (std::uint64_t{1} << 32))
        throw ResourceLimitError("SmallestFactorTable: limit exceeds 32-bit range");
    if ((limit + 1) * sizeof(std::uint32_t) > memory_ceiling())
        throw ResourceLimitError("SmallestFactorTable: table exceeds memory ceiling");
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; i++) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

Factorization SmallestFactorTable::factorize(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("factorize: n = 0");
    if (n > limit()) throw std::invalid_argument("factorize: n beyond table limit");
    Factorization out;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        out.emplace_back(p, e);
    }
    return out;
}

Factorization trial_factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("trial_factorize: n = 0");
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool trial_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::uint32_t omega(std::uint64_t d, const SmallestFactorTable& fact) {
    return static_cast<std::uint32_t>(fact.factorize(d).size());
}

std::uint64_t tau(std::uint64_t d, const SmallestFactorTable& fact) {
    std::uint64_t t = 1;
    for (auto [p, e] : fact.factorize(d)) t *= e + 1;
    return t;
}

std::uint64_t euler_phi(std::uint64_t d, const SmallestFactorTable& fact) {
    std::uint64_t phi = d;
    for (auto [p, e] : fact.factorize(d)) phi -= phi / p;
    return phi;
}

bool is_squarefree(std::uint64_t d, const SmallestFactorTable& fact) {
    for (auto [p, e] : fact.factorize(d))
        if (e > 1) return false;
    return true;
}

double phi_reciprocal_sum(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("phi_reciprocal_sum: x = 0");
    if ((x + 1) * sizeof(std::uint32_t) > memory_ceiling())
        throw ResourceLimitError("phi_reciprocal_sum: x exceeds memory ceiling");
    std::vector<std::uint32_t> phi(x + 1);
    for (std::uint64_t i = 0; i <= x; i++) phi[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t i = 2; i <= x; i++) {
        if (phi[i] != i) continue;  // i prime
        for (std::uint64_t j = i; j <= x; j += i) phi[j] -= phi[j] / i;
    }
    KahanSum sum;
    for (std::uint64_t k = 1; k <= x; k++) sum.add(1.0 / phi[k]);
    return sum.value();
}

std::uint64_t divisor_sum_over_shifted_primes(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("divisor_sum_over_shifted_primes: n < 3");
    if (n * sizeof(std::uint32_t) > memory_ceiling())
        throw ResourceLimitError("divisor_sum_over_shifted_primes: n exceeds memory ceiling");
    std::vector<std::uint32_t> nd(n, 0);  // nd[m] = tau(m) for 1 <= m < n
    for (std::uint64_t d = 1; d < n; d++)
        for (std::uint64_t m = d; m < n; m += d) nd[m]++;
    std::uint64_t sum = 0;
    for (std::uint64_t p : simple_primes(n - 1)) sum += nd[n - p];
    return sum;
}

std::vector<double> universal_product_checkpoints(const std::vector<std::uint64_t>& checkpoints,
                                                  unsigned threads) {
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("universal_product_checkpoints: checkpoints not ascending");

    std::vector<double> out(checkpoints.size(), 1.0);
    long double acc = 1.0L;
    std::size_t ci = 0;
    const std::uint64_t pmax = checkpoints.back();
    if (pmax < 3) {
        for (double& v : out) v = 1.0;
        return out;
    }

    stream_prime_segments(3, pmax, std::uint64_t{1} << 25, threads, [&](const PrimeTable& seg) {
        seg.for_each_prime(seg.lo(), seg.hi(), [&](std::uint64_t p) {
            while (ci < checkpoints.size() && p > checkpoints[ci])
                out[ci++] = static_cast<double>(acc);
            long double q = static_cast<long double>(p) - 1.0L;
            acc *= 1.0L - 1.0L / (q * q);
        });
    });
    while (ci < checkpoints.size()) out[ci++] = static_cast<double>(acc);
    return out;
}

double SingularSeries::tail_bound(std::uint64_t P) {
    if (P < 4) P = 4;
    double q = static_cast<double>(P) - 1.0;
    // primes above P sit in 2 of every 6 residue classes
    return 1.0 / (3.0 * q) + 2.0 / (q * q);
}

std::uint64_t SingularSeries::choose_truncation(double tolerance, double corr_hint) {
    if (tolerance <= 0) throw std::invalid_argument("choose_truncation: tolerance <= 0");
    if (corr_hint < 1.0) corr_hint = 1.0;
    const double value_cap = 2.0 * 0.6602 * corr_hint;  // conservative C(n) upper bound
    std::uint64_t P = static_cast<std::uint64_t>(value_cap / (3.0 * tolerance)) + 2;
    P = std::max<std::uint64_t>(P, 1000);
    while (value_cap * tail_bound(P) > tolerance) {
        if (P > (std::uint64_t{1} << 36))
            throw ResourceLimitError("choose_truncation: tolerance needs an infeasible bound");
        P += P / 8 + 1;
    }
    return P;
}

SingularSeries::SingularSeries(SingularSeriesParams params, double corr_hint, unsigned threads)
    : params_(params), universal_(1.0) {
    if (params_.tolerance <= 0) throw std::invalid_argument("SingularSeries: tolerance <= 0");
    if (params_.truncation_bound == 0)
        params_.truncation_bound = choose_truncation(params_.tolerance, corr_hint);
    if (params_.truncation_bound < 3)
        throw std::invalid_argument("SingularSeries: truncation_bound < 3");
    universal_ = universal_product_checkpoints({params_.truncation_bound}, threads)[0];
}

SingularSeries SingularSeries::with_universal(SingularSeriesParams params,
                                              double precomputed_universal) {
    if (params.tolerance <= 0) throw std::invalid_argument("SingularSeries: tolerance <= 0");
    if (params.truncation_bound < 3)
        throw std::invalid_argument("SingularSeries: precomputed product needs its bound");
    if (!(precomputed_universal > 0.6 && precomputed_universal < 1.0))
        throw std::invalid_argument("SingularSeries: implausible universal product");
    SingularSeries s({3, params.tolerance});
    s.params_ = params;
    s.universal_ = precomputed_universal;
    return s;
}

double SingularSeries::eval(std::uint64_t n, const SmallestFactorTable& fact) const {
    if (n < 2) throw std::invalid_argument("singular_series: n < 2");
    if (n % 2 != 0) return 0.0;  // factor at p = 2 vanishes

    double corr = 1.0;
    for (auto [p, e] : fact.factorize(n)) {
        if (p == 2) continue;
        if (p <= params_.truncation_bound)
            corr *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
        else
            corr *= static_cast<double>(p) / static_cast<double>(p - 1);
    }
    double value = 2.0 * universal_ * corr;
    if (value * tail_bound(params_.truncation_bound) > params_.tolerance)
        throw std::invalid_argument(
            "singular_series: tolerance unattainable at truncation bound " +
            std::to_string(params_.truncation_bound));
    return value;
}

}  // namespace primecomp
