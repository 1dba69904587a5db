#include "qtwist/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qtwist {

namespace {

// c * sqrt(rad) with rad square-free; keeps prime-power products exact.
struct SqrtInt {
    long long c = 1;
    long long rad = 1;

    SqrtInt operator*(const SqrtInt& o) const {
        const long long g = std::gcd(rad, o.rad);
        return {c * o.c * g, (rad / g) * (o.rad / g)};
    }
    double to_double() const { return static_cast<double>(c) * std::sqrt(static_cast<double>(rad)); }
};

// G_k(p^b) per the prime-power case table; vp_k = v_p(k), k_inf marks k = 0 (a = infinity).
SqrtInt gauss_prime_power(long long k, std::uint64_t p, int b, bool k_inf, const FactorTables& tables) {
    int a = 0;
    long long kk = std::llabs(k);
    if (!k_inf) {
        while (kk % static_cast<long long>(p) == 0) { kk /= static_cast<long long>(p); ++a; }
    }

    std::uint64_t pb = 1;
    for (int i = 0; i < b; ++i) pb *= p;

    if (k_inf || b <= a) {
        if (b % 2 == 0) return {static_cast<long long>(tables.phi[pb]), 1};  // phi(p^b)
        return {0, 1};
    }
    if (b == a + 1) {
        std::uint64_t pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        if (b % 2 == 0) return {-static_cast<long long>(pa), 1};
        // (k/p^a over p) * p^a * sqrt(p); the Legendre symbol sees the sign of k
        long long kred = k;
        for (int i = 0; i < a; ++i) kred /= static_cast<long long>(p);
        const int leg = kronecker(kred, p);
        return {leg * static_cast<long long>(pa), static_cast<long long>(p)};
    }
    return {0, 1};  // b >= a + 2
}

}  // namespace

std::complex<double> gauss_direct(long long k, std::uint64_t m) {
    if (m == 0 || m % 2 == 0 || m > 100'000)
        throw std::domain_error("gauss_direct: m must be odd, 1 <= m <= 1e5");

    const double twopi = 2.0 * std::numbers::pi;
    std::complex<double> sum = 0.0;
    for (std::uint64_t a = 0; a < m; ++a) {
        const int chi = kronecker(static_cast<long long>(a), m);
        if (chi == 0) continue;
        // reduce ak mod m exactly before forming the angle
        const long long r = ((static_cast<long long>(a % m) * (k % static_cast<long long>(m))) % static_cast<long long>(m) + static_cast<long long>(m)) % static_cast<long long>(m);
        const double angle = twopi * static_cast<double>(r) / static_cast<double>(m);
        sum += static_cast<double>(chi) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    const int neg1 = kronecker(-1, m);
    const std::complex<double> pref =
        std::complex<double>(0.5, -0.5) + static_cast<double>(neg1) * std::complex<double>(0.5, 0.5);
    return pref * sum;
}

double gauss_closed(long long k, std::uint64_t m, const FactorTables& tables) {
    if (m == 0 || m % 2 == 0)
        throw std::domain_error("gauss_closed: m must be odd and positive");
    if (m > tables.limit)
        throw std::out_of_range("gauss_closed: m exceeds table limit");

    const bool k_inf = (k == 0);
    SqrtInt acc{1, 1};
    std::uint64_t rest = m;
    while (rest > 1) {
        const std::uint64_t p = tables.spf[rest];
        int b = 0;
        while (rest % p == 0) { rest /= p; ++b; }
        acc = acc * gauss_prime_power(k, p, b, k_inf, tables);
        if (acc.c == 0) return 0.0;
    }
    return acc.to_double();
}

}  // namespace qtwist
