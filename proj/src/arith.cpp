#include "qtwist/arith.hpp"

#include <stdexcept>

namespace qtwist {

FactorTables build_factor_tables(std::uint64_t limit) {
    if (limit < 2 || limit > 100'000'000ull)
        throw std::invalid_argument("build_factor_tables: limit must be in [2, 1e8]");

    FactorTables t;
    t.limit = limit;
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    t.spf.assign(n, 0);
    t.mobius.assign(n, 0);
    t.phi.assign(n, 0);
    t.divcount.assign(n, 0);
    std::vector<std::uint8_t> cnt(n, 0);  // multiplicity of spf, freed on return

    t.mobius[1] = 1;
    t.phi[1] = 1;
    t.divcount[1] = 1;

    std::vector<std::uint32_t> primes;
    primes.reserve(n / 16 + 16);

    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            t.mobius[i] = -1;
            t.phi[i] = static_cast<std::uint32_t>(i - 1);
            t.divcount[i] = 2;
            cnt[i] = 1;
        }
        for (std::uint32_t p : primes) {
            if (p > t.spf[i] || i * p > limit) break;
            const std::uint64_t j = i * p;
            t.spf[j] = p;
            if (p == t.spf[i]) {
                t.mobius[j] = 0;
                t.phi[j] = t.phi[i] * p;
                cnt[j] = static_cast<std::uint8_t>(cnt[i] + 1);
                t.divcount[j] = t.divcount[i] / (cnt[i] + 1u) * (cnt[i] + 2u);
            } else {
                t.mobius[j] = static_cast<std::int8_t>(-t.mobius[i]);
                t.phi[j] = t.phi[i] * (p - 1);
                cnt[j] = 1;
                t.divcount[j] = t.divcount[i] * 2;
            }
        }
    }
    return t;
}

int kronecker(long long a, unsigned long long n) {
    if (a == 0 && n == 0)
        throw std::domain_error("kronecker: (0/0) is undefined");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    // Split off the even part of n; (a/2) = 0 for even a, else +-1 by a mod 8.
    if ((n & 1ull) == 0) {
        if ((a & 1ll) == 0) return 0;
        int tz = 0;
        while ((n & 1ull) == 0) { n >>= 1; ++tz; }
        if (tz & 1) {
            const int r8 = static_cast<int>(((a % 8) + 8) % 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
    }
    if (n == 1) return result;

    // Jacobi symbol for odd n > 1; reduction mod n absorbs the sign of a.
    unsigned long long aa = static_cast<unsigned long long>(((a % static_cast<long long>(n)) + static_cast<long long>(n))) % n;
    unsigned long long nn = n;
    while (aa != 0) {
        while ((aa & 1ull) == 0) {
            aa >>= 1;
            const unsigned r8 = nn & 7ull;
            if (r8 == 3 || r8 == 5) result = -result;
        }
        if ((aa & 3ull) == 3 && (nn & 3ull) == 3) result = -result;
        const unsigned long long tmp = nn % aa;
        nn = aa;
        aa = tmp;
    }
    return nn == 1 ? result : 0;
}

}  // namespace qtwist
