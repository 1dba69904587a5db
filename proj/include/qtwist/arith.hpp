#pragma once

#include <cstdint>
#include <vector>

namespace qtwist {

// Sieved multiplicative data up to `limit`, immutable after construction.
struct FactorTables {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;       // smallest prime factor, spf[0]=spf[1]=0
    std::vector<std::int8_t> mobius;      // in {-1,0,1}
    std::vector<std::uint32_t> phi;       // Euler totient
    std::vector<std::uint32_t> divcount;  // d(n)

    bool is_odd_squarefree(std::uint64_t n) const {
        return (n & 1u) != 0 && mobius[n] != 0;
    }
};

// Linear sieve; throws std::invalid_argument unless 2 <= limit <= 1e8.
FactorTables build_factor_tables(std::uint64_t limit);

// Kronecker symbol (a/n) for n >= 0.  Throws std::domain_error when a=n=0.
int kronecker(long long a, unsigned long long n);

}  // namespace qtwist
