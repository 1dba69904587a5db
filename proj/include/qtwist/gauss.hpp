#pragma once

#include <complex>
#include <cstdint>

#include "qtwist/arith.hpp"

namespace qtwist {

// G_k(m) from the definition: prefactor times sum over a mod m of (a/m) e(ak/m).
// O(m) work; m must be odd, 1 <= m <= 1e5.
std::complex<double> gauss_direct(long long k, std::uint64_t m);

// G_k(m) by multiplicativity and the five-case prime-power evaluation.
// m must be odd and <= tables.limit.
double gauss_closed(long long k, std::uint64_t m, const FactorTables& tables);

}  // namespace qtwist
