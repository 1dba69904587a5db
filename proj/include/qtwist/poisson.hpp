#pragma once

#include <cstdint>

#include "qtwist/arith.hpp"
#include "qtwist/windows.hpp"

namespace qtwist {

struct PoissonCheck {
    double lhs = 0;       // sum over odd d of (d/n) F(d/X)
    double rhs = 0;       // dual k-sum with Gauss-sum weights
    double residual = 0;  // relative
    long long k_max_used = 0;
};

// Numerical check of the quadratic-character Poisson identity for odd n.
PoissonCheck poisson_check(std::uint64_t n, double X, const SmoothWindow& F,
                           const FactorTables& tables, double tail_tol = 1e-8);

}  // namespace qtwist
