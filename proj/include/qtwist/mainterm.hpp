#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qtwist/arith.hpp"
#include "qtwist/lfunctions.hpp"
#include "qtwist/modform.hpp"
#include "qtwist/windows.hpp"

namespace qtwist {

// odd pair n1 = r s1^2, n2 = r s2^2 with gcd(s1,s2) = 1, so n1 n2 is a square
struct SquarePair {
    std::uint64_t n1, n2, r, s1, s2;
};

// all odd pairs with n1 n2 a perfect square and n1, n2 <= ymax
std::vector<SquarePair> square_pairs(double ymax, const FactorTables& tables);

// truncated diagonal sum for C0; converges to the contour value as Y grows
double diagonal_constant(double Y, const SmoothWindow& phi, const SmoothWindow& psi,
                         const EigenformCoefficients& coeffs, const FactorTables& tables);

struct ContourSpec {
    double epsilon = 0.08;        // line Re(u) = 1/2 + epsilon
    double T = 0.0;               // truncation height; 0 = choose adaptively
    std::uint64_t prime_cutoff = 40000;
    int exponent_cutoff = 12;
    QuadratureSpec quad{1e-10, 1e-7, 4000};
};

// Z_2(u,v) as quotient-of-local-factors Euler product; needs Re u, Re v > 0.26
std::complex<double> z2_value(std::complex<double> u, std::complex<double> v,
                              const EigenformCoefficients& coeffs, const FactorTables& tables,
                              const ContourSpec& spec);

struct C0Result {
    double value = 0;
    double error_estimate = 0;
    double T_used = 0;
};

// C0(Phi,Psi) by the vertical-line integral on Re(u) = 1/2 + epsilon
C0Result c0_contour(const SmoothWindow& phi, const SmoothWindow& psi, const ContourSpec& spec,
                    const LSeriesAccessor& acc, const EigenformCoefficients& coeffs,
                    const FactorTables& tables);

// three-point power-law extrapolation of diagonal_constant over doublings of Y
double extrapolate_diagonal(double c1, double c2, double c3);

}  // namespace qtwist
