#pragma once

#include <cstdint>

#include "qtwist/arith.hpp"
#include "qtwist/modform.hpp"
#include "qtwist/windows.hpp"

namespace qtwist {

enum class SumMethod { naive, sieved };

struct ExperimentPoint {
    double X = 0;
    double Y = 0;
    double value_S = 0;
    std::uint64_t n_d_terms = 0;
    double wall_time = 0;
    SumMethod method = SumMethod::sieved;
};

// sum over n of lambda_f(n) (8d/n) Phi(n/Y); d odd square-free.
double inner_sum(std::uint64_t d, double Y, const SmoothWindow& phi,
                 const EigenformCoefficients& coeffs, const FactorTables& tables);

// S_f(X,Y;Phi,Psi): outer sum over odd square-free d weighted by Psi(d/X).
// Deterministic for fixed inputs regardless of worker scheduling.
ExperimentPoint mean_square(double X, double Y, const SmoothWindow& phi, const SmoothWindow& psi,
                            const EigenformCoefficients& coeffs, const FactorTables& tables,
                            SumMethod method, int workers);

}  // namespace qtwist
