#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qtwist/modform.hpp"

namespace qtwist {

// Riemann zeta by Euler-Maclaurin; reliable for 0.1 <= Re s <= 3, |Im s| <= 1e3.
// Throws std::domain_error at s = 1.
std::complex<double> zeta_eval(std::complex<double> s);

// L(s, sym^2 f) for the fixed form: Dirichlet coefficients from
// zeta(2s) * sum lambda_f(n^2) n^{-s}, completed with the triple Gamma factor.
class LSeriesAccessor {
  public:
    explicit LSeriesAccessor(const EigenformCoefficients& coeffs, std::size_t nterms = 20000);

    // Dirichlet coefficient b(n) of L(s, sym^2 f)
    double coefficient(std::uint64_t n) const { return b_.at(n); }
    std::size_t nterms() const { return b_.size() - 1; }

    // log of gamma(s) = pi^{-3s/2} G((s+1)/2) G((s+k-1)/2) G((s+k)/2)
    std::complex<double> log_gamma_factor(std::complex<double> s) const;

    // completed Lambda(s); entire, Lambda(s) = Lambda(1-s)
    std::complex<double> completed(std::complex<double> s) const;

    // L(s, sym^2 f); direct series for Re s >= 3, smoothed functional-equation
    // sums otherwise (usable throughout 0.7 <= Re s <= 3 at |Im s| <= ~150)
    std::complex<double> L(std::complex<double> s) const;

    double L1() const;  // L(1, sym^2 f), cached

  private:
    std::complex<double> half_sum(std::complex<double> z, double theta) const;

    const EigenformCoefficients* coeffs_;
    std::vector<double> b_;      // 1-based
    std::vector<double> log_n_;  // log n, 1-based
    mutable double L1_ = 0.0;
    mutable bool L1_ready_ = false;
};

}  // namespace qtwist
