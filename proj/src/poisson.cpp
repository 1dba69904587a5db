#include "qtwist/poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "qtwist/gauss.hpp"

namespace qtwist {

PoissonCheck poisson_check(std::uint64_t n, double X, const SmoothWindow& F,
                           const FactorTables& tables, double tail_tol) {
    if (n % 2 == 0) throw std::domain_error("poisson_check: n must be odd");

    PoissonCheck out;

    // d-sum: F supported on (0,inf), so only positive odd d contribute
    double gross = 0.0;  // unsigned mass of the d-sum, for the residual scale
    {
        std::uint64_t dlo = static_cast<std::uint64_t>(std::floor(F.a * X)) + 1;
        if (dlo % 2 == 0) ++dlo;
        const auto dhi = static_cast<std::uint64_t>(std::ceil(F.b * X));
        for (std::uint64_t d = dlo; d <= dhi; d += 2) {
            const double fv = F(static_cast<double>(d) / X);
            out.lhs += kronecker(static_cast<long long>(d), n) * fv;
            gross += std::abs(fv);
        }
    }

    // dual sum, truncated when the Gauss-sum bound times the transform decay
    // stays negligible for a stretch of k
    const double pref = X / (2.0 * static_cast<double>(n)) * kronecker(2, n);
    const double gbound = static_cast<double>(n) * std::sqrt(static_cast<double>(n));
    double ksum = gauss_closed(0, n, tables) * F.mass;
    QuadratureSpec tq;
    tq.abs_tol = 1e-13;
    tq.rel_tol = 1e-11;
    int quiet = 0;
    long long k = 0;
    const double scale = X / (2.0 * static_cast<double>(n));
    while (quiet < 25) {
        ++k;
        if (k > 200000)
            throw AccuracyError("poisson_check: k-sum failed to converge", 1.0);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        double contrib = 0.0;
        double env = 0.0;
        for (const long long kk : {k, -k}) {
            const double g = gauss_closed(kk, n, tables);
            const double xi = static_cast<double>(kk) * scale;
            const double ft = tilde_transform(F, xi, tq);
            contrib += sign * g * ft;
            env += gbound * std::abs(ft);
        }
        ksum += contrib;
        if (env < tail_tol * 1e-2)
            ++quiet;
        else
            quiet = 0;
    }
    out.k_max_used = k;
    out.rhs = pref * ksum;
    // both sides can cancel to floating-point noise; differences below the
    // k-sum's own truncation scale are then indistinguishable from zero
    const double denom =
        std::max({std::abs(out.lhs), std::abs(out.rhs), tail_tol * gross});
    out.residual = (denom == 0.0) ? 0.0 : std::abs(out.lhs - out.rhs) / denom;
    return out;
}

}  // namespace qtwist
