#include "qtwist/mainterm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qtwist {

namespace {

// distinct prime factors of n into `out` (deduplicated by caller's sort/unique)
void collect_primes(std::uint64_t n, const FactorTables& tables, std::vector<std::uint32_t>& out) {
    while (n > 1) {
        const std::uint32_t p = tables.spf[n];
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
}

double lambda_pp(double lp, int e) {
    if (e == 0) return 1.0;
    double lm1 = 1.0, l0 = lp;
    for (int j = 1; j < e; ++j) {
        const double l1 = lp * l0 - lm1;
        lm1 = l0;
        l0 = l1;
    }
    return l0;
}

// local factor of L(s, sym^2 f) is 1/D_p(s)
std::complex<double> sym2_local_inverse(double lp2, std::complex<double> ps) {
    // ps = p^{-s}
    return 1.0 - lp2 * ps + lp2 * ps * ps - ps * ps * ps;
}

}  // namespace

std::vector<SquarePair> square_pairs(double ymax, const FactorTables& tables) {
    std::vector<SquarePair> out;
    if (ymax < 1.0) return out;
    const auto Y = static_cast<std::uint64_t>(std::floor(ymax));
    if (Y > tables.limit) throw std::out_of_range("square_pairs: ymax exceeds table limit");
    for (std::uint64_t r = 1; r <= Y; r += 2) {
        for (std::uint64_t s1 = 1; r * s1 * s1 <= Y; s1 += 2) {
            for (std::uint64_t s2 = 1; r * s2 * s2 <= Y; s2 += 2) {
                if (std::gcd(s1, s2) != 1) continue;
                out.push_back({r * s1 * s1, r * s2 * s2, r, s1, s2});
            }
        }
    }
    return out;
}

double diagonal_constant(double Y, const SmoothWindow& phi, const SmoothWindow& psi,
                         const EigenformCoefficients& coeffs, const FactorTables& tables) {
    const double upper = phi.b * Y;
    if (upper > static_cast<double>(coeffs.limit) || upper > static_cast<double>(tables.limit))
        throw std::out_of_range("diagonal_constant: tables too short for Phi support * Y");

    double sum = 0.0;
    std::vector<std::uint32_t> primes;
    const auto nmax = static_cast<std::uint64_t>(std::floor(upper));
    for (std::uint64_t r = 1; r <= nmax; r += 2) {
        for (std::uint64_t s1 = 1; r * s1 * s1 <= nmax; s1 += 2) {
            const std::uint64_t n1 = r * s1 * s1;
            const double phi1 = phi(static_cast<double>(n1) / Y);
            if (phi1 == 0.0) continue;
            for (std::uint64_t s2 = 1; r * s2 * s2 <= nmax; s2 += 2) {
                if (std::gcd(s1, s2) != 1) continue;
                const std::uint64_t n2 = r * s2 * s2;
                const double phi2 = phi(static_cast<double>(n2) / Y);
                if (phi2 == 0.0) continue;
                primes.clear();
                collect_primes(r, tables, primes);
                collect_primes(s1, tables, primes);
                collect_primes(s2, tables, primes);
                std::sort(primes.begin(), primes.end());
                primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
                double euler = 1.0;
                for (const std::uint32_t p : primes)
                    euler *= static_cast<double>(p) / (static_cast<double>(p) + 1.0);
                sum += coeffs.lambda[n1] * coeffs.lambda[n2] * euler * phi1 * phi2;
            }
        }
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return 4.0 / pi2 * psi.mass * sum / Y;
}

std::complex<double> z2_value(std::complex<double> u, std::complex<double> v,
                              const EigenformCoefficients& coeffs, const FactorTables& tables,
                              const ContourSpec& spec) {
    if (u.real() <= 0.26 || v.real() <= 0.26)
        throw std::domain_error("z2_value: need Re u, Re v > 1/4 + margin");
    if (spec.prime_cutoff > coeffs.limit || spec.prime_cutoff > tables.limit)
        throw std::out_of_range("z2_value: prime cutoff exceeds table limits");

    const double sigma_min = std::min(u.real(), v.real());
    std::complex<double> prod = 1.0;
    std::vector<std::complex<double>> xu, xv;
    std::vector<double> lam;
    double resid_window = 0.0;  // sum of |local - 1| over the top half-decade

    for (std::uint64_t p = 2; p <= spec.prime_cutoff; ++p) {
        if (tables.spf[p] != p) continue;
        const double lp = coeffs.lambda[p];
        const double lp2 = lambda_pp(lp, 2);
        const double logp = std::log(static_cast<double>(p));
        const std::complex<double> pu = std::exp(-u * logp);
        const std::complex<double> pv = std::exp(-v * logp);
        const std::complex<double> puv = pu * pv;

        std::complex<double> local = (1.0 - puv) * sym2_local_inverse(lp2, pu * pu) *
                                     sym2_local_inverse(lp2, pv * pv) *
                                     sym2_local_inverse(lp2, puv);
        if (p != 2) {
            // extend the exponent range at small primes so the local sum itself
            // is converged to ~1e-12 regardless of the nominal cutoff
            const int E = std::min(
                160, std::max(spec.exponent_cutoff,
                              static_cast<int>(std::ceil(28.0 / (sigma_min * logp)))));
            xu.assign(E + 1, 1.0);
            xv.assign(E + 1, 1.0);
            lam.assign(E + 1, 1.0);
            if (E >= 1) lam[1] = lp;
            for (int e = 1; e <= E; ++e) {
                xu[e] = xu[e - 1] * pu;
                xv[e] = xv[e - 1] * pv;
                if (e >= 2) lam[e] = lp * lam[e - 1] - lam[e - 2];
            }
            std::complex<double> zsum = 0.0;
            for (int e1 = 0; e1 <= E; ++e1) {
                for (int e2 = e1 % 2; e2 <= E - e1; e2 += 2) {
                    if (e1 == 0 && e2 == 0) continue;
                    zsum += lam[e1] * lam[e2] * xu[e1] * xv[e2];
                }
            }
            const double pfrac = static_cast<double>(p) / (static_cast<double>(p) + 1.0);
            local *= 1.0 + pfrac * zsum;
        }
        if (2 * p > spec.prime_cutoff) resid_window += std::abs(local - 1.0);
        prod *= local;
    }

    // tail over p > P, extrapolated from the measured local residuals in
    // (P/2, P]: |local - 1| ~ C p^{-alpha} gives tail = window / (2^{alpha-1} - 1)
    const double alpha = std::max(1.05, std::min(1.0 + 2.0 * sigma_min, 4.0 * sigma_min));
    const double tail = resid_window / (std::pow(2.0, alpha - 1.0) - 1.0);
    if (tail > 2e-3)
        throw AccuracyError("z2_value: Euler-product tail too large", tail);
    return prod;
}

C0Result c0_contour(const SmoothWindow& phi, const SmoothWindow& psi, const ContourSpec& spec,
                    const LSeriesAccessor& acc, const EigenformCoefficients& coeffs,
                    const FactorTables& tables) {
    if (!(spec.epsilon > 0.01 && spec.epsilon < 0.15))
        throw std::domain_error("c0_contour: epsilon must lie in (0.01, 0.15)");

    const double eps = spec.epsilon;
    const double L1 = acc.L1();
    QuadratureSpec mq;  // inner Mellin evaluations
    mq.abs_tol = 1e-13;
    mq.rel_tol = 1e-11;

    auto integrand = [&](double t) -> double {
        const std::complex<double> u(0.5 + eps, t);
        const std::complex<double> one_minus_u = 1.0 - u;
        const std::complex<double> val = mellin_transform(phi, u, mq) *
                                         mellin_transform(phi, one_minus_u, mq) *
                                         acc.L(2.0 * u) * acc.L(2.0 - 2.0 * u) *
                                         z2_value(u, one_minus_u, coeffs, tables, spec);
        return val.real();
    };

    const double panel = 4.0;
    double total = 0.0;
    double T_used = 0.0;
    int quiet = 0;
    // The window transforms decay like exp(-4 sqrt(t)) while the relative noise
    // of the smoothed-functional-equation L-values grows roughly like
    // exp(1.2 t); past t ~ 30 the integrand is below 1e-10 in signal and the
    // noise starts to dominate, so the adaptive sweep stops there.  The
    // remaining truncation is covered by the reported error estimate.
    const double Tmax = (spec.T > 0.0) ? spec.T : 30.0;
    while (T_used < Tmax) {
        const double t1 = std::min(T_used + panel, Tmax);
        const double piece = integrate(integrand, T_used, t1, spec.quad);
        total += piece;
        T_used = t1;
        if (spec.T > 0.0) continue;  // fixed T requested: integrate all of it
        if (std::abs(piece) < std::max(spec.quad.abs_tol, 1e-8 * std::abs(total))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }

    // truncation estimate from the Mellin decay of the window at the cut height
    const std::complex<double> ut(0.5 + eps, T_used);
    const double trunc = std::abs(mellin_transform(phi, ut, mq)) *
                         std::abs(mellin_transform(phi, 1.0 - ut, mq)) * 100.0;

    const double pi = std::numbers::pi;
    C0Result res;
    res.value = 4.0 / (pi * pi) * psi.mass * L1 * total / pi;
    res.error_estimate = 4.0 / (pi * pi) * psi.mass * std::abs(L1) *
                         (trunc + 1e-7 * std::abs(total)) / pi;
    res.T_used = T_used;
    return res;
}

double extrapolate_diagonal(double c1, double c2, double c3) {
    const double d1 = c1 - c2, d2 = c2 - c3;
    if (d1 == 0.0) return c3;
    const double q = d2 / d1;
    if (!(q > 0.0 && q < 0.95)) return c3;
    return c3 - d2 * q / (1.0 - q);
}

}  // namespace qtwist
