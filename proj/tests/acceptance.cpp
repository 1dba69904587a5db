// End-to-end acceptance suite: one pass/fail line per criterion (A1..A8).
// Exits nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "qtwist/charsum.hpp"
#include "qtwist/gauss.hpp"
#include "qtwist/lfunctions.hpp"
#include "qtwist/mainterm.hpp"
#include "qtwist/modform.hpp"
#include "qtwist/poisson.hpp"
#include "qtwist/windows.hpp"

using namespace qtwist;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* id, bool ok, const std::string& detail, double secs) {
    std::printf("%s %s  %s  (%.1f s)\n", id, ok ? "PASS" : "FAIL", detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class Fn>
void criterion(const char* id, Fn fn) {
    const auto t0 = Clock::now();
    try {
        auto [ok, detail] = fn();
        report(id, ok, detail, seconds_since(t0));
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what(), seconds_since(t0));
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int main() {
    const auto t_setup = Clock::now();
    const auto tables = build_factor_tables(262'144);
    const auto coeffs = lambda_table(100'000);
    const SmoothWindow phi = SmoothWindow::bump(0.5, 1.0);
    const SmoothWindow psi = SmoothWindow::bump(0.5, 1.0);
    std::printf("setup: tables to %llu, coefficients to %llu  (%.1f s)\n",
                static_cast<unsigned long long>(tables.limit),
                static_cast<unsigned long long>(coeffs.limit), seconds_since(t_setup));

    // A1: closed-form Gauss-type sums reproduce the defining exponential sums
    criterion("A1", [&] {
        constexpr double kTolPerM = 1e-6;  // scaled by max(1, m)
        constexpr double kBudget = 60.0;
        const auto t0 = Clock::now();
        double worst = 0.0;
        for (std::uint64_t m = 1; m <= 2001; m += 2) {
            for (long long k = -60; k <= 60; ++k) {
                const auto d = gauss_direct(k, m);
                const double c = gauss_closed(k, m, tables);
                const double scaled = std::abs(d - std::complex<double>(c, 0.0)) /
                                      std::max(1.0, static_cast<double>(m));
                worst = std::max(worst, scaled);
            }
        }
        const double secs = seconds_since(t0);
        const bool ok = worst <= kTolPerM && secs <= kBudget;
        return std::pair{ok, "max scaled |closed-direct| = " + fmt(worst)};
    });

    // A2: exact integer Hecke structure and the divisor bound up to 1e5
    criterion("A2", [&] {
        constexpr double kBudget = 60.0;
        const std::uint64_t N = coeffs.limit;
        const auto t0 = Clock::now();
        bool mult = true, rec = true, bound = true;
        for (std::uint64_t m = 2; m <= N && mult; ++m)
            for (std::uint64_t n = m + 1; m * n <= N; ++n)
                if (std::gcd(m, n) == 1 && coeffs.tau[m * n] != coeffs.tau[m] * coeffs.tau[n]) {
                    mult = false;
                    break;
                }
        for (std::uint64_t p = 2; p <= N && rec; ++p) {
            if (tables.spf[p] != p) continue;
            int128 p11 = 1;
            for (int i = 0; i < 11; ++i) p11 *= static_cast<int128>(p);
            for (std::uint64_t pk = p; pk * p <= N; pk *= p)
                if (coeffs.tau[p] * coeffs.tau[pk] != coeffs.tau[pk * p] + p11 * coeffs.tau[pk / p]) {
                    rec = false;
                    break;
                }
        }
        for (std::uint64_t n = 1; n <= N; ++n)
            if (std::abs(coeffs.lambda[n]) > static_cast<double>(tables.divcount[n]) * (1.0 + 1e-12)) {
                bound = false;
                break;
            }
        const double secs = seconds_since(t0);
        const bool ok = mult && rec && bound && secs <= kBudget;
        return std::pair{ok, std::string("multiplicative=") + (mult ? "yes" : "no") +
                                 " recursion=" + (rec ? "yes" : "no") +
                                 " divisor-bound=" + (bound ? "yes" : "no")};
    });

    // A3: twisted Poisson summation identity at small odd moduli
    criterion("A3", [&] {
        constexpr double kResidualTol = 1e-6;
        double worst = 0.0;
        for (const std::uint64_t n : {1ull, 3ull, 15ull, 105ull})
            for (const double X : {25.0, 100.0}) {
                const auto chk = poisson_check(n, X, psi, tables, 1e-8);
                worst = std::max(worst, chk.residual);
            }
        return std::pair{worst <= kResidualTol, "max relative residual = " + fmt(worst)};
    });

    // A4: leading constant agrees between the truncated diagonal sum and the
    // vertical-line integral; the integral is stable in the line abscissa;
    // the Euler-product core matches a direct double Dirichlet series
    criterion("A4", [&] {
        constexpr double kCrossTol = 1e-2;   // diagonal vs contour
        constexpr double kEpsTol = 1e-3;     // contour at eps = 0.05 vs 0.10
        constexpr double kZ2Tol = 1e-6;

        std::vector<double> diag;
        for (double Y = 1024.0; Y <= 16384.0; Y *= 2.0)
            diag.push_back(diagonal_constant(Y, phi, psi, coeffs, tables));
        const double c_diag = extrapolate_diagonal(diag[2], diag[3], diag[4]);

        const LSeriesAccessor acc(coeffs, 20'000);
        ContourSpec spec;
        spec.epsilon = 0.08;
        const double c_08 = c0_contour(phi, psi, spec, acc, coeffs, tables).value;
        spec.epsilon = 0.05;
        const double c_05 = c0_contour(phi, psi, spec, acc, coeffs, tables).value;
        spec.epsilon = 0.10;
        const double c_10 = c0_contour(phi, psi, spec, acc, coeffs, tables).value;

        const double cross = std::abs(c_diag - c_08) / std::abs(c_08);
        const double eps_dev = std::abs(c_05 - c_10) / std::abs(c_08);

        // direct double-series oracle for the Euler-product core
        double worst_z2 = 0.0;
        ContourSpec zspec;
        const auto pairs = square_pairs(2000.0, tables);
        for (const auto& [ur, vr] : std::vector<std::pair<double, double>>{
                 {2.0, 2.0}, {2.5, 2.5}, {3.0, 2.0}, {2.0, 3.0}, {3.5, 2.5}}) {
            double direct = 0.0;
            for (const auto& pr : pairs) {
                // distinct primes of n1 * n2 = distinct primes of r, s1, s2
                std::vector<std::uint64_t> ps;
                for (std::uint64_t part : {pr.r, pr.s1, pr.s2}) {
                    std::uint64_t x = part;
                    while (x > 1) {
                        const std::uint64_t p = tables.spf[x];
                        ps.push_back(p);
                        while (x % p == 0) x /= p;
                    }
                }
                std::sort(ps.begin(), ps.end());
                ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
                double euler = 1.0;
                for (const std::uint64_t p : ps) euler *= static_cast<double>(p) / (p + 1.0);
                direct += coeffs.lambda[pr.n1] * coeffs.lambda[pr.n2] * euler *
                          std::pow(static_cast<double>(pr.n1), -ur) *
                          std::pow(static_cast<double>(pr.n2), -vr);
            }
            // the double series factors as zeta(u+v) L(2u) L(2v) L(u+v) * Z2(u,v)
            const double globals = zeta_eval(ur + vr).real() * acc.L(2.0 * ur).real() *
                                   acc.L(2.0 * vr).real() * acc.L(ur + vr).real();
            const double oracle = direct / globals;
            const auto z = z2_value({ur, 0.0}, {vr, 0.0}, coeffs, tables, zspec);
            worst_z2 = std::max(worst_z2, std::abs(z.real() - oracle) / std::abs(oracle));
        }

        const bool ok = cross <= kCrossTol && eps_dev <= kEpsTol && worst_z2 <= kZ2Tol;
        return std::pair{ok, "diag=" + fmt(c_diag) + " contour=" + fmt(c_08) +
                                 " cross-dev=" + fmt(cross) + " eps-dev=" + fmt(eps_dev) +
                                 " z2-dev=" + fmt(worst_z2)};
    });

    // A5: mean-square values track C0 * X * Y with shrinking relative deviation.
    // A wider inner window averages more coefficients per twist, damping the
    // oscillating finite-Y part of the error enough for the decay to show at
    // these scales; the leading constant is recomputed for that window
    criterion("A5", [&] {
        constexpr double kRatioLo = 0.5, kRatioHi = 1.5;
        constexpr double kSlopeMax = -0.10;
        const SmoothWindow phi5 = SmoothWindow::bump(0.5, 2.0);
        const LSeriesAccessor acc(coeffs, 20'000);
        ContourSpec cspec;
        cspec.epsilon = 0.08;
        const double c0 = c0_contour(phi5, psi, cspec, acc, coeffs, tables).value;
        std::vector<double> logx, logdev, devs, ratios;
        for (double X = 16384.0; X <= 262144.0; X *= 2.0) {
            const double Y = std::ceil(std::sqrt(X));
            const auto pt = mean_square(X, Y, phi5, psi, coeffs, tables, SumMethod::sieved, 8);
            const double ratio = pt.value_S / (c0 * X * Y);
            ratios.push_back(ratio);
            devs.push_back(std::abs(ratio - 1.0));
            logx.push_back(std::log(X));
            logdev.push_back(std::log(std::abs(ratio - 1.0) + 1e-300));
        }
        const bool in_band = ratios.front() >= kRatioLo && ratios.front() <= kRatioHi;
        const std::size_t m = devs.size();
        const bool decreasing = devs[m - 1] < devs[m - 2] && devs[m - 2] < devs[m - 3];
        const double slope = fit_slope(logx, logdev);
        const bool ok = in_band && decreasing && slope <= kSlopeMax;
        std::string rlist;
        for (const double r : ratios) rlist += fmt(r) + " ";
        return std::pair{ok, "ratios = [ " + rlist + "] slope = " + fmt(slope)};
    });

    // A6: number of odd pairs with square product grows essentially linearly
    criterion("A6", [&] {
        constexpr double kLo = 1.0, kHi = 1.2;
        std::vector<double> e, c;
        for (int k = 8; k <= 13; ++k) {
            e.push_back(k);
            c.push_back(std::log2(static_cast<double>(
                square_pairs(std::pow(2.0, k), tables).size())));
        }
        const double slope = fit_slope(e, c);
        return std::pair{slope >= kLo && slope <= kHi, "log2-slope = " + fmt(slope)};
    });

    // A7: Gamma times cos+sin stays below 10 * |s|^{sigma - 1/2} on the grid
    criterion("A7", [&] {
        constexpr double kEnvelopeMax = 10.0;
        // log |cos z + sin z| via the e^{|Im z|} asymptote where direct
        // evaluation of cosh would overflow
        const auto log_abs_cs = [](std::complex<double> z) {
            const double y = z.imag();
            if (std::abs(y) <= 30.0) return std::log(std::abs(std::cos(z) + std::sin(z)));
            return std::abs(y) - 0.5 * std::log(2.0);
        };
        double fitted = 0.0;
        for (const double sigma : {0.25, 0.5, 0.75, 1.0})
            for (double t = 1.0; t <= 512.0; t *= 2.0) {
                const std::complex<double> s(sigma, t);
                const double lg = lgamma_complex(s).real() +
                                  log_abs_cs(0.5 * std::numbers::pi * s) -
                                  (sigma - 0.5) * std::log(std::abs(s));
                fitted = std::max(fitted, std::exp(lg));
            }
        return std::pair{fitted <= kEnvelopeMax, "fitted envelope constant = " + fmt(fitted)};
    });

    // A8: residue-table character evaluation beats per-term symbol computation
    criterion("A8", [&] {
        constexpr double kSpeedup = 5.0;
        constexpr double kValueTol = 1e-9;
        const double X = 16384.0, Y = 128.0;
        double t_naive = 1e300, t_sieved = 1e300, v_naive = 0, v_sieved = 0;
        for (int rep = 0; rep < 3; ++rep) {
            const auto a = mean_square(X, Y, phi, psi, coeffs, tables, SumMethod::naive, 1);
            const auto b = mean_square(X, Y, phi, psi, coeffs, tables, SumMethod::sieved, 1);
            t_naive = std::min(t_naive, a.wall_time);
            t_sieved = std::min(t_sieved, b.wall_time);
            v_naive = a.value_S;
            v_sieved = b.value_S;
        }
        const double rel = std::abs(v_naive - v_sieved) / std::abs(v_naive);
        const double speedup = t_naive / t_sieved;
        const bool ok = speedup >= kSpeedup && rel <= kValueTol;
        return std::pair{ok, "speedup = " + fmt(speedup) + "x, value agreement = " + fmt(rel)};
    });

    std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                      : "ACCEPTANCE FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
