#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

#include "qtwist/mainterm.hpp"

using namespace qtwist;

namespace {

bool is_square_u64(std::uint64_t v) {
    const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    return r * r == v;
}

}  // namespace

TEST_CASE("square pairs match exhaustive search") {
    const auto tables = build_factor_tables(300);
    for (const double ymax : {1.0, 9.0, 50.0, 255.0}) {
        std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
        const auto lim = static_cast<std::uint64_t>(ymax);
        for (std::uint64_t n1 = 1; n1 <= lim; n1 += 2)
            for (std::uint64_t n2 = 1; n2 <= lim; n2 += 2)
                if (is_square_u64(n1 * n2)) brute.insert({n1, n2});

        std::set<std::pair<std::uint64_t, std::uint64_t>> got;
        for (const auto& p : square_pairs(ymax, tables)) {
            CHECK(p.n1 == p.r * p.s1 * p.s1);
            CHECK(p.n2 == p.r * p.s2 * p.s2);
            CHECK(std::gcd(p.s1, p.s2) == 1);
            CHECK(got.insert({p.n1, p.n2}).second);  // no duplicates
        }
        CHECK(got == brute);
    }
}

TEST_CASE("diagonal constant equals an explicit pair sum at Y = 256") {
    const auto phi = SmoothWindow::bump(0.5, 1.0);
    const auto psi = SmoothWindow::bump(0.5, 1.0);
    const double Y = 256.0;
    const auto coeffs = lambda_table(256);
    const auto tables = build_factor_tables(256);

    double sum = 0.0;
    for (std::uint64_t n1 = 1; n1 <= 256; n1 += 2) {
        for (std::uint64_t n2 = 1; n2 <= 256; n2 += 2) {
            if (!is_square_u64(n1 * n2)) continue;
            const double w = phi(n1 / Y) * phi(n2 / Y);
            if (w == 0.0) continue;
            double euler = 1.0;
            std::uint64_t m = n1 * n2;
            // product of p/(p+1) over primes dividing n1 n2
            for (std::uint64_t p = 3; p * p <= m; p += 2)
                if (m % p == 0) {
                    euler *= p / (p + 1.0);
                    while (m % p == 0) m /= p;
                }
            if (m > 1) euler *= m / (m + 1.0);
            sum += coeffs.lambda[n1] * coeffs.lambda[n2] * euler * w;
        }
    }
    const double want = (4.0 / (std::numbers::pi * std::numbers::pi)) * psi.mass * sum / Y;
    CHECK(diagonal_constant(Y, phi, psi, coeffs, tables) ==
          doctest::Approx(want).epsilon(1e-12).scale(1.0));
}

TEST_CASE("diagonal constant is Cauchy in Y") {
    const auto phi = SmoothWindow::bump(0.5, 1.0);
    const auto psi = SmoothWindow::bump(0.5, 1.0);
    const auto coeffs = lambda_table(1 << 13);
    const auto tables = build_factor_tables(1 << 13);
    const double c1 = diagonal_constant(1 << 11, phi, psi, coeffs, tables);
    const double c2 = diagonal_constant(1 << 12, phi, psi, coeffs, tables);
    const double c3 = diagonal_constant(1 << 13, phi, psi, coeffs, tables);
    CHECK(std::abs(c3 - c2) < std::abs(c2 - c1));
    const double ex = extrapolate_diagonal(c1, c2, c3);
    // extrapolation stays near the last iterate
    CHECK(std::abs(ex - c3) < 4.0 * std::abs(c3 - c2) + 1e-12);
}

TEST_CASE("Z2 symmetry and domain") {
    const auto coeffs = lambda_table(1024);
    const auto tables = build_factor_tables(1024);
    ContourSpec spec;
    spec.prime_cutoff = 1000;
    const auto a = z2_value({2.0, 0.0}, {3.0, 0.0}, coeffs, tables, spec);
    const auto b = z2_value({3.0, 0.0}, {2.0, 0.0}, coeffs, tables, spec);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    CHECK_THROWS(z2_value({0.2, 0.0}, {2.0, 0.0}, coeffs, tables, spec));
}

TEST_CASE("Z2 at (2,2) matches a direct truncated double Dirichlet series") {
    // the double Dirichlet series over odd n1, n2 with n1 n2 square of
    //   lambda(n1) lambda(n2) prod_{p | n1 n2} p/(p+1) / (n1^u n2^v)
    // factors as zeta(u+v) L(2u) L(2v) L(u+v) * Z2(u,v) with the symmetric-square L
    const auto coeffs = lambda_table(10'000);
    const auto tables = build_factor_tables(10'000);
    ContourSpec spec;
    spec.prime_cutoff = 10'000;  // rapid convergence at abscissa 2
    double direct = 0.0;
    for (const auto& pr : square_pairs(2000.0, tables)) {
        double euler = 1.0;
        std::vector<std::uint64_t> ps;  // primes of n1 n2 = primes of r, s1, s2
        for (const std::uint64_t part : {pr.r, pr.s1, pr.s2}) {
            std::uint64_t x = part;
            while (x > 1) {
                ps.push_back(tables.spf[x]);
                const std::uint64_t p = tables.spf[x];
                while (x % p == 0) x /= p;
            }
        }
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (const std::uint64_t p : ps) euler *= p / (p + 1.0);
        direct += coeffs.lambda[pr.n1] * coeffs.lambda[pr.n2] * euler /
                  (std::pow(static_cast<double>(pr.n1), 2.0) *
                   std::pow(static_cast<double>(pr.n2), 2.0));
    }
    const LSeriesAccessor acc(coeffs, 10'000);
    const double L4 = acc.L(4.0).real();
    const double globals = zeta_eval(4.0).real() * L4 * L4 * L4;
    const auto got = z2_value({2.0, 0.0}, {2.0, 0.0}, coeffs, tables, spec);
    CHECK(std::abs(got.imag()) < 1e-12);
    CHECK(got.real() == doctest::Approx(direct / globals).epsilon(1e-6));
}

TEST_CASE("Z2 stable under raising the Euler cutoffs") {
    const auto coeffs = lambda_table(1 << 17);
    const auto tables = build_factor_tables(1 << 17);
    ContourSpec lo, hi;  // lo keeps the defaults
    hi.prime_cutoff = 2 * lo.prime_cutoff;
    hi.exponent_cutoff = lo.exponent_cutoff + 4;
    const std::complex<double> u(0.55, 0.0), v(0.45, 1.0);
    const auto a = z2_value(u, v, coeffs, tables, lo);
    const auto b = z2_value(u, v, coeffs, tables, hi);
    CHECK(std::abs(a - b) <= 1e-5 * std::max(1.0, std::abs(b)));
}
