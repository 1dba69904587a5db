#include "qtwist/modform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qtwist {

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

int128 int128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("int128_from_string: empty");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') { neg = (s[0] == '-'); i = 1; }
    if (i == s.size()) throw std::invalid_argument("int128_from_string: no digits");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("int128_from_string: bad digit");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

std::vector<int128> eta_power_q_expansion(std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("eta_power_q_expansion: N >= 1 required");

    // Jacobi: eta^3 / q^{1/8} = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
    // Delta = q * (that series)^8; tau(n) is coefficient n-1 of the 8th power.
    struct Term { std::uint64_t e; long long c; };
    std::vector<Term> sparse;
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t e = k * (k + 1) / 2;
        if (e >= N) break;
        const long long c = (k & 1) ? -static_cast<long long>(2 * k + 1)
                                    : static_cast<long long>(2 * k + 1);
        sparse.push_back({e, c});
    }

    std::vector<int128> cur(N, 0), next(N, 0);
    for (const auto& t : sparse) cur[t.e] = t.c;

    for (int pass = 1; pass < 8; ++pass) {
        std::fill(next.begin(), next.end(), int128{0});
        for (const auto& t : sparse) {
            const std::uint64_t lim = N - t.e;
            for (std::uint64_t i = 0; i < lim; ++i) {
                if (cur[i] == 0) continue;
                int128 prod, sum;
                if (__builtin_mul_overflow(cur[i], static_cast<int128>(t.c), &prod) ||
                    __builtin_add_overflow(next[i + t.e], prod, &sum))
                    throw std::overflow_error("eta_power_q_expansion: 128-bit overflow");
                next[i + t.e] = sum;
            }
        }
        cur.swap(next);
    }

    std::vector<int128> tau(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n) tau[n] = cur[n - 1];
    return tau;
}

EigenformCoefficients lambda_table(std::uint64_t N) {
    EigenformCoefficients c;
    c.limit = N;
    c.tau = eta_power_q_expansion(N);
    c.lambda.assign(N + 1, 0.0);
    for (std::uint64_t n = 1; n <= N; ++n)
        c.lambda[n] = static_cast<double>(c.tau[n]) / std::pow(static_cast<double>(n), 5.5);
    return c;
}

std::vector<double> lambda_at_squares(const EigenformCoefficients& coeffs, std::uint64_t M) {
    if (coeffs.limit < M)
        throw std::invalid_argument("lambda_at_squares: coefficient table shorter than M");

    // local spf sieve up to M
    std::vector<std::uint32_t> spf(M + 1, 0);
    for (std::uint64_t i = 2; i <= M; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= M; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    std::vector<double> out(M + 1, 0.0);
    out[0] = 0.0;
    if (M >= 1) out[1] = 1.0;
    for (std::uint64_t n = 2; n <= M; ++n) {
        double val = 1.0;
        std::uint64_t m = n;
        while (m > 1) {
            const std::uint64_t p = spf[m];
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            // lambda(p^j) by Hecke recursion, need j = 2e
            const double lp = coeffs.lambda[p];
            double lm1 = 1.0, l0 = lp;  // lambda(p^0), lambda(p^1)
            for (int j = 1; j < 2 * e; ++j) {
                const double l1 = lp * l0 - lm1;
                lm1 = l0;
                l0 = l1;
            }
            val *= l0;
        }
        out[n] = val;
    }
    return out;
}

void write_tau_cache(const std::string& path, const std::vector<int128>& tau) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_tau_cache: cannot open " + path);
    for (std::size_t n = 1; n < tau.size(); ++n)
        f << n << ',' << int128_to_string(tau[n]) << '\n';
    if (!f) throw std::runtime_error("write_tau_cache: write failed");
}

std::vector<int128> read_tau_cache(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_tau_cache: cannot open " + path);
    std::vector<int128> tau(1, 0);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("read_tau_cache: bad row");
        const std::uint64_t n = std::stoull(line.substr(0, comma));
        if (n != tau.size()) throw std::runtime_error("read_tau_cache: rows out of order");
        tau.push_back(int128_from_string(line.substr(comma + 1)));
    }
    return tau;
}

}  // namespace qtwist
