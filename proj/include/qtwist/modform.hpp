#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtwist {

using int128 = __int128;

std::string int128_to_string(int128 v);
int128 int128_from_string(const std::string& s);

// Fourier data of the fixed eigenform Delta (weight 12), lambda[n] = tau[n] / n^{11/2}.
struct EigenformCoefficients {
    int weight = 12;
    std::uint64_t limit = 0;
    std::vector<int128> tau;     // 1-based, tau[0] unused
    std::vector<double> lambda;  // 1-based

    double lambda_at(std::uint64_t n) const { return lambda[n]; }
};

// tau(1..N) of q * prod (1-q^m)^24, exact integer arithmetic.
// Throws std::overflow_error if a coefficient leaves the 128-bit range.
std::vector<int128> eta_power_q_expansion(std::uint64_t N);

EigenformCoefficients lambda_table(std::uint64_t N);

// lambda_f(n^2) for n = 1..M from prime-power Hecke recursion; needs coeffs.limit >= M.
std::vector<double> lambda_at_squares(const EigenformCoefficients& coeffs, std::uint64_t M);

// Flat CSV cache, one "n,tau" row per coefficient.
void write_tau_cache(const std::string& path, const std::vector<int128>& tau);
std::vector<int128> read_tau_cache(const std::string& path);

}  // namespace qtwist
