#include "qtwist/charsum.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qtwist {

namespace {

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct InnerRange {
    std::uint64_t lo, hi;  // odd n with Phi(n/Y) possibly nonzero
};

InnerRange phi_range(double Y, const SmoothWindow& phi) {
    std::uint64_t lo = static_cast<std::uint64_t>(std::floor(phi.a * Y)) + 1;
    std::uint64_t hi = static_cast<std::uint64_t>(std::ceil(phi.b * Y));
    if (hi > 0) --hi;
    if (lo < 1) lo = 1;
    if (lo % 2 == 0) ++lo;
    return {lo, hi};
}

}  // namespace

double inner_sum(std::uint64_t d, double Y, const SmoothWindow& phi,
                 const EigenformCoefficients& coeffs, const FactorTables& tables) {
    if (!tables.is_odd_squarefree(d))
        throw std::invalid_argument("inner_sum: d must be odd and square-free");
    const auto [lo, hi] = phi_range(Y, phi);
    if (hi > coeffs.limit)
        throw std::out_of_range("inner_sum: coefficient table too short for Phi support * Y");
    const long long eightd = 8 * static_cast<long long>(d);
    double sum = 0.0;
    for (std::uint64_t n = lo; n <= hi; n += 2) {
        const int chi = kronecker(eightd, n);
        if (chi == 0) continue;
        sum += coeffs.lambda[n] * chi * phi(static_cast<double>(n) / Y);
    }
    return sum;
}

ExperimentPoint mean_square(double X, double Y, const SmoothWindow& phi, const SmoothWindow& psi,
                            const EigenformCoefficients& coeffs, const FactorTables& tables,
                            SumMethod method, int workers) {
    if (workers < 1) throw std::invalid_argument("mean_square: workers must be >= 1");
    if (psi.b * X > static_cast<double>(tables.limit))
        throw std::out_of_range("mean_square: factor tables too short for Psi support * X");
    const auto [nlo, nhi] = phi_range(Y, phi);
    if (nhi > coeffs.limit || nhi > tables.limit)
        throw std::out_of_range("mean_square: tables too short for Phi support * Y");

    const auto t_start = std::chrono::steady_clock::now();

    // contributing odd square-free d, ascending
    std::vector<std::uint64_t> ds;
    {
        std::uint64_t dlo = static_cast<std::uint64_t>(std::floor(psi.a * X)) + 1;
        std::uint64_t dhi = static_cast<std::uint64_t>(std::ceil(psi.b * X));
        if (dhi > 0) --dhi;
        if (dlo < 1) dlo = 1;
        if (dlo % 2 == 0) ++dlo;
        for (std::uint64_t d = dlo; d <= dhi; d += 2)
            if (tables.mobius[d] != 0 && psi(static_cast<double>(d) / X) > 0.0) ds.push_back(d);
    }

    // shared read-only data for the sieved path
    std::vector<double> lam_phi(nhi + 1, 0.0);  // lambda(n) * Phi(n/Y) at odd n in window
    for (std::uint64_t n = nlo; n <= nhi; n += 2)
        lam_phi[n] = coeffs.lambda[n] * phi(static_cast<double>(n) / Y);
    std::vector<std::uint32_t> odd_primes;
    std::vector<std::vector<std::int8_t>> legendre;  // legendre[i][r] = (r / p_i)
    if (method == SumMethod::sieved) {
        for (std::uint64_t p = 3; p <= nhi; p += 2) {
            if (tables.spf[p] != p) continue;
            odd_primes.push_back(static_cast<std::uint32_t>(p));
            std::vector<std::int8_t> tab(p);
            for (std::uint64_t r = 0; r < p; ++r)
                tab[r] = static_cast<std::int8_t>(kronecker(static_cast<long long>(r), p));
            legendre.push_back(std::move(tab));
        }
    }

    constexpr std::size_t block = 512;
    const std::size_t nblocks = (ds.size() + block - 1) / block;
    std::vector<double> block_sums(nblocks, 0.0);
    std::atomic<std::size_t> next_block{0};

    auto run_naive = [&](std::size_t bi) {
        Kahan acc;
        const std::size_t end = std::min(ds.size(), (bi + 1) * block);
        for (std::size_t i = bi * block; i < end; ++i) {
            const std::uint64_t d = ds[i];
            const double v = inner_sum(d, Y, phi, coeffs, tables);
            acc.add(v * v * psi(static_cast<double>(d) / X));
        }
        block_sums[bi] = acc.sum;
    };

    auto run_sieved = [&](std::size_t bi, std::vector<std::int8_t>& chi) {
        Kahan acc;
        const std::size_t end = std::min(ds.size(), (bi + 1) * block);
        for (std::size_t i = bi * block; i < end; ++i) {
            const std::uint64_t d = ds[i];
            // chi_{8d} at odd primes from the residue tables, then along spf chains
            chi[1] = 1;
            for (std::size_t pi = 0; pi < odd_primes.size(); ++pi) {
                const std::uint32_t p = odd_primes[pi];
                chi[p] = (d % p == 0) ? std::int8_t{0} : legendre[pi][(8 * d) % p];
            }
            for (std::uint64_t n = 9; n <= nhi; n += 2) {
                const std::uint32_t p = tables.spf[n];
                if (p != n) chi[n] = static_cast<std::int8_t>(chi[p] * chi[n / p]);
            }
            double v = 0.0;
            for (std::uint64_t n = nlo; n <= nhi; n += 2) v += lam_phi[n] * chi[n];
            acc.add(v * v * psi(static_cast<double>(d) / X));
        }
        block_sums[bi] = acc.sum;
    };

    auto worker_fn = [&] {
        std::vector<std::int8_t> chi;
        if (method == SumMethod::sieved) chi.assign(nhi + 1, 0);
        for (;;) {
            const std::size_t bi = next_block.fetch_add(1);
            if (bi >= nblocks) break;
            if (method == SumMethod::sieved)
                run_sieved(bi, chi);
            else
                run_naive(bi);
        }
    };

    if (workers == 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
        for (auto& th : pool) th.join();
    }

    Kahan total;
    for (double bs : block_sums) total.add(bs);

    ExperimentPoint pt;
    pt.X = X;
    pt.Y = Y;
    pt.value_S = total.sum;
    pt.n_d_terms = ds.size();
    pt.method = method;
    pt.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return pt;
}

}  // namespace qtwist
