#include "qtwist/lfunctions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtwist/windows.hpp"

namespace qtwist {

namespace {

// B_{2k} for k = 1..15
constexpr double bernoulli2k[15] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
    854513.0 / 138.0, -236364091.0 / 2730.0, 8553103.0 / 6.0, -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// lambda_f(p^e) sequence via the Hecke recursion, seeded by lambda(p)
double lambda_prime_power(double lp, int e) {
    double lm1 = 1.0, l0 = lp;
    if (e == 0) return 1.0;
    for (int j = 1; j < e; ++j) {
        const double l1 = lp * l0 - lm1;
        lm1 = l0;
        l0 = l1;
    }
    return l0;
}

}  // namespace

std::complex<double> zeta_eval(std::complex<double> s) {
    if (s == std::complex<double>(1.0, 0.0))
        throw std::domain_error("zeta_eval: pole at s = 1");

    constexpr int K = 12;
    const int N = std::max<int>(16, static_cast<int>(std::ceil(0.3 * std::abs(s))) + 12);

    std::complex<double> sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(N));
    sum += 0.5 * std::exp(-s * logN);
    sum += std::exp((1.0 - s) * logN) / (s - 1.0);

    // Euler-Maclaurin correction terms
    std::complex<double> rising = s;  // s(s+1)...(s+2k-2)
    for (int k = 1; k <= K; ++k) {
        sum += bernoulli2k[k - 1] / factorial(2 * k) * rising *
               std::exp(-(s + static_cast<double>(2 * k - 1)) * logN);
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    }
    return sum;
}

LSeriesAccessor::LSeriesAccessor(const EigenformCoefficients& coeffs, std::size_t nterms)
    : coeffs_(&coeffs) {
    if (coeffs.limit < nterms)
        throw std::invalid_argument("LSeriesAccessor: coefficient table shorter than nterms");

    // b = (indicator of squares) * lambda_f(.^2), multiplicative
    b_.assign(nterms + 1, 0.0);
    log_n_.assign(nterms + 1, 0.0);
    std::vector<std::uint32_t> spf(nterms + 1, 0);
    for (std::uint64_t i = 2; i <= nterms; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= nterms; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    b_[1] = 1.0;
    for (std::uint64_t n = 2; n <= nterms; ++n) {
        log_n_[n] = std::log(static_cast<double>(n));
        const std::uint64_t p = spf[n];
        std::uint64_t m = n;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        const double lp = coeffs.lambda[p];
        double bpe = 0.0;
        for (int j = e % 2; j <= e; j += 2) bpe += lambda_prime_power(lp, 2 * j);
        b_[n] = b_[m] * bpe;
    }
}

std::complex<double> LSeriesAccessor::log_gamma_factor(std::complex<double> s) const {
    const double kappa = coeffs_->weight;
    return -1.5 * s * std::log(std::numbers::pi) + lgamma_complex(0.5 * (s + 1.0)) +
           lgamma_complex(0.5 * (s + kappa - 1.0)) + lgamma_complex(0.5 * (s + kappa));
}

// S(z) = sum_n b(n) n^{-z} (1/2pi) int gamma(z+w) g(w) n^{-w} / w dt', w = c+it',
// with Gaussian weight g(w) = exp(w^2/(4 theta)).  Lambda(s) = S(s) + S(1-s).
std::complex<double> LSeriesAccessor::half_sum(std::complex<double> z, double theta) const {
    const double c = std::max(0.5, 1.2 - z.real()) + 3.0;
    // |gamma(z+w) g(w)| peaks near t' = -3 pi theta / 2 (gamma growth toward the
    // real axis against the Gaussian); the window must cover the peak plus its
    // Gaussian decay, not just the decay from t' = 0
    const double peak = 1.5 * std::numbers::pi * theta;
    const double T2 = peak + std::sqrt(4.0 * theta * 34.0 + c * c) + 1.0;
    const double ht = 0.25;
    const int nnodes = 2 * static_cast<int>(std::ceil(T2 / ht)) + 1;
    const double t0 = -ht * ((nnodes - 1) / 2);

    // per-node weights A_j = (ht/2pi) gamma(z+w_j) g(w_j) / w_j
    std::vector<std::complex<double>> A(nnodes);
    double abs_A = 0.0;
    for (int j = 0; j < nnodes; ++j) {
        const std::complex<double> w(c, t0 + ht * j);
        const std::complex<double> lg = log_gamma_factor(z + w) + w * w / (4.0 * theta);
        A[j] = (ht / (2.0 * std::numbers::pi)) * std::exp(lg) / w;
        abs_A += std::abs(A[j]);
    }

    std::complex<double> total = 0.0;
    const std::size_t nmax = b_.size() - 1;
    double env_max = 0.0;
    int quiet = 0;
    for (std::size_t n = 1; n <= nmax; ++n) {
        if (b_[n] == 0.0) continue;
        const double ln = log_n_[n];
        // inner sum over nodes via a multiplicative phase recurrence
        const std::complex<double> step = std::exp(std::complex<double>(0.0, -ht * ln));
        std::complex<double> phase = std::exp(std::complex<double>(0.0, -t0 * ln));
        std::complex<double> inner = 0.0;
        for (int j = 0; j < nnodes; ++j) {
            inner += A[j] * phase;
            phase *= step;
        }
        const std::complex<double> term = b_[n] * std::exp(-(z + c) * ln) * inner;
        total += term;
        // cut the coefficient sum once the term envelope is below roundoff
        // relative to the largest term; a test against |total| would never
        // trigger when the sum cancels heavily at large |Im z|
        const double env = std::abs(b_[n]) * std::exp(-(z.real() + c) * ln) * abs_A;
        env_max = std::max(env_max, env);
        if (env < 1e-15 * env_max) {
            if (++quiet > 32) return total;
        } else {
            quiet = 0;
        }
    }
    return total;
}

std::complex<double> LSeriesAccessor::completed(std::complex<double> s) const {
    const double t = std::abs(s.imag());
    // Gaussian width small enough to crush the gamma-factor peak at t' = -t
    const double theta = std::max(0.8, std::min(16.0, t * t / (3.0 * std::numbers::pi * t + 130.0)));
    return half_sum(s, theta) + half_sum(1.0 - s, theta);
}

std::complex<double> LSeriesAccessor::L(std::complex<double> s) const {
    if (s.real() >= 3.0) {
        std::complex<double> sum = 0.0;
        for (std::size_t n = b_.size() - 1; n >= 1; --n) {
            if (b_[n] == 0.0) continue;
            sum += b_[n] * std::exp(-s * log_n_[n]);
        }
        return sum;
    }
    return completed(s) * std::exp(-log_gamma_factor(s));
}

double LSeriesAccessor::L1() const {
    if (!L1_ready_) {
        L1_ = L(std::complex<double>(1.0, 0.0)).real();
        L1_ready_ = true;
    }
    return L1_;
}

}  // namespace qtwist
