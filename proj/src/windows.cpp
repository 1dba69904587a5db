#include "qtwist/windows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtwist {

namespace {

constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        // reflection; exp() consumers are insensitive to the log branch
        return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

std::complex<double> gamma_complex(std::complex<double> z) {
    return std::exp(lgamma_complex(z));
}

double SmoothWindow::operator()(double x) const {
    if (x <= a || x >= b) return 0.0;
    return std::exp(-1.0 / (x - a) - 1.0 / (b - x));
}

SmoothWindow SmoothWindow::bump(double a, double b, const QuadratureSpec& q) {
    if (!(0.0 < a && a < b))
        throw std::invalid_argument("SmoothWindow::bump: need 0 < a < b");
    SmoothWindow w;
    w.a = a;
    w.b = b;
    w.mass = integrate([&w](double x) { return w(x); }, a, b, q);
    return w;
}

double window_eval(const SmoothWindow& w, double x) { return w(x); }

double tilde_transform(const SmoothWindow& w, double xi, const QuadratureSpec& q) {
    const double twopi = 2.0 * std::numbers::pi;
    auto f = [&](double x) {
        const double t = twopi * xi * x;
        return (std::cos(t) + std::sin(t)) * w(x);
    };
    const double axi = std::abs(xi);
    if (axi <= 2.0) return integrate(f, w.a, w.b, q);

    // split at quarter-periods so each panel sees at most a quarter oscillation
    const double quarter = 1.0 / (4.0 * axi);
    const int npanels = static_cast<int>(std::ceil((w.b - w.a) / quarter));
    QuadratureSpec pq = q;
    pq.abs_tol = q.abs_tol / npanels;
    double total = 0.0;
    double x0 = w.a;
    for (int i = 0; i < npanels; ++i) {
        const double x1 = (i + 1 == npanels) ? w.b : w.a + (i + 1) * quarter;
        total += integrate(f, x0, x1, pq);
        x0 = x1;
    }
    return total;
}

std::complex<double> mellin_transform(const SmoothWindow& w, std::complex<double> s,
                                      const QuadratureSpec& q) {
    auto f = [&](double x) -> std::complex<double> {
        const double wx = w(x);
        if (wx == 0.0) return 0.0;
        return std::exp((s - 1.0) * std::log(x)) * wx;
    };
    const double t = std::abs(s.imag());
    if (t <= 4.0) return integrate(f, w.a, w.b, q);

    // oscillation in log x with frequency Im(s); quarter-period panels
    const double step = std::numbers::pi / (2.0 * t);
    std::vector<double> cuts{w.a};
    for (double lx = std::log(w.a) + step; std::exp(lx) < w.b; lx += step)
        cuts.push_back(std::exp(lx));
    cuts.push_back(w.b);
    QuadratureSpec pq = q;
    pq.abs_tol = q.abs_tol / static_cast<double>(cuts.size());
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(f, cuts[i], cuts[i + 1], pq);
    return total;
}

double cs_transform_via_mellin(const SmoothWindow& w, double y, CsKind kind, double line,
                               const QuadratureSpec& q) {
    if (y == 0.0) throw std::domain_error("cs_transform_via_mellin: y must be nonzero");
    if (!(0.0 < line && line < 1.0))
        throw std::domain_error("cs_transform_via_mellin: line must lie in (0,1)");

    const double pi = std::numbers::pi;
    const double sgn = (y > 0) ? 1.0 : -1.0;
    const double ay2pi = 2.0 * pi * std::abs(y);

    auto integrand = [&](double t) -> double {
        const std::complex<double> s(line, t);
        const std::complex<double> wm = mellin_transform(w, 1.0 - s, q);
        const std::complex<double> arg = sgn * pi * s * 0.5;
        const std::complex<double> cs = (kind == CsKind::cosine) ? std::cos(arg) : std::sin(arg);
        const std::complex<double> val =
            wm * gamma_complex(s) * cs * std::exp(-s * std::log(ay2pi));
        return val.real();
    };

    // truncation height from the |s|^{sigma-1/2} envelope times the Mellin decay;
    // the integrand tail integrates to roughly envelope * sqrt(T) for the
    // sub-exponential bump decay, so that is the quantity tested
    const double fudge = 10.0;
    const double trunc_tol = std::max(q.abs_tol * 100.0, 1e-10);
    double T = 8.0;
    for (;;) {
        const std::complex<double> s(line, T);
        const double env = std::abs(mellin_transform(w, 1.0 - s, q)) * fudge *
                           std::pow(std::abs(s), line - 0.5) * std::pow(ay2pi, -line);
        if (env * std::sqrt(T) < trunc_tol) break;
        T *= 1.5;
        if (T > 400.0)
            throw AccuracyError("cs_transform_via_mellin: truncation height exceeded", env);
    }

    QuadratureSpec oq = q;
    oq.abs_tol = std::max(q.abs_tol * 0.1, 1e-14);
    const double half = integrate(integrand, 0.0, T, oq);
    return half / pi;  // (1/2pi) * 2 Re int_0^T, by conjugate symmetry
}

}  // namespace qtwist
