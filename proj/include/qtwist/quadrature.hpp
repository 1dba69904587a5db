#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtwist {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
};

// Raised when an integral/truncation cannot meet the requested tolerance.
struct AccuracyError : std::runtime_error {
    double achieved;
    explicit AccuracyError(const std::string& what, double got)
        : std::runtime_error(what + " (achieved " + std::to_string(got) + ")"), achieved(got) {}
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1,1].
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
auto gk15(F&& f, double a, double b, double& err) {
    using R = decltype(f(0.0));
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const R fc = f(c);
    R resk = gk_wk[7] * fc;
    R resg = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_nodes[i];
        const R fv = f(c - dx) + f(c + dx);
        resk += gk_wk[i] * fv;
        if (i % 2 == 1) resg += gk_wg[i / 2] * fv;
    }
    resk *= h;
    resg *= h;
    err = std::abs(resk - resg);
    return resk;
}

}  // namespace detail

// Adaptive bisection with GK15 panels.  Works for double and complex<double>
// integrands.  Throws AccuracyError if the budget is exhausted.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& q = {}) {
    using R = decltype(f(0.0));
    struct Seg { double a, b, err; R val; };
    double e0;
    R v0 = detail::gk15(f, a, b, e0);
    std::vector<Seg> segs{{a, b, e0, v0}};
    int splits = 0;
    for (;;) {
        double toterr = 0;
        R total{};
        std::size_t worst = 0;
        double worst_err = -1;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            toterr += segs[i].err;
            total += segs[i].val;
            if (segs[i].err > worst_err) { worst_err = segs[i].err; worst = i; }
        }
        const double target = std::max(q.abs_tol, q.rel_tol * std::abs(total));
        if (toterr <= target) return total;
        if (++splits > q.max_subdivisions)
            throw AccuracyError("integrate: subdivision budget exhausted", toterr);
        const Seg s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        double e1, e2;
        R v1 = detail::gk15(f, s.a, m, e1);
        R v2 = detail::gk15(f, m, s.b, e2);
        segs[worst] = {s.a, m, e1, v1};
        segs.push_back({m, s.b, e2, v2});
    }
}

}  // namespace qtwist
