#pragma once

#include <complex>

#include "qtwist/quadrature.hpp"

namespace qtwist {

// C-infinity bump exp(-1/(x-a) - 1/(b-x)) on (a,b), zero elsewhere.
struct SmoothWindow {
    double a = 0.5;
    double b = 1.0;
    double mass = 0.0;  // integral over (0,inf)

    double operator()(double x) const;
    static SmoothWindow bump(double a, double b, const QuadratureSpec& q = {});
};

double window_eval(const SmoothWindow& w, double x);

// F~(xi) = int (cos(2 pi xi x) + sin(2 pi xi x)) W(x) dx, quarter-period panels.
double tilde_transform(const SmoothWindow& w, double xi, const QuadratureSpec& q = {});

// W_M(s) = int_0^inf x^{s-1} W(x) dx.
std::complex<double> mellin_transform(const SmoothWindow& w, std::complex<double> s,
                                      const QuadratureSpec& q = {});

enum class CsKind { cosine, sine };

// Mellin-Barnes route to int W(x) cos(2 pi x y) dx (resp. sin), via the
// vertical-line representation with Gamma(s) CS(sgn(y) pi s / 2) (2 pi |y|)^{-s}.
double cs_transform_via_mellin(const SmoothWindow& w, double y, CsKind kind, double line,
                               const QuadratureSpec& q = {});

// Lanczos approximation, valid off the non-positive real axis.
std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<double> gamma_complex(std::complex<double> z);

}  // namespace qtwist
