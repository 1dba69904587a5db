"""Mean squares of quadratic twists of modular-form Fourier coefficients.

Thin Python layer over the C++ core: factor tables, the weight-12 eigenform
coefficients, Gauss-type sums, smooth windows with their transforms, the
character mean square, and the two independent routes to the leading constant.
"""

from ._qtwist import (
    AccuracyError,
    EigenformCoefficients,
    FactorTables,
    LSeries,
    SmoothWindow,
    build_factor_tables,
    c0_contour,
    diagonal_constant,
    extrapolate_diagonal,
    gauss_closed,
    gauss_direct,
    inner_sum,
    kronecker,
    lambda_at_squares,
    lambda_table,
    mean_square,
    mellin_transform,
    poisson_check,
    tilde_transform,
    zeta,
)

__all__ = [
    "AccuracyError",
    "EigenformCoefficients",
    "FactorTables",
    "LSeries",
    "SmoothWindow",
    "build_factor_tables",
    "c0_contour",
    "diagonal_constant",
    "extrapolate_diagonal",
    "gauss_closed",
    "gauss_direct",
    "inner_sum",
    "kronecker",
    "lambda_at_squares",
    "lambda_table",
    "mean_square",
    "mellin_transform",
    "poisson_check",
    "tilde_transform",
    "zeta",
]
