"""Riemann-Roch bases on imaginary hyperelliptic curves and the Goppa codes they give."""
from .agcode import LinearCode, generator_matrix, min_distance, parity_check
from .curve import OMEGA, Curve, Point, curve_make, enumerate_points, fit_curve
from .funcfield import Divisor, FuncElem, denominator_support_check, ff_eval, valuation
from .gfield import FieldCtx, FieldElement, field_make
from .gpoly import Matrix, Poly, linsolve
from .rrbasis import dim_oracle, kappa_interpolate, psi_build, rr_basis, rr_dim

__all__ = [
    "Curve", "Divisor", "FieldCtx", "FieldElement", "FuncElem", "LinearCode", "Matrix",
    "OMEGA", "Point", "Poly", "curve_make", "denominator_support_check", "dim_oracle",
    "enumerate_points", "ff_eval", "field_make", "fit_curve", "generator_matrix",
    "kappa_interpolate", "linsolve", "min_distance", "parity_check", "psi_build",
    "rr_basis", "rr_dim", "valuation",
]
