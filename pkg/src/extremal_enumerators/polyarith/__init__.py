"""
Exact polynomial arithmetic package.

Homogeneous bivariate integer polynomials whose Y-exponents lie on a step lattice,
stored as dense coefficient vectors of Python integers.

Classes:
- StepPoly: immutable dense step polynomial.
- StepPolyException: base error for malformed operands.
"""

from .lib import (
    DegreeMismatchError,
    InexactDivisionError,
    StepMismatchError,
    StepPoly,
    StepPolyException,
    densify,
    eval_at_ones,
    macwilliams_transform,
    poly_add_scaled,
    poly_divexact,
    poly_mul,
    poly_pow,
    poly_scale,
    swap_xy,
)

__all__ = [
    "StepPoly",
    "StepPolyException",
    "StepMismatchError",
    "DegreeMismatchError",
    "InexactDivisionError",
    "poly_mul",
    "poly_pow",
    "poly_add_scaled",
    "poly_scale",
    "poly_divexact",
    "densify",
    "swap_xy",
    "macwilliams_transform",
    "eval_at_ones",
]
