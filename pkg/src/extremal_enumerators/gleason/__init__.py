"""
Gleason invariant-ring data and the extremal weight enumerator solver.

Classes:
- CodeType: Enum for the four self-dual code types.
- TypeParams: field size, weight divisor, R, S and the generators f, g of one type.
- ExtremalEnumerator: solved basis coefficients and weight-indexed coefficients.
- InadmissibleLengthError: length rejected by the type's modulus rule.
- GleasonConstructionError: generator encoding or solver bookkeeping broke.
"""

from .enumerator import ExtremalEnumerator, GleasonConstructionError, check_defining_property, extremal_enumerator
from .types import (
    CodeType,
    InadmissibleLengthError,
    TypeParams,
    admissible,
    check_admissible,
    extremal_minimum_weight,
    type_params,
)

__all__ = [
    "CodeType",
    "TypeParams",
    "ExtremalEnumerator",
    "InadmissibleLengthError",
    "GleasonConstructionError",
    "type_params",
    "admissible",
    "check_admissible",
    "extremal_minimum_weight",
    "extremal_enumerator",
    "check_defining_property",
]
