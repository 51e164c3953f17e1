"""
Oracle for the extremal enumerator solver: dense rational system, generic exact elimination.

Classes:
- LinearSystem: square system of Fraction entries.
- SingularSystemError: elimination found no pivot.
- NonIntegralSolutionError: a solved basis coefficient is not an integer.
"""

from .linear import (
    ROUTINE_MAX_LENGTH,
    LinearSystem,
    NonIntegralSolutionError,
    OracleException,
    SingularSystemError,
    basis_element,
    build_system,
    generic_solve,
    solve,
)

__all__ = [
    "ROUTINE_MAX_LENGTH",
    "LinearSystem",
    "OracleException",
    "SingularSystemError",
    "NonIntegralSolutionError",
    "basis_element",
    "build_system",
    "solve",
    "generic_solve",
]
