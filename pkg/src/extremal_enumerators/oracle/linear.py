"""
Independent re-derivation of the extremal enumerator through a dense rational linear system.

Nothing here shares the triangular shortcut of the solver in `gleason`: basis elements are built by
direct powering and the system is solved by generic elimination.
"""
from dataclasses import dataclass
from fractions import Fraction
import logging

from extremal_enumerators.gleason import CodeType, ExtremalEnumerator, check_admissible
from extremal_enumerators.polyarith import StepPoly, poly_add_scaled, poly_mul, poly_pow

logger = logging.getLogger(__name__)

ROUTINE_MAX_LENGTH = 120


class OracleException(ArithmeticError):
    def __init__(self, message, code: int | None = None) -> None:
        if code is not None:
            message = f"{message} (index: {code})"
        super().__init__(message)


class SingularSystemError(OracleException):
    pass


class NonIntegralSolutionError(OracleException):
    pass


def _exact(value) -> Fraction:
    # StepPoly entries are mpz; Fraction only takes Python numbers
    return value if isinstance(value, Fraction) else Fraction(int(value))


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        size = len(self.rhs)
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise ValueError(f"System must be square and match the right-hand side of length {size}")
        object.__setattr__(self, "matrix", tuple(tuple(_exact(e) for e in row) for row in self.matrix))
        object.__setattr__(self, "rhs", tuple(_exact(e) for e in self.rhs))

    @property
    def size(self) -> int:
        return len(self.rhs)


def basis_element(code_type: CodeType, n: int, i: int) -> StepPoly:
    """f^(j - R i) * g^i by direct powering."""
    params = check_admissible(code_type, n)
    j = n // params.S
    return poly_mul(poly_pow(params.f, j - params.R * i), poly_pow(params.g, i))


def build_system(code_type: CodeType, n: int) -> LinearSystem:
    """Row k fixes slot k of sum_i a_i B_i: 1 for k = 0, 0 for k = 1..m."""
    params = check_admissible(code_type, n)
    m = n // params.basis_degree_step
    basis = [basis_element(code_type, n, i) for i in range(m + 1)]
    matrix = tuple(tuple(b.coeffs[k] for b in basis) for k in range(m + 1))
    rhs = (1,) + (0,) * m
    return LinearSystem(matrix, rhs)


def solve(system: LinearSystem) -> tuple[Fraction, ...]:
    """Bareiss fraction-free elimination with first-nonzero pivoting, then back substitution."""
    size = system.size
    rows = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    previous = Fraction(1)
    for k in range(size):
        pivot = next((p for p in range(k, size) if rows[p][k] != 0), None)
        if pivot is None:
            raise SingularSystemError("Matrix is singular", k)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
        for i in range(k + 1, size):
            for col in range(k + 1, size + 1):
                rows[i][col] = (rows[i][col] * rows[k][k] - rows[i][k] * rows[k][col]) / previous
            rows[i][k] = Fraction(0)
        previous = rows[k][k]

    x = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = rows[i][size] - sum((rows[i][col] * x[col] for col in range(i + 1, size)), Fraction(0))
        x[i] = acc / rows[i][i]
    return tuple(x)


def generic_solve(code_type: CodeType, n: int) -> ExtremalEnumerator:
    params = check_admissible(code_type, n)
    if n > ROUTINE_MAX_LENGTH:
        logger.info(
            "Oracle solve for %s n=%d exceeds the routine cap of %d", params.code_type.label, n, ROUTINE_MAX_LENGTH
        )
    j = n // params.S
    m = n // params.basis_degree_step
    solution = solve(build_system(code_type, n))
    for i, value in enumerate(solution):
        if value.denominator != 1:
            raise NonIntegralSolutionError(f"a_{i} = {value} is not an integer", i)
    a = tuple(int(value) for value in solution)

    total = StepPoly.zero(n, params.w)
    for i, a_i in enumerate(a):
        total = poly_add_scaled(total, a_i, basis_element(code_type, n, i))
    if total.coeffs[0] != 1 or any(total.coeffs[1 : m + 1]):
        raise OracleException(f"Assembled enumerator for {params.code_type.label} n={n} is not extremal")
    return ExtremalEnumerator(params.code_type, n, j, m, a, total)
