from dataclasses import dataclass
from functools import lru_cache
import logging

from extremal_enumerators.gleason.types import CodeType, check_admissible, type_params
from extremal_enumerators.polyarith import StepPoly, poly_add_scaled, poly_divexact, poly_mul, poly_pow

logger = logging.getLogger(__name__)

ENUMERATOR_CACHE_SIZE = 512


class GleasonConstructionError(ArithmeticError):
    def __init__(self, message, code: int | None = None) -> None:
        if code is not None:
            message = f"{message} (basis index: {code})"
        super().__init__(message)


@dataclass(frozen=True)
class ExtremalEnumerator:
    """W* = sum_i a_i f^(j - R i) g^i, normalised to X^n + (terms of weight > w m)."""

    code_type: CodeType
    n: int
    j: int
    m: int
    a: tuple[int, ...]
    poly: StepPoly

    @property
    def w(self) -> int:
        return self.poly.step

    @property
    def top_slot(self) -> int:
        """K = floor(n / w), the slot of the highest power of Y on the lattice."""
        return self.poly.top_slot

    @property
    def minimum_weight(self) -> int:
        return self.w * (self.m + 1)

    @property
    def forced_zero_slots(self) -> frozenset[int]:
        """Slots that vanish by construction: 1..m, and their mirrors when the type is X <-> Y symmetric."""
        slots = set(range(1, self.m + 1))
        if type_params(self.code_type).symmetric:
            slots |= {self.top_slot - s for s in range(1, self.m + 1)}
        return frozenset(slots)

    def slot(self, k: int) -> int:
        return self.poly.coeffs[k]

    def coefficient(self, weight: int) -> int:
        """A*_weight; zero off the lattice."""
        if weight < 0 or weight > self.n or weight % self.w:
            return 0
        return self.poly.coeffs[weight // self.w]

    def nonzero_items(self) -> list[tuple[int, int]]:
        """(weight, coefficient) pairs for every nonzero coefficient, ascending weight."""
        return [(self.w * k, c) for k, c in enumerate(self.poly.coeffs) if c]


def check_defining_property(enumerator: ExtremalEnumerator) -> None:
    coeffs = enumerator.poly.coeffs
    if enumerator.poly.degree != enumerator.n:
        raise GleasonConstructionError(f"Enumerator has degree {enumerator.poly.degree}, expected {enumerator.n}")
    if coeffs[0] != 1:
        raise GleasonConstructionError(f"X^n coefficient is {coeffs[0]}, expected 1", 0)
    for k in range(1, enumerator.m + 1):
        if coeffs[k]:
            raise GleasonConstructionError(f"Slot {k} is {coeffs[k]}, expected 0", k)


@lru_cache(maxsize=ENUMERATOR_CACHE_SIZE)
def extremal_enumerator(code_type: CodeType, n: int) -> ExtremalEnumerator:
    """
    Solve for the extremal weight enumerator of length n.

    The basis element B_i = f^(j - R i) g^i has its first nonzero slot at i with coefficient +1, so the
    coefficients a_i follow from one triangular pass: a_i cancels slot i of the running sum. B_i is
    obtained from B_(i-1) as B_(i-1) * g / f^R, keeping only one basis element alive.
    """
    params = check_admissible(code_type, n)
    j = n // params.S
    m = j // params.R
    logger.debug("Solving %s n=%d (j=%d, m=%d)", params.code_type.label, n, j, m)

    basis = poly_pow(params.f, j)
    if basis.degree != n:
        raise GleasonConstructionError(f"f^{j} has degree {basis.degree}, expected {n}", 0)
    f_r = poly_pow(params.f, params.R)
    total = basis
    a = [1]
    for i in range(1, m + 1):
        basis = poly_divexact(poly_mul(basis, params.g), f_r)
        if basis.degree != n:
            raise GleasonConstructionError(f"Basis element has degree {basis.degree}, expected {n}", i)
        if basis.leading_slot != i or basis.coeffs[i] != 1:
            raise GleasonConstructionError(f"Diagonal entry is not a unit at slot {i}", i)
        a_i = -total.coeffs[i]
        total = poly_add_scaled(total, a_i, basis)
        a.append(a_i)

    enumerator = ExtremalEnumerator(params.code_type, n, j, m, tuple(a), total)
    check_defining_property(enumerator)
    logger.debug("Solved %s n=%d, top slot %d", params.code_type.label, n, enumerator.top_slot)
    return enumerator
