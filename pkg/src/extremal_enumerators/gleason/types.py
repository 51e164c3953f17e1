"""Self-dual code types and their Gleason invariant-ring data."""
from dataclasses import dataclass
from enum import StrEnum
from functools import cache

from extremal_enumerators.polyarith import StepPoly, densify, poly_mul, poly_pow, swap_xy


class CodeType(StrEnum):
    """Self-dual code families"""
    I = "i"         # F2, weights divisible by 2
    II = "ii"       # F2, weights divisible by 4
    III = "iii"     # F3, weights divisible by 3
    IV = "iv"       # F4, weights divisible by 2

    @classmethod
    def from_tag(cls, tag: str) -> "CodeType":
        key = tag.strip().lower()
        arabic = {"1": cls.I, "2": cls.II, "3": cls.III, "4": cls.IV}
        if key in arabic:
            return arabic[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"Unknown code type: {tag!r}") from None

    @property
    def label(self) -> str:
        return f"Type {self.name}"


class InadmissibleLengthError(ValueError):
    def __init__(self, code_type: CodeType, n: int, rule: str) -> None:
        self.code_type = code_type
        self.n = n
        self.rule = rule
        super().__init__(f"{code_type.label}: n must satisfy {rule} (got n={n})")


@dataclass(frozen=True)
class TypeParams:
    code_type: CodeType
    q: int
    w: int
    R: int
    S: int
    f: StepPoly
    g: StepPoly
    length_modulus: int
    modulus_rule: str

    @property
    def symmetric(self) -> bool:
        """Whether f and g are both invariant under X <-> Y."""
        return swap_xy(self.f) == densify(self.f) and swap_xy(self.g) == densify(self.g)

    @property
    def basis_degree_step(self) -> int:
        """Degree of g, the length covered by one basis index."""
        return self.R * self.S


def _difference_power(step: int, e: int) -> StepPoly:
    """(X^step - Y^step)^e on the step lattice."""
    return poly_pow(StepPoly(step, step, (1, -1)), e)


def _build(code_type: CodeType) -> TypeParams:
    match code_type:
        case CodeType.I:
            # f = X^2 + Y^2, g = X^2 Y^2 (X^2 - Y^2)^2
            f = StepPoly(2, 2, (1, 1))
            g = poly_mul(StepPoly.monomial(2, 1, 2), _difference_power(2, 2))
            return TypeParams(code_type, 2, 2, 4, 2, f, g, 2, "n even")
        case CodeType.II:
            # f = X^8 + 14 X^4 Y^4 + Y^8, g = X^4 Y^4 (X^4 - Y^4)^4
            f = StepPoly(8, 4, (1, 14, 1))
            g = poly_mul(StepPoly.monomial(4, 1, 4), _difference_power(4, 4))
            return TypeParams(code_type, 2, 4, 3, 8, f, g, 8, "8|n")
        case CodeType.III:
            # f = X^4 + 8 X Y^3, g = Y^3 (X^3 - Y^3)^3
            f = StepPoly(4, 3, (1, 8))
            g = poly_mul(StepPoly.monomial(0, 1, 3), _difference_power(3, 3))
            return TypeParams(code_type, 3, 3, 3, 4, f, g, 4, "4|n")
        case CodeType.IV:
            # f = X^2 + 3 Y^2, g = Y^2 (X^2 - Y^2)^2
            f = StepPoly(2, 2, (1, 3))
            g = poly_mul(StepPoly.monomial(0, 1, 2), _difference_power(2, 2))
            return TypeParams(code_type, 4, 2, 3, 2, f, g, 2, "n even")
    raise ValueError(f"Unknown code type: {code_type!r}")


@cache
def type_params(code_type: CodeType) -> TypeParams:
    return _build(CodeType(code_type))


def admissible(code_type: CodeType, n: int) -> bool:
    params = type_params(code_type)
    return n >= 1 and n % params.length_modulus == 0 and n % params.S == 0


def check_admissible(code_type: CodeType, n: int) -> TypeParams:
    params = type_params(code_type)
    if n < 1:
        raise InadmissibleLengthError(params.code_type, n, "n >= 1")
    if not admissible(code_type, n):
        raise InadmissibleLengthError(params.code_type, n, params.modulus_rule)
    return params


def extremal_minimum_weight(code_type: CodeType, n: int) -> int:
    """w * ([n / RS] + 1), the Mallows-Sloane bound for the type."""
    params = check_admissible(code_type, n)
    return params.w * (n // params.basis_degree_step + 1)
