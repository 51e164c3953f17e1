from dataclasses import dataclass
import logging

from gmpy2 import comb, mpz

logger = logging.getLogger(__name__)


class StepPolyException(Exception):
    def __init__(self, message, code: int | None = None) -> None:
        if code is not None:
            message = f"{message} (slot: {code})"
        super().__init__(message)


class StepMismatchError(StepPolyException):
    pass


class DegreeMismatchError(StepPolyException):
    pass


class InexactDivisionError(StepPolyException):
    pass


@dataclass(frozen=True)
class StepPoly:
    """Homogeneous polynomial in X, Y of total degree `degree` whose Y-exponents are multiples of `step`.

    Slot k of `coeffs` holds the coefficient of X^(degree - step*k) Y^(step*k) as an `mpz`. Trailing zeros are
    kept, so len(coeffs) == degree // step + 1 always.
    """

    degree: int
    step: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise StepPolyException(f"Degree must be nonnegative, got {self.degree}")
        if self.step < 1:
            raise StepPolyException(f"Step must be positive, got {self.step}")
        coeffs = tuple(mpz(c) for c in self.coeffs)
        if len(coeffs) != self.degree // self.step + 1:
            raise StepPolyException(
                f"Degree {self.degree} with step {self.step} needs {self.degree // self.step + 1} slots, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree: int, step: int) -> "StepPoly":
        return cls(degree, step, (0,) * (degree // step + 1))

    @classmethod
    def one(cls, step: int) -> "StepPoly":
        return cls(0, step, (1,))

    @classmethod
    def monomial(cls, x_exp: int, y_slot: int, step: int, coeff: int = 1) -> "StepPoly":
        """coeff * X^x_exp * Y^(step*y_slot)."""
        degree = x_exp + step * y_slot
        coeffs = [0] * (degree // step + 1)
        coeffs[y_slot] = coeff
        return cls(degree, step, tuple(coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, slot: int) -> int:
        return self.coeffs[slot]

    @property
    def top_slot(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def leading_slot(self) -> int | None:
        """Index of the first nonzero slot, None for the zero polynomial."""
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def weight(self, slot: int) -> int:
        return self.step * slot


def _check_step(p: StepPoly, r: StepPoly) -> None:
    if p.step != r.step:
        raise StepMismatchError(f"Step mismatch: {p.step} != {r.step}")


def poly_mul(p: StepPoly, r: StepPoly) -> StepPoly:
    """Schoolbook convolution of two step polynomials."""
    _check_step(p, r)
    degree = p.degree + r.degree
    out = [mpz(0)] * (degree // p.step + 1)
    rc = r.coeffs
    for k, a in enumerate(p.coeffs):
        if not a:
            continue
        for t, b in enumerate(rc):
            if b:
                out[k + t] += a * b
    return StepPoly(degree, p.step, tuple(out))


def poly_pow(p: StepPoly, e: int) -> StepPoly:
    if e < 0:
        raise ValueError(f"Exponent must be nonnegative, got {e}")
    if e == 0:
        return StepPoly.one(p.step)
    result = p
    for _ in range(e - 1):
        result = poly_mul(result, p)
    return result


def poly_add_scaled(p: StepPoly, c: int, r: StepPoly) -> StepPoly:
    """Slotwise p + c*r."""
    _check_step(p, r)
    if p.degree != r.degree:
        raise DegreeMismatchError(f"Degree mismatch: {p.degree} != {r.degree}")
    if not c:
        return p
    return StepPoly(p.degree, p.step, tuple(a + c * b for a, b in zip(p.coeffs, r.coeffs)))


def poly_scale(p: StepPoly, c: int) -> StepPoly:
    return StepPoly(p.degree, p.step, tuple(c * a for a in p.coeffs))


def poly_divexact(num: StepPoly, den: StepPoly) -> StepPoly:
    """Exact quotient num / den. Raises InexactDivisionError on any remainder."""
    _check_step(num, den)
    if den.degree > num.degree:
        raise DegreeMismatchError(f"Divisor degree {den.degree} exceeds dividend degree {num.degree}")
    d = den.coeffs
    if not d[0]:
        raise InexactDivisionError("Divisor must have a nonzero slot 0")
    q_degree = num.degree - den.degree
    nq = q_degree // num.step + 1
    q: list[int] = []
    for k in range(nq):
        acc = num.coeffs[k]
        for t in range(1, min(k, len(d) - 1) + 1):
            acc -= d[t] * q[k - t]
        quot, rem = divmod(acc, d[0])
        if rem:
            raise InexactDivisionError("Non-integral quotient", k)
        q.append(quot)
    for k in range(nq, len(num.coeffs)):
        acc = num.coeffs[k]
        for t in range(k - nq + 1, min(k, len(d) - 1) + 1):
            acc -= d[t] * q[k - t]
        if acc:
            raise InexactDivisionError("Nonzero remainder", k)
    return StepPoly(q_degree, num.step, tuple(q))


def densify(p: StepPoly) -> StepPoly:
    """Re-index onto the step-1 lattice."""
    if p.step == 1:
        return p
    out = [0] * (p.degree + 1)
    for k, c in enumerate(p.coeffs):
        out[p.step * k] = c
    return StepPoly(p.degree, 1, tuple(out))


def swap_xy(p: StepPoly) -> StepPoly:
    """P(Y, X) as a dense polynomial."""
    return StepPoly(p.degree, 1, tuple(reversed(densify(p).coeffs)))


def macwilliams_transform(p: StepPoly, q: int) -> StepPoly:
    """P(X + (q-1)Y, X - Y), expanded monomial by monomial. O(n^3) in the degree."""
    if p.step != 1:
        raise StepMismatchError(f"MacWilliams transform needs a step-1 polynomial, got step {p.step}")
    if p.degree % 2:
        raise DegreeMismatchError(f"MacWilliams transform needs an even degree, got {p.degree}")
    if q < 2:
        raise ValueError(f"Field size must be at least 2, got {q}")
    n = p.degree
    out = [0] * (n + 1)
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        # (X + (q-1)Y)^(n-j) * (X - Y)^j
        left = [comb(n - j, s) * (q - 1) ** s for s in range(n - j + 1)]
        right = [comb(j, t) * (-1) ** t for t in range(j + 1)]
        for s, a in enumerate(left):
            ca = c * a
            for t, b in enumerate(right):
                out[s + t] += ca * b
    logger.debug("MacWilliams transform of degree %d over q=%d", n, q)
    return StepPoly(n, 1, tuple(out))


def eval_at_ones(p: StepPoly) -> int:
    return sum(p.coeffs)
