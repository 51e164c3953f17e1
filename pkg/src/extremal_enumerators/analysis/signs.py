from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import IntEnum, StrEnum
import logging
from typing import Callable

from extremal_enumerators.gleason import (
    CodeType,
    ExtremalEnumerator,
    admissible,
    check_admissible,
    extremal_enumerator,
    type_params,
)

logger = logging.getLogger(__name__)

EnumeratorSource = Callable[[CodeType, int], ExtremalEnumerator]

# Lengths are grouped as period * i + r when reporting exclusion thresholds
REPORTING_PERIODS = {CodeType.II: 24, CodeType.III: 24}


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value: int) -> "Sign":
        return cls((value > 0) - (value < 0))

    @property
    def tag(self) -> str:
        return {Sign.NEGATIVE: "neg", Sign.ZERO: "zero", Sign.POSITIVE: "pos"}[self]


class Reading(StrEnum):
    """Which coefficients count as the highest and next-to-highest power of Y.

    - LATTICE: slots K = floor(n / w) and K - 1.
    - WEIGHT: weights n and n - w, zero when off the lattice.
    """

    LATTICE = "lattice"
    WEIGHT = "weight"


@dataclass(frozen=True)
class SignReport:
    code_type: CodeType
    n: int
    m: int
    top_index: int
    highest: Sign
    next_to_highest: Sign
    third_nonzero: Sign | None
    first_negative_slot: int | None

    @property
    def all_nonnegative(self) -> bool:
        return self.first_negative_slot is None

    @property
    def minimum_weight(self) -> int:
        return type_params(self.code_type).w * (self.m + 1)

    @property
    def witness_weight(self) -> int | None:
        if self.first_negative_slot is None:
            return None
        return type_params(self.code_type).w * self.first_negative_slot


@dataclass(frozen=True)
class Verdict:
    code_type: CodeType
    n: int
    excluded: bool
    witness: tuple[int, int] | None  # (slot, coefficient)

    def __post_init__(self) -> None:
        if self.excluded != (self.witness is not None):
            raise ValueError("A verdict is excluded exactly when it carries a witness")
        if self.witness is not None and self.witness[1] >= 0:
            raise ValueError(f"Witness coefficient must be negative, got {self.witness[1]}")

    @property
    def witness_weight(self) -> int | None:
        if self.witness is None:
            return None
        return type_params(self.code_type).w * self.witness[0]


def _reading_signs(enumerator: ExtremalEnumerator, reading: Reading) -> tuple[Sign, Sign]:
    if Reading(reading) is Reading.WEIGHT:
        return (
            Sign.of(enumerator.coefficient(enumerator.n)),
            Sign.of(enumerator.coefficient(enumerator.n - enumerator.w)),
        )
    top = enumerator.top_slot
    return Sign.of(enumerator.slot(top)), Sign.of(enumerator.slot(top - 1))


def third_nonzero_slot(enumerator: ExtremalEnumerator) -> int | None:
    """Slot of A*_{w(m+2)}, None when it lies beyond the top slot."""
    slot = enumerator.m + 2
    return slot if slot <= enumerator.top_slot else None


def first_negative_slot(enumerator: ExtremalEnumerator) -> int | None:
    return next((k for k, c in enumerate(enumerator.poly.coeffs) if c < 0), None)


def report_from_enumerator(enumerator: ExtremalEnumerator, reading: Reading = Reading.LATTICE) -> SignReport:
    highest, next_to_highest = _reading_signs(enumerator, reading)
    third = third_nonzero_slot(enumerator)
    return SignReport(
        code_type=enumerator.code_type,
        n=enumerator.n,
        m=enumerator.m,
        top_index=enumerator.top_slot,
        highest=highest,
        next_to_highest=next_to_highest,
        third_nonzero=None if third is None else Sign.of(enumerator.slot(third)),
        first_negative_slot=first_negative_slot(enumerator),
    )


def verdict_from_enumerator(enumerator: ExtremalEnumerator) -> Verdict:
    slot = first_negative_slot(enumerator)
    witness = None if slot is None else (slot, enumerator.slot(slot))
    return Verdict(enumerator.code_type, enumerator.n, slot is not None, witness)


def strictly_positive(enumerator: ExtremalEnumerator) -> bool:
    """Every slot outside the forced zeros is positive and the forced zeros are exactly zero."""
    forced = enumerator.forced_zero_slots
    return all((c == 0) if k in forced else (c > 0) for k, c in enumerate(enumerator.poly.coeffs))


def sign_report(code_type: CodeType, n: int, reading: Reading = Reading.LATTICE) -> SignReport:
    check_admissible(code_type, n)
    return report_from_enumerator(extremal_enumerator(code_type, n), reading)


def classify(code_type: CodeType, n: int) -> Verdict:
    check_admissible(code_type, n)
    return verdict_from_enumerator(extremal_enumerator(code_type, n))


def admissible_lengths(code_type: CodeType, n_from: int, n_to: int) -> list[int]:
    return [n for n in range(max(n_from, 1), n_to + 1) if admissible(code_type, n)]


def _scan_one(item: tuple[EnumeratorSource, CodeType, int, Reading]) -> SignReport:
    source, code_type, n, reading = item
    return report_from_enumerator(source(code_type, n), reading)


def evaluate_lengths(
    fn: Callable, items: list, jobs: int = 1, progress: Callable[[object], None] | None = None
) -> list:
    """Map fn over items, in a process pool when jobs > 1; results keep the order of items."""
    results = []
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            for result in executor.map(fn, items):
                results.append(result)
                if progress is not None:
                    progress(result)
        return results
    for item in items:
        result = fn(item)
        results.append(result)
        if progress is not None:
            progress(result)
    return results


def scan(
    code_type: CodeType,
    n_from: int,
    n_to: int,
    jobs: int = 1,
    reading: Reading = Reading.LATTICE,
    source: EnumeratorSource = extremal_enumerator,
) -> list[SignReport]:
    """Sign reports for every admissible n in [n_from, n_to], ascending."""
    code_type = CodeType(code_type)
    lengths = admissible_lengths(code_type, n_from, n_to)
    logger.debug("Scanning %s over %d lengths with %d job(s)", code_type.label, len(lengths), jobs)
    return evaluate_lengths(_scan_one, [(source, code_type, n, reading) for n in lengths], jobs)


@dataclass(frozen=True)
class ExclusionFamily:
    """Lengths n = period * i + residue; every computed length from threshold_i on is excluded."""

    code_type: CodeType
    period: int
    residue: int
    checked_up_to: int
    threshold_i: int | None
    sporadic: tuple[int, ...]

    @property
    def threshold_n(self) -> int | None:
        if self.threshold_i is None:
            return None
        return self.period * self.threshold_i + self.residue

    @property
    def label(self) -> str:
        return f"{self.period}i+{self.residue}" if self.residue else f"{self.period}i"


def exclusion_thresholds(
    code_type: CodeType, n_cap: int, jobs: int = 1, source: EnumeratorSource = extremal_enumerator
) -> list[ExclusionFamily]:
    code_type = CodeType(code_type)
    params = type_params(code_type)
    period = REPORTING_PERIODS.get(code_type, params.basis_degree_step)
    reports = scan(code_type, 1, n_cap, jobs=jobs, source=source)
    families = []
    for residue in range(period):
        members = [r for r in reports if r.n % period == residue]
        if not members:
            continue
        start = len(members)
        while start > 0 and not members[start - 1].all_nonnegative:
            start -= 1
        threshold_i = (members[start].n - residue) // period if start < len(members) else None
        sporadic = tuple(r.n for r in members[:start] if not r.all_nonnegative)
        families.append(ExclusionFamily(code_type, period, residue, members[-1].n, threshold_i, sporadic))
    return families
