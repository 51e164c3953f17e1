"""
Nonexistence claims for extremal Type II and Type III codes, encoded as predicates over arithmetic
progressions of lengths, and their mechanical verification on finite prefixes.
"""
from dataclasses import dataclass
from enum import StrEnum
import logging
from typing import Callable, Iterable

from extremal_enumerators.analysis.signs import (
    EnumeratorSource,
    Reading,
    Sign,
    SignReport,
    admissible_lengths,
    evaluate_lengths,
    report_from_enumerator,
    strictly_positive,
    third_nonzero_slot,
)
from extremal_enumerators.gleason import CodeType, admissible, extremal_enumerator

logger = logging.getLogger(__name__)

DEFAULT_TYPE_III_CAP = 1000
DEFAULT_TYPE_II_CAP = 400
LONG_TYPE_II_CAP = 3952


class UnsupportedTypeError(ValueError):
    pass


class ClaimId(StrEnum):
    THM1 = "thm1"
    THM2_TYPE_II = "thm2-ii"
    THM2_TYPE_III = "thm2-iii"
    PROP = "prop"
    THM3 = "thm3"
    REMARK_TYPE_II = "remark-ii"

    @classmethod
    def from_tag(cls, tag: str) -> "ClaimId":
        key = tag.strip().lower().replace("_", "-").replace("-type", "-")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"Unknown claim: {tag!r}") from None


class Tracked(StrEnum):
    """Coefficient condition a family asserts."""

    HIGHEST = "highest"     # highest coefficient negative
    NEXT = "next"           # next-to-highest coefficient negative
    THIRD = "third"         # A*_{w(m+2)} negative
    ANY = "any"             # one of the three above negative
    POSITIVE = "positive"   # every non-forced coefficient positive


@dataclass(frozen=True)
class Family:
    modulus: int
    residue: int
    i_min: int
    i_max: int | None
    tracked: Tracked

    def member(self, i: int) -> int:
        return self.modulus * i + self.residue

    def index(self, n: int) -> int | None:
        if n % self.modulus != self.residue:
            return None
        return (n - self.residue) // self.modulus

    def contains(self, n: int) -> bool:
        i = self.index(n)
        return i is not None and i >= self.i_min and (self.i_max is None or i <= self.i_max)

    @property
    def label(self) -> str:
        base = f"{self.modulus}i+{self.residue}" if self.residue else f"{self.modulus}i"
        if self.i_max is None:
            return f"{base} (i >= {self.i_min})"
        if self.i_min <= 0:
            return f"{base} (i <= {self.i_max})"
        return f"{base} ({self.i_min} <= i <= {self.i_max})"


@dataclass(frozen=True)
class Claim:
    claim_id: ClaimId
    code_type: CodeType
    families: tuple[Family, ...]
    statement: str
    default_cap: int
    iff: bool = False
    exact_start: bool = False

    def family_of(self, n: int) -> Family | None:
        return next((f for f in self.families if f.contains(n)), None)


def _families(tracked: Tracked, modulus: int, *ranges: tuple[int, int, int | None]) -> tuple[Family, ...]:
    return tuple(Family(modulus, residue, i_min, i_max, tracked) for residue, i_min, i_max in ranges)


CLAIMS: dict[ClaimId, Claim] = {
    ClaimId.THM1: Claim(
        ClaimId.THM1,
        CodeType.III,
        _families(Tracked.HIGHEST, 24, (0, 3, None), (4, 7, None)) + _families(Tracked.NEXT, 24, (12, 11, None)),
        "Highest coefficient negative for 24i (i>=3), 24i+4 (i>=7); next-to-highest for 24i+12 (i>=11)",
        DEFAULT_TYPE_III_CAP,
    ),
    ClaimId.THM2_TYPE_II: Claim(
        ClaimId.THM2_TYPE_II,
        CodeType.II,
        _families(Tracked.THIRD, 24, (0, 154, None), (8, 159, None), (16, 164, None)),
        "A*_{w(m+2)} negative iff 24i (i>=154), 24i+8 (i>=159), 24i+16 (i>=164)",
        DEFAULT_TYPE_II_CAP,
        iff=True,
    ),
    ClaimId.THM2_TYPE_III: Claim(
        ClaimId.THM2_TYPE_III,
        CodeType.III,
        _families(Tracked.THIRD, 12, (0, 70, None), (4, 75, None), (8, 78, None)),
        "A*_{w(m+2)} negative iff 12i (i>=70), 12i+4 (i>=75), 12i+8 (i>=78)",
        DEFAULT_TYPE_III_CAP,
        iff=True,
    ),
    ClaimId.PROP: Claim(
        ClaimId.PROP,
        CodeType.III,
        # For 24i+20 the negative coefficient sits in slot K - 1; slot K stays positive.
        # The upper ends are where the A*_{w(m+2)} criterion takes over, not where the sign changes.
        _families(Tracked.HIGHEST, 24, (8, 11, 38)) + _families(Tracked.NEXT, 24, (20, 19, 38), (16, 15, 36)),
        "Highest coefficient negative for 24i+8 (11<=i<=38), starting exactly at i=11; "
        "next-to-highest for 24i+20 (19<=i<=38) and 24i+16 (15<=i<=36), starting exactly at i=19 and i=15",
        DEFAULT_TYPE_III_CAP,
        exact_start=True,
    ),
    ClaimId.THM3: Claim(
        ClaimId.THM3,
        CodeType.III,
        _families(
            Tracked.ANY, 24, (0, 3, None), (4, 7, None), (8, 11, None), (12, 11, None), (16, 15, None), (20, 19, None)
        ),
        "No extremal code for 24i (i>=3), 24i+4 (i>=7), 24i+8 (i>=11), 24i+12 (i>=11), 24i+16 (i>=15), 24i+20 (i>=19)",
        DEFAULT_TYPE_III_CAP,
    ),
    ClaimId.REMARK_TYPE_II: Claim(
        ClaimId.REMARK_TYPE_II,
        CodeType.II,
        _families(Tracked.POSITIVE, 24, (0, 1, 153), (8, 0, 158), (16, 0, 163)),
        "All coefficients positive for 24i (i<=153), 24i+8 (i<=158), 24i+16 (i<=163)",
        DEFAULT_TYPE_II_CAP,
    ),
}


@dataclass(frozen=True)
class Evaluation:
    report: SignReport
    positive: bool
    highest_value: int
    next_value: int
    third_value: int | None

    @property
    def n(self) -> int:
        return self.report.n

    def holds(self, tracked: Tracked) -> bool:
        match tracked:
            case Tracked.HIGHEST:
                return self.report.highest is Sign.NEGATIVE
            case Tracked.NEXT:
                return self.report.next_to_highest is Sign.NEGATIVE
            case Tracked.THIRD:
                return self.report.third_nonzero is Sign.NEGATIVE
            case Tracked.ANY:
                return any(self.holds(t) for t in (Tracked.HIGHEST, Tracked.NEXT, Tracked.THIRD))
            case Tracked.POSITIVE:
                return self.positive
        raise ValueError(f"Unknown tracked condition: {tracked!r}")

    def value(self, tracked: Tracked) -> int | None:
        """Coefficient behind a tracked sign; for ANY, the first negative one."""
        match tracked:
            case Tracked.HIGHEST:
                return self.highest_value
            case Tracked.NEXT:
                return self.next_value
            case Tracked.THIRD:
                return self.third_value
            case Tracked.ANY:
                return next(
                    (self.value(t) for t in (Tracked.HIGHEST, Tracked.NEXT, Tracked.THIRD) if self.holds(t)), None
                )
        return None


def evaluate(item: tuple[EnumeratorSource, CodeType, int, Reading]) -> Evaluation:
    source, code_type, n, reading = item
    enumerator = source(code_type, n)
    report = report_from_enumerator(enumerator, reading)
    if Reading(reading) is Reading.WEIGHT:
        highest = enumerator.coefficient(n)
        below = enumerator.coefficient(n - enumerator.w)
    else:
        highest = enumerator.slot(enumerator.top_slot)
        below = enumerator.slot(enumerator.top_slot - 1)
    third = third_nonzero_slot(enumerator)
    return Evaluation(
        report=report,
        positive=strictly_positive(enumerator),
        highest_value=highest,
        next_value=below,
        third_value=None if third is None else enumerator.slot(third),
    )


@dataclass(frozen=True)
class Counterexample:
    n: int
    reason: str


@dataclass(frozen=True)
class BoundaryCheck:
    n: int
    family: str
    tracked: Tracked
    expected: bool
    observed: bool
    value: int | None

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    n_cap: int
    checked: tuple[int, ...]
    counterexamples: tuple[Counterexample, ...]
    boundaries: tuple[BoundaryCheck, ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples and all(b.ok for b in self.boundaries)


def _boundary_lengths(claim: Claim, family: Family) -> list[tuple[int, bool]]:
    """
    (n, expected) pairs at the edges of a family's range.

    Both ends of the range must satisfy the condition. When the claim fixes where its families start
    (exact_start, or an iff claim), the member just below the range must not. Nothing is expected past
    i_max: a finite range ends where another criterion takes over, and the sign may well persist.
    """
    edges = [(family.member(family.i_min), True)]
    if family.i_max is not None:
        edges.append((family.member(family.i_max), True))
    if (claim.exact_start or claim.iff) and family.i_min > 0:
        edges.append((family.member(family.i_min - 1), False))
    return edges


def verify_claim(
    claim_id: ClaimId,
    n_cap: int | None = None,
    samples: Iterable[int] = (),
    progress: Callable[[Evaluation], None] | None = None,
    jobs: int = 1,
    reading: Reading = Reading.LATTICE,
    source: EnumeratorSource = extremal_enumerator,
) -> ClaimResult:
    """
    Evaluate a claim on every relevant admissible length up to n_cap, plus any sample lengths.

    Forward claims check each family member; "iff" claims check every admissible length in both
    directions. Boundary checks record the signs at the edges of each family's range.
    """
    claim = CLAIMS[ClaimId.from_tag(claim_id)]
    cap = claim.default_cap if n_cap is None else n_cap
    code_type = claim.code_type
    extra = set()
    for n in samples:
        if admissible(code_type, n):
            extra.add(n)
        else:
            logger.warning("Ignoring sample n=%d: not an admissible %s length", n, code_type.label)

    def in_scope(n: int) -> bool:
        return n <= cap or n in extra

    candidates = admissible_lengths(code_type, 1, cap) + sorted(n for n in extra if n > cap)
    if claim.iff:
        lengths = set(candidates)
    else:
        lengths = {n for n in candidates if claim.family_of(n) is not None}
    edges = []
    for family in claim.families:
        for n, expected in _boundary_lengths(claim, family):
            if admissible(code_type, n) and in_scope(n):
                edges.append((family, n, expected))
                lengths.add(n)

    ordered = sorted(lengths)
    logger.info("Verifying %s on %d %s lengths (cap %d)", claim.claim_id, len(ordered), code_type.label, cap)
    evaluations = evaluate_lengths(evaluate, [(source, code_type, n, reading) for n in ordered], jobs, progress)
    by_n = {e.n: e for e in evaluations}

    counterexamples = []
    for n in ordered:
        evaluation = by_n[n]
        family = claim.family_of(n)
        if claim.iff:
            tracked = claim.families[0].tracked
            if evaluation.holds(tracked) and family is None:
                counterexamples.append(Counterexample(n, f"{tracked} condition holds outside every claimed family"))
            elif family is not None and not evaluation.holds(tracked):
                counterexamples.append(Counterexample(n, f"{tracked} condition fails inside {family.label}"))
        elif family is not None and not evaluation.holds(family.tracked):
            counterexamples.append(Counterexample(n, f"{family.tracked} condition fails inside {family.label}"))

    boundaries = tuple(
        BoundaryCheck(
            n=n,
            family=family.label,
            tracked=family.tracked,
            expected=expected,
            observed=by_n[n].holds(family.tracked),
            value=by_n[n].value(family.tracked),
        )
        for family, n, expected in edges
    )
    result = ClaimResult(claim, cap, tuple(ordered), tuple(counterexamples), boundaries)
    logger.info("%s: %s", claim.claim_id, "PASS" if result.passed else "FAIL")
    return result


@dataclass(frozen=True)
class HandOff:
    family: str
    last_n: int
    last_tracked: Tracked
    last_sign: Sign
    last_value: int
    first_n: int
    third_sign: Sign | None
    third_value: int | None
    tracked_sign_at_first: Sign

    @property
    def ok(self) -> bool:
        return self.last_sign is Sign.NEGATIVE and self.third_sign is Sign.NEGATIVE


@dataclass(frozen=True)
class CrossBoundaryRecord:
    code_type: CodeType
    handoffs: tuple[HandOff, ...]

    @property
    def passed(self) -> bool:
        return all(h.ok for h in self.handoffs)


def cross_boundary_check(
    code_type: CodeType, reading: Reading = Reading.LATTICE, source: EnumeratorSource = extremal_enumerator
) -> CrossBoundaryRecord:
    """
    Check that where a finite range of the `prop` claim ends, the third-coefficient criterion takes over:
    the tracked coefficient is negative at the last length of the range and A*_{w(m+2)} is negative
    at the next length of the same progression. The tracked sign at that next length is recorded too;
    it can stay negative, so the hand-off does not depend on it.
    """
    code_type = CodeType(code_type)
    if code_type is not CodeType.III:
        raise UnsupportedTypeError(f"Cross-boundary check is defined for Type III only, got {code_type.label}")
    handoffs = []
    for family in CLAIMS[ClaimId.PROP].families:
        last_n = family.member(family.i_max)
        first_n = family.member(family.i_max + 1)
        last = evaluate((source, code_type, last_n, reading))
        first = evaluate((source, code_type, first_n, reading))
        handoffs.append(
            HandOff(
                family=family.label,
                last_n=last_n,
                last_tracked=family.tracked,
                last_sign=Sign.of(last.value(family.tracked)),
                last_value=last.value(family.tracked),
                first_n=first_n,
                third_sign=first.report.third_nonzero,
                third_value=first.third_value,
                tracked_sign_at_first=Sign.of(first.value(family.tracked)),
            )
        )
    return CrossBoundaryRecord(code_type, tuple(handoffs))
