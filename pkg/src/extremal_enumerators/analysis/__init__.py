"""
Sign analysis of extremal enumerators and verification of nonexistence claims.

Classes:
- Sign: Enum for negative / zero / positive coefficients.
- Reading: Enum for how "highest power of y" is located.
- SignReport: signs of the tracked coefficients for one (type, n).
- Verdict: exclusion decision with its negative witness.
- ClaimId: Enum for the verifiable claims.
- ClaimResult: outcome of verifying one claim up to a cap.
- CrossBoundaryRecord: hand-off between finite ranges and the third-coefficient criterion.
"""

from .claims import (
    CLAIMS,
    DEFAULT_TYPE_II_CAP,
    DEFAULT_TYPE_III_CAP,
    LONG_TYPE_II_CAP,
    BoundaryCheck,
    Claim,
    ClaimId,
    ClaimResult,
    Counterexample,
    CrossBoundaryRecord,
    Evaluation,
    Family,
    HandOff,
    Tracked,
    UnsupportedTypeError,
    cross_boundary_check,
    evaluate,
    verify_claim,
)
from .signs import (
    ExclusionFamily,
    Reading,
    Sign,
    SignReport,
    Verdict,
    admissible_lengths,
    classify,
    exclusion_thresholds,
    report_from_enumerator,
    scan,
    sign_report,
    strictly_positive,
    verdict_from_enumerator,
)

__all__ = [
    "CLAIMS",
    "DEFAULT_TYPE_II_CAP",
    "DEFAULT_TYPE_III_CAP",
    "LONG_TYPE_II_CAP",
    "BoundaryCheck",
    "Claim",
    "ClaimId",
    "ClaimResult",
    "Counterexample",
    "CrossBoundaryRecord",
    "Evaluation",
    "ExclusionFamily",
    "Family",
    "HandOff",
    "Reading",
    "Sign",
    "SignReport",
    "Tracked",
    "UnsupportedTypeError",
    "Verdict",
    "admissible_lengths",
    "classify",
    "cross_boundary_check",
    "evaluate",
    "exclusion_thresholds",
    "report_from_enumerator",
    "scan",
    "sign_report",
    "strictly_positive",
    "verdict_from_enumerator",
    "verify_claim",
]
