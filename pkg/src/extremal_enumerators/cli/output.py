"""Serialisation of enumerators, scan rows and claim results. Coefficients are always exact decimal strings."""
import csv
from dataclasses import dataclass
import io
import json

from extremal_enumerators.analysis import (
    ClaimResult,
    CrossBoundaryRecord,
    ExclusionFamily,
    Reading,
    Sign,
    SignReport,
    report_from_enumerator,
    verdict_from_enumerator,
)
from extremal_enumerators.cli.cache import SCHEMA_VERSION
from extremal_enumerators.gleason import CodeType, ExtremalEnumerator

TABLE_DIGIT_CAP = 40
DISPLAY_CAP = 20
SCAN_CSV_HEADER = ("n", "m", "d", "highest", "next", "third", "excluded", "witness")
ENUM_CSV_HEADER = ("type", "n", "m", "d", "highest", "next", "third", "excluded", "witness", "weight", "value")


def truncate_digits(value: str | int, cap: int = TABLE_DIGIT_CAP) -> str:
    """Shorten a decimal string for table display, marking how many digits it really has."""
    text = str(value)
    sign, digits = ("-", text[1:]) if text.startswith("-") else ("", text)
    if len(digits) <= cap:
        return text
    return f"{sign}{digits[:cap]}…({len(digits)} digits)"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _tag(sign: Sign | None) -> str:
    return "" if sign is None else sign.tag


@dataclass(frozen=True)
class OutputRecord:
    code_type: CodeType
    n: int
    m: int
    extremal_d: int
    a: tuple[str, ...]
    coefficients: tuple[tuple[int, str], ...]
    highest: Sign
    next_to_highest: Sign
    third_nonzero: Sign | None
    excluded: bool
    witness_weight: int | None

    @classmethod
    def from_enumerator(
        cls, enumerator: ExtremalEnumerator, full: bool = False, reading: Reading = Reading.LATTICE
    ) -> "OutputRecord":
        report = report_from_enumerator(enumerator, reading)
        verdict = verdict_from_enumerator(enumerator)
        items = enumerator.nonzero_items()
        if not full:
            items = items[:DISPLAY_CAP]
        return cls(
            code_type=enumerator.code_type,
            n=enumerator.n,
            m=enumerator.m,
            extremal_d=enumerator.minimum_weight,
            a=tuple(str(v) for v in enumerator.a),
            coefficients=tuple((weight, str(value)) for weight, value in items),
            highest=report.highest,
            next_to_highest=report.next_to_highest,
            third_nonzero=report.third_nonzero,
            excluded=verdict.excluded,
            witness_weight=verdict.witness_weight,
        )

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.code_type),
            "n": self.n,
            "m": self.m,
            "d": self.extremal_d,
            "a": list(self.a),
            "A": {str(weight): value for weight, value in self.coefficients if weight > 0},
            "signs": {
                "highest": self.highest.tag,
                "next": self.next_to_highest.tag,
                "third": None if self.third_nonzero is None else self.third_nonzero.tag,
            },
            "excluded": self.excluded,
            "witness_weight": self.witness_weight,
            "schema_version": SCHEMA_VERSION,
        }


def render_json(record: OutputRecord) -> str:
    return json.dumps(record.to_json_dict(), indent=2)


def _write_csv(header: tuple[str, ...], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_csv(record: OutputRecord) -> str:
    summary = [
        str(record.code_type),
        record.n,
        record.m,
        record.extremal_d,
        record.highest.tag,
        record.next_to_highest.tag,
        _tag(record.third_nonzero),
        _flag(record.excluded),
        "" if record.witness_weight is None else record.witness_weight,
    ]
    return _write_csv(ENUM_CSV_HEADER, [summary + [weight, value] for weight, value in record.coefficients])


def render_table(record: OutputRecord) -> str:
    width = max(len("weight"), len(str(record.n)))
    lines = [
        f"{record.code_type.label}  n={record.n}  m={record.m}  d={record.extremal_d}",
        f"{'weight':>{width}}  coefficient",
    ]
    lines += [f"{weight:>{width}}  {truncate_digits(value)}" for weight, value in record.coefficients]
    third = _tag(record.third_nonzero) or "-"
    lines.append(f"signs: highest={record.highest.tag} next={record.next_to_highest.tag} third={third}")
    witness = "" if record.witness_weight is None else f" (witness weight {record.witness_weight})"
    lines.append(f"excluded: {_flag(record.excluded)}{witness}")
    return "\n".join(lines)


def scan_row(report: SignReport) -> list:
    return [
        report.n,
        report.m,
        report.minimum_weight,
        report.highest.tag,
        report.next_to_highest.tag,
        _tag(report.third_nonzero),
        _flag(not report.all_nonnegative),
        "" if report.witness_weight is None else report.witness_weight,
    ]


def render_scan_csv(reports: list[SignReport]) -> str:
    return _write_csv(SCAN_CSV_HEADER, [scan_row(r) for r in reports])


def render_scan_json(reports: list[SignReport]) -> str:
    rows = []
    for report in reports:
        row = dict(zip(SCAN_CSV_HEADER, scan_row(report)))
        row["third"] = row["third"] or None
        row["excluded"] = not report.all_nonnegative
        row["witness"] = report.witness_weight
        rows.append(row)
    return json.dumps(rows, indent=2)


def render_claim(result: ClaimResult) -> str:
    claim = result.claim
    status = "PASS" if result.passed else "FAIL"
    lines = [
        f"{status} {claim.claim_id} [{claim.code_type.label}, n <= {result.n_cap}, {len(result.checked)} lengths]",
        f"  {claim.statement}",
    ]
    for b in result.boundaries:
        expectation = "holds" if b.expected else "fails"
        value = "-" if b.value is None else truncate_digits(b.value)
        mark = "ok" if b.ok else "MISMATCH"
        lines.append(f"  boundary n={b.n} {b.family}: {b.tracked} expected to {expectation}, value {value} [{mark}]")
    for c in result.counterexamples:
        lines.append(f"  counterexample n={c.n}: {c.reason}")
    return "\n".join(lines)


def render_handoffs(record: CrossBoundaryRecord) -> str:
    lines = [f"{'PASS' if record.passed else 'FAIL'} hand-off [{record.code_type.label}]"]
    for h in record.handoffs:
        third = "-" if h.third_value is None else truncate_digits(h.third_value)
        lines.append(
            f"  {h.family}: n={h.last_n} {h.last_tracked}={h.last_sign.tag} ({truncate_digits(h.last_value)}) -> "
            f"n={h.first_n} third={_tag(h.third_sign) or '-'} ({third}), {h.last_tracked}={h.tracked_sign_at_first.tag}"
        )
    return "\n".join(lines)


def render_families(families: list[ExclusionFamily]) -> str:
    lines = []
    for family in families:
        if family.threshold_i is None:
            tail = "no excluded tail"
        else:
            tail = f"excluded from i={family.threshold_i} (n={family.threshold_n})"
        sporadic = ", ".join(str(n) for n in family.sporadic) or "-"
        lines.append(f"{family.label:>6}  {tail}, checked to n={family.checked_up_to}; sporadic: {sporadic}")
    return "\n".join(lines)


def families_json(families: list[ExclusionFamily]) -> str:
    return json.dumps(
        [
            {
                "family": f.label,
                "period": f.period,
                "residue": f.residue,
                "threshold_i": f.threshold_i,
                "threshold_n": f.threshold_n,
                "sporadic": list(f.sporadic),
                "checked_up_to": f.checked_up_to,
            }
            for f in families
        ],
        indent=2,
    )
