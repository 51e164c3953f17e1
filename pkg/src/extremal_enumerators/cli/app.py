"""
CLI application for computing and analysing extremal weight enumerators of self-dual codes.
Commands:
- enum: compute one extremal enumerator and print its coefficients and sign summary
- scan: sign summary for every admissible length in a range
- verify: re-check a nonexistence claim on a finite range of lengths
- bound: print the extremal minimum weight w([n/RS] + 1)
- families: smallest index from which each residue class of lengths is excluded
- handoff: check where the finite Type III ranges hand over to the third-coefficient criterion

Exit codes: 0 success, 1 verification failure, 2 inadmissible length, 64 usage error.
"""

import functools
import logging
import sys

import click

from extremal_enumerators.analysis import (
    CLAIMS,
    LONG_TYPE_II_CAP,
    ClaimId,
    Reading,
    UnsupportedTypeError,
    cross_boundary_check,
    exclusion_thresholds,
    scan,
    verify_claim,
)
from extremal_enumerators.cli.cache import CACHE_DIR_ENV, load_or_compute
from extremal_enumerators.cli.output import (
    OutputRecord,
    families_json,
    render_claim,
    render_csv,
    render_families,
    render_handoffs,
    render_json,
    render_scan_csv,
    render_scan_json,
    render_table,
)
from extremal_enumerators.gleason import CodeType, InadmissibleLengthError, extremal_enumerator, extremal_minimum_weight

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_USAGE = 64

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
TYPE_CHOICE = click.Choice([t.value for t in CodeType], case_sensitive=False)
READING_CHOICE = click.Choice([r.value for r in Reading], case_sensitive=False)
CLAIM_CHOICE = click.Choice([c.value for c in ClaimId] + ["all"], case_sensitive=False)


class BadInputError(click.ClickException):
    exit_code = EXIT_BAD_INPUT


class ExtremalGroup(click.Group):
    """Click group that maps usage errors to exit code 64 instead of click's default 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args, prog_name=prog_name, complete_var=complete_var, standalone_mode=False, **extra
            )
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_FAIL)
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _source(ctx: click.Context):
    cache_dir = ctx.obj.get("cache_dir")
    if not cache_dir:
        return extremal_enumerator
    return functools.partial(load_or_compute, cache_dir=cache_dir)


def _progress_printer(claim_id: ClaimId):
    def progress(evaluation) -> None:
        click.echo(f"  {claim_id} n={evaluation.n} done", err=True)

    return progress


def _compute(ctx: click.Context, code_type: CodeType, n: int):
    try:
        return _source(ctx)(code_type, n)
    except InadmissibleLengthError as e:
        raise BadInputError(str(e)) from e


@click.group(cls=ExtremalGroup)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    envvar="EXTREMAL_LOG_LEVEL",
    show_default=True,
    help="Diagnostics verbosity (stderr).",
)
@click.option(
    "--cache-dir",
    type=click.Path(file_okay=False),
    envvar=CACHE_DIR_ENV,
    default=None,
    help=f"Result cache directory; caching is disabled when unset. [env: {CACHE_DIR_ENV}]",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, cache_dir: str | None) -> None:
    """Extremal weight enumerators of Type I-IV self-dual codes."""
    logging.basicConfig(level=log_level.upper(), format="%(asctime)s - %(levelname)s - %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir


@cli.command("enum")
@click.option("--type", "code_type", type=TYPE_CHOICE, required=True, help="Code type.")
@click.option("--n", "n", type=int, required=True, help="Code length.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="table", show_default=True)
@click.option("--full", is_flag=True, help="List every nonzero coefficient instead of the first few.")
@click.option("--reading", type=READING_CHOICE, default=Reading.LATTICE.value, show_default=True)
@click.pass_context
def enum(ctx: click.Context, code_type: str, n: int, fmt: str, full: bool, reading: str) -> None:
    """Compute the extremal weight enumerator for one length."""
    enumerator = _compute(ctx, CodeType.from_tag(code_type), n)
    record = OutputRecord.from_enumerator(enumerator, full=full, reading=Reading(reading.lower()))
    renderers = {"json": render_json, "csv": render_csv, "table": render_table}
    click.echo(renderers[fmt](record))


@cli.command("scan")
@click.option("--type", "code_type", type=TYPE_CHOICE, required=True, help="Code type.")
@click.option("--from", "n_from", type=int, required=True, help="First length (inclusive).")
@click.option("--to", "n_to", type=int, required=True, help="Last length (inclusive).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.option("--reading", type=READING_CHOICE, default=Reading.LATTICE.value, show_default=True)
@click.pass_context
def scan_cmd(ctx: click.Context, code_type: str, n_from: int, n_to: int, fmt: str, jobs: int, reading: str) -> None:
    """Sign summary for every admissible length in a range, ascending."""
    if n_from > n_to:
        raise click.UsageError(f"--from ({n_from}) must not exceed --to ({n_to})")
    reports = scan(
        CodeType.from_tag(code_type), n_from, n_to, jobs=jobs, reading=Reading(reading.lower()), source=_source(ctx)
    )
    click.echo(render_scan_csv(reports) if fmt == "csv" else render_scan_json(reports))


@cli.command("verify")
@click.option("--claim", "claim_tag", type=CLAIM_CHOICE, required=True, help="Claim to verify, or 'all'.")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest length checked.")
@click.option("--long", "long_mode", is_flag=True, help=f"Sweep Type II claims up to n = {LONG_TYPE_II_CAP}.")
@click.option("--sample", "samples", type=int, multiple=True, help="Extra length to check above the cap.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.option("--reading", type=READING_CHOICE, default=Reading.LATTICE.value, show_default=True)
@click.pass_context
def verify(
    ctx: click.Context,
    claim_tag: str,
    cap: int | None,
    long_mode: bool,
    samples: tuple[int, ...],
    jobs: int,
    reading: str,
) -> None:
    """Re-check nonexistence claims on a finite range of lengths."""
    claim_ids = list(ClaimId) if claim_tag.lower() == "all" else [ClaimId.from_tag(claim_tag)]
    all_passed = True
    for claim_id in claim_ids:
        claim = CLAIMS[claim_id]
        n_cap = cap
        if n_cap is None and long_mode and claim.code_type is CodeType.II:
            n_cap = LONG_TYPE_II_CAP
        progress = _progress_printer(claim_id) if long_mode else None
        result = verify_claim(
            claim_id,
            n_cap,
            samples=samples,
            progress=progress,
            jobs=jobs,
            reading=Reading(reading.lower()),
            source=_source(ctx),
        )
        click.echo(render_claim(result))
        all_passed = all_passed and result.passed
    if not all_passed:
        ctx.exit(EXIT_FAIL)


@cli.command("bound")
@click.option("--type", "code_type", type=TYPE_CHOICE, required=True, help="Code type.")
@click.option("--n", "n", type=int, required=True, help="Code length.")
def bound(code_type: str, n: int) -> None:
    """Print the extremal minimum weight for one length."""
    try:
        click.echo(extremal_minimum_weight(CodeType.from_tag(code_type), n))
    except InadmissibleLengthError as e:
        raise BadInputError(str(e)) from e


@cli.command("families")
@click.option("--type", "code_type", type=TYPE_CHOICE, required=True, help="Code type.")
@click.option("--cap", type=click.IntRange(min=1), default=1000, show_default=True, help="Largest length checked.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.pass_context
def families(ctx: click.Context, code_type: str, cap: int, fmt: str, jobs: int) -> None:
    """Smallest index from which each residue class of lengths is excluded."""
    result = exclusion_thresholds(CodeType.from_tag(code_type), cap, jobs=jobs, source=_source(ctx))
    click.echo(render_families(result) if fmt == "table" else families_json(result))


@cli.command("handoff")
@click.option("--type", "code_type", type=TYPE_CHOICE, default=CodeType.III.value, show_default=True)
@click.pass_context
def handoff(ctx: click.Context, code_type: str) -> None:
    """Check the hand-off from the finite Type III ranges to the third-coefficient criterion."""
    try:
        record = cross_boundary_check(CodeType.from_tag(code_type), source=_source(ctx))
    except UnsupportedTypeError as e:
        raise BadInputError(str(e)) from e
    click.echo(render_handoffs(record))
    if not record.passed:
        ctx.exit(EXIT_FAIL)


if __name__ == "__main__":
    cli(obj={})
