"""Command-line interface: run scenarios against CSV files or bundled presets.

Exit codes: 0 success, 2 infeasible house size, 3 tie, 4 parse error.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import datasets
from .core import MemberState, RoundingRule, as_fraction
from .data import parse_population_file
from .errors import DatasetParseError, InfeasibleError, TieError
from .report import OutputFormat, ScenarioConfig, render, run_scenario

EXIT_INFEASIBLE = 2
EXIT_TIE = 3
EXIT_PARSE = 4


def _parse_base(value: str, allow_general: bool) -> Fraction:
    try:
        base = as_fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise click.BadParameter(f"cannot parse base {value!r}")
    if base.denominator not in (1, 2) and not allow_general:
        raise click.BadParameter(
            f"base {value} is not an integer or half-integer; "
            "pass --allow-general-base to permit arbitrary rationals"
        )
    return base


def _parse_accession(spec: str) -> MemberState:
    name, sep, pop = spec.partition("=")
    if not sep:
        raise click.BadParameter(f"expected NAME=POPULATION, got {spec!r}")
    try:
        return MemberState(name.strip(), int(pop.replace(",", "").replace("_", "")))
    except ValueError as exc:
        raise click.BadParameter(str(exc))


@click.group()
def main():
    """Exact base-plus-proportional seat apportionment."""


@main.command()
@click.argument("dataset_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--preset", type=click.Choice(sorted(datasets.PRESETS)), default=None,
              help="Use a bundled dataset instead of a CSV file.")
@click.option("--base", default="5", show_default=True, help="Base seats per state.")
@click.option("--max", "max_cap", type=int, default=96, show_default=True,
              help="Maximum seats per state (0 disables the cap).")
@click.option("--house", type=int, default=None, help="Target house size [default: 751].")
@click.option("--divisor", default=None,
              help="Fixed divisor (persons/seat); mutually exclusive with --house.")
@click.option("--rounding", type=click.Choice([r.value for r in RoundingRule]),
              default="up", show_default=True)
@click.option("--method", type=click.Choice(["divisor", "sequential", "both"]),
              default="both", show_default=True,
              help="'both' runs both solvers and asserts agreement.")
@click.option("--tie-policy", default=None,
              help="'lexicographic' or 'seed=<n>'; default fails closed on ties.")
@click.option("--check-dp/--no-check-dp", default=True, show_default=True,
              help="Attach degressive-proportionality diagnostics.")
@click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]),
              default="table", show_default=True)
@click.option("--accede", multiple=True, metavar="NAME=POPULATION",
              help="Stage an accession; repeatable.")
@click.option("--allow-general-base", is_flag=True,
              help="Permit bases that are not integer or half-integer.")
def allocate(dataset_file, preset, base, max_cap, house, divisor, rounding,
             method, tie_policy, check_dp, fmt, accede, allow_general_base):
    """Allocate seats for a population dataset."""
    if (dataset_file is None) == (preset is None):
        raise click.UsageError("provide exactly one of DATASET_FILE or --preset")
    if house is not None and divisor is not None:
        raise click.UsageError("--house and --divisor are mutually exclusive")

    try:
        if preset is not None:
            dataset = datasets.PRESETS[preset]()
        else:
            with open(dataset_file, "rb") as fh:
                dataset = parse_population_file(fh.read())
    except DatasetParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)

    config = ScenarioConfig(
        dataset=dataset,
        base=_parse_base(base, allow_general_base),
        max_cap=max_cap or None,
        house_size=None if divisor is not None else (house if house is not None else 751),
        fixed_divisor=None if divisor is None else as_fraction(divisor),
        rounding=RoundingRule(rounding),
        method=method,
        tie_policy=tie_policy,
        check_dp=check_dp,
        acceding=tuple(_parse_accession(a) for a in accede),
        output=OutputFormat(fmt),
    )
    try:
        report = run_scenario(config)
    except InfeasibleError as exc:
        click.echo(f"error: INFEASIBLE: {exc}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    except TieError as exc:
        click.echo(f"error: TIE: {exc}", err=True)
        sys.exit(EXIT_TIE)
    sys.stdout.buffer.write(render(report, config.output))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the local HTTP service used by the explorer UI."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
