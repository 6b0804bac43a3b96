"""Scenario orchestration and report rendering (table, CSV, JSON)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from fractions import Fraction
from typing import Optional

from .core import Allocation, ApportionmentParams, DivisorInterval, RoundingRule
from .data import PopulationDataset
from .degressive import DpReport, dp_report
from .divisor import evaluate_at_divisor, solve
from .schemes import ScenarioDelta, accession_scenario
from .sequential import sequential_allocate


class OutputFormat(Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class ScenarioConfig:
    """One scenario: a dataset, method parameters, and output options.

    Exactly one of ``house_size`` and ``fixed_divisor`` must be set; with a
    fixed divisor the total emerges from the arithmetic instead of being a
    target.
    """

    dataset: PopulationDataset
    base: Fraction = Fraction(5)
    max_cap: Optional[int] = 96
    house_size: Optional[int] = 751
    fixed_divisor: Optional[Fraction] = None
    rounding: RoundingRule = RoundingRule.UP
    method: str = "both"  # divisor | sequential | both
    tie_policy: Optional[str] = None
    check_dp: bool = True
    acceding: tuple = ()
    output: OutputFormat = OutputFormat.TABLE

    def __post_init__(self):
        if (self.house_size is None) == (self.fixed_divisor is None):
            raise ValueError("set exactly one of house_size and fixed_divisor")
        if self.method not in ("divisor", "sequential", "both"):
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def params(self) -> ApportionmentParams:
        return ApportionmentParams(self.base, self.max_cap, self.house_size, self.rounding)


@dataclass(frozen=True)
class Report:
    config: ScenarioConfig
    allocation: Allocation
    dp: Optional[DpReport]
    delta: Optional[ScenarioDelta]


def run_scenario(config: ScenarioConfig) -> Report:
    """Execute a scenario: solve (or evaluate), check DP, compute deltas."""
    params = config.params
    base_states = config.dataset.states
    delta = None

    if config.acceding:
        delta = accession_scenario(
            base_states,
            config.acceding,
            ApportionmentParams(config.base, config.max_cap,
                                config.house_size or 751, config.rounding),
            variant_divisor=config.fixed_divisor,
        )
        allocation = delta.variant
    elif config.fixed_divisor is not None:
        allocation = evaluate_at_divisor(base_states, params, config.fixed_divisor)
    elif config.method == "divisor":
        allocation = solve(base_states, params, tie_policy=config.tie_policy)
    elif config.method == "sequential":
        allocation, _ = sequential_allocate(base_states, params, tie_policy=config.tie_policy)
    else:
        allocation = solve(base_states, params, tie_policy=config.tie_policy)
        check, _ = sequential_allocate(base_states, params, tie_policy=config.tie_policy)
        if check.seat_vector != allocation.seat_vector:
            raise RuntimeError(
                "divisor and sequential methods disagree; this is an engine bug"
            )

    dp = dp_report(allocation) if config.check_dp else None
    return Report(config, allocation, dp, delta)


# ---------------------------------------------------------------------------
# rendering helpers

def decimal_string(x: Fraction, places: int = 1) -> str:
    """Exact decimal rendering, round-half-up at the given precision."""
    quantum = Decimal(1).scaleb(-places)
    d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(quantum, ROUND_HALF_UP)
    return str(d)


def format_ratio(x: Optional[Fraction]) -> str:
    """Ratio cell: one decimal, half-up, with thousands separators."""
    if x is None:
        return ""
    whole, _, frac = decimal_string(x, 1).partition(".")
    return f"{int(whole):,}.{frac}"


def fraction_json(x: Optional[Fraction], places: int = 4) -> Optional[dict]:
    if x is None:
        return None
    return {"num": x.numerator, "den": x.denominator, "decimal": decimal_string(x, places)}


def interval_json(interval: DivisorInterval) -> dict:
    if interval.tie:
        return {"tie": True}
    return {
        "tie": False,
        "lo": fraction_json(interval.lo),
        "lo_open": interval.lo_open,
        "hi": fraction_json(interval.hi),
        "hi_open": interval.hi_open,
        "reference_divisor": fraction_json(interval.reference_divisor),
    }


def dp_json(dp: DpReport) -> dict:
    return {
        "condition1_violations": [list(p) for p in dp.condition1_violations],
        "pre_rounding_violations": [list(p) for p in dp.pre_rounding_violations],
        "post_rounding_violations": list(dp.post_rounding_violations),
        "satisfies_revised_dp": dp.satisfies_revised_dp,
    }


def allocation_json(allocation: Allocation, dp: Optional[DpReport] = None,
                    status_quo: Optional[dict] = None) -> dict:
    entries = []
    for rank, e in enumerate(allocation.entries, start=1):
        row = {
            "rank": rank,
            "name": e.state.name,
            "population": e.state.population,
            "seats": e.seats,
            "share": fraction_json(e.share),
            "ratio_before": fraction_json(e.ratio_before, places=1),
            "ratio_after": fraction_json(e.ratio_after, places=1),
            "capped": e.state.name in allocation.capped_states,
        }
        if status_quo and e.state.name in status_quo:
            row["now_seats"] = status_quo[e.state.name]
        entries.append(row)
    out = {
        "entries": entries,
        "total_seats": allocation.total_seats,
        "divisor_interval": interval_json(allocation.divisor_interval),
        "capped_states": list(allocation.capped_states),
        "params": {
            "base": fraction_json(allocation.params.base),
            "max_cap": allocation.params.max_cap,
            "house_size": allocation.params.house_size,
            "rounding": allocation.params.rounding.value,
        },
    }
    if dp is not None:
        out["dp_report"] = dp_json(dp)
    return out


def delta_json(delta: ScenarioDelta) -> dict:
    return {
        "changes": [
            {"name": name, "before": before, "after": after}
            for name, before, after in delta.changes
            if before != after
        ],
        "joined": list(delta.joined),
        "removed": list(delta.removed),
        "baseline_total": delta.baseline.total_seats,
        "variant_total": delta.variant.total_seats,
    }


def _render_json(report: Report) -> bytes:
    payload = allocation_json(
        report.allocation, report.dp, report.config.dataset.status_quo_seats
    )
    if report.delta is not None:
        payload["delta"] = delta_json(report.delta)
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _render_csv(report: Report) -> bytes:
    import csv as _csv
    import io as _io

    buf = _io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "name", "population", "seats", "ratio_before", "ratio_after"])
    alloc = report.allocation
    for rank, e in enumerate(alloc.entries, start=1):
        writer.writerow([
            rank, e.state.name, e.state.population, e.seats,
            "" if e.ratio_before is None else decimal_string(e.ratio_before, 1),
            "" if e.ratio_after is None else decimal_string(e.ratio_after, 1),
        ])
    writer.writerow(["", "Total", sum(e.state.population for e in alloc.entries),
                     alloc.total_seats, "", ""])
    return buf.getvalue().encode("utf-8")


def _render_table(report: Report) -> bytes:
    alloc = report.allocation
    now = report.config.dataset.status_quo_seats
    has_now = bool(now)
    headers = ["#", "Member State", "Population", "Seats", "Popn/seats before", "Popn/seats after"]
    if has_now:
        headers.insert(3, "Now")
    rows = []
    for rank, e in enumerate(alloc.entries, start=1):
        row = [
            str(rank),
            e.state.name,
            f"{e.state.population:,}",
            str(e.seats),
            format_ratio(e.ratio_before),
            format_ratio(e.ratio_after),
        ]
        if has_now:
            row.insert(3, str(now.get(e.state.name, "-")))
        rows.append(row)
    total_row = ["", "Total", f"{sum(e.state.population for e in alloc.entries):,}",
                 str(alloc.total_seats), "", ""]
    if has_now:
        total_row.insert(3, "")
    rows.append(total_row)

    widths = [max(len(headers[i]), *(len(r[i]) for r in rows)) for i in range(len(headers))]

    def fmt(row):
        cells = []
        for i, cell in enumerate(row):
            # Left-align names, right-align numbers.
            cells.append(cell.ljust(widths[i]) if i == 1 else cell.rjust(widths[i]))
        return "  ".join(cells).rstrip()

    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)

    interval = alloc.divisor_interval
    if not interval.tie:
        lines.append("")
        lines.append(f"Reference divisor: {format_ratio(interval.reference_divisor)}")
    if report.dp is not None:
        lines.append(
            "Revised degressive proportionality: "
            + ("satisfied" if report.dp.satisfies_revised_dp else "VIOLATED")
        )
        if report.dp.post_rounding_violations:
            lines.append(
                "Post-rounding ratio inversions (diagnostic): "
                + ", ".join(report.dp.post_rounding_violations)
            )
    if report.delta is not None:
        moved = [c for c in report.delta.changes if c[1] != c[2]]
        if moved:
            lines.append("")
            lines.append("Seat changes vs baseline:")
            for name, before, after in moved:
                lines.append(f"  {name}: {'-' if before is None else before} -> "
                             f"{'-' if after is None else after}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render(report: Report, fmt: OutputFormat) -> bytes:
    """Render a report in the requested format."""
    if fmt is OutputFormat.JSON:
        return _render_json(report)
    if fmt is OutputFormat.CSV:
        return _render_csv(report)
    return _render_table(report)
