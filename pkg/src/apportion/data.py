"""Population dataset ingestion: CSV files with optional status-quo seats.

Expected format: UTF-8 CSV with header ``name,population[,now_seats]``.
Numbers may carry thousands separators (commas inside quoted fields,
spaces or underscores).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .core import MemberState, check_unique_names
from .errors import DatasetParseError

_HEADER_SHORT = ["name", "population"]
_HEADER_LONG = ["name", "population", "now_seats"]


@dataclass(frozen=True)
class PopulationDataset:
    """A set of states plus optional status-quo seats for comparison."""

    states: tuple
    status_quo_seats: dict = field(default_factory=dict)
    source_label: str = ""
    snapshot_date: str = ""

    def __post_init__(self):
        check_unique_names(self.states)
        names = {st.name for st in self.states}
        for name in self.status_quo_seats:
            if name not in names:
                raise ValueError(f"status-quo entry {name!r} references no state")


def _parse_int(token: str, what: str, line: int) -> int:
    cleaned = token.strip().replace(",", "").replace(" ", "").replace("_", "")
    if not cleaned:
        raise DatasetParseError(f"empty {what}", line)
    try:
        return int(cleaned)
    except ValueError:
        raise DatasetParseError(f"malformed {what}: {token!r}", line) from None


def parse_population_file(data) -> PopulationDataset:
    """Parse CSV bytes or text into a validated dataset."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DatasetParseError(f"not valid UTF-8: {exc}") from None
    else:
        text = data

    reader = csv.reader(io.StringIO(text))
    rows = [(i + 1, row) for i, row in enumerate(reader) if any(cell.strip() for cell in row)]
    if not rows:
        raise DatasetParseError("empty file")

    header_line, header = rows[0]
    header = [cell.strip().lower() for cell in header]
    if header not in (_HEADER_SHORT, _HEADER_LONG):
        raise DatasetParseError(
            "header must be 'name,population' or 'name,population,now_seats'", header_line
        )
    has_now = header == _HEADER_LONG

    states = []
    now = {}
    seen = set()
    for line, row in rows[1:]:
        if len(row) < 2 or len(row) > 3:
            raise DatasetParseError(f"expected 2 or 3 fields, got {len(row)}", line)
        name = row[0].strip()
        if not name:
            raise DatasetParseError("empty state name", line)
        if name in seen:
            raise DatasetParseError(f"duplicate state name {name!r}", line)
        seen.add(name)
        population = _parse_int(row[1], "population", line)
        if population < 1:
            raise DatasetParseError(f"non-positive population for {name!r}", line)
        states.append(MemberState(name, population))
        if len(row) == 3 and row[2].strip():
            if not has_now:
                raise DatasetParseError("now_seats value without now_seats header", line)
            now[name] = _parse_int(row[2], "now_seats", line)

    if not states:
        raise DatasetParseError("no states in file")
    return PopulationDataset(tuple(states), now)


def render_dataset_csv(dataset: PopulationDataset) -> bytes:
    """Render a dataset back to CSV; re-parsing yields an identical dataset."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    has_now = bool(dataset.status_quo_seats)
    writer.writerow(_HEADER_LONG if has_now else _HEADER_SHORT)
    for st in dataset.states:
        row = [st.name, str(st.population)]
        if has_now:
            seats = dataset.status_quo_seats.get(st.name)
            row.append("" if seats is None else str(seats))
        writer.writerow(row)
    return buf.getvalue().encode("utf-8")
