"""Degressive proportionality validators.

Condition 1: no smaller state receives more seats than a larger state.
Condition 2: population per seat increases with population. The revised
definition tests Condition 2 on pre-rounding seat shares; the post-rounding
variant is reported as a diagnostic only, since rounding can (and with this
method sometimes does) invert adjacent ratios without invalidating a
compliant allocation.

Equal populations with equal seats or ratios are non-violating throughout;
a strict reading would make symmetric instances unsatisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Allocation

# Entries are (name, population, value) triples; value is seats or a share.


def _sorted_pairs(pairs, pops):
    # Deterministic: larger-population member first, descending.
    return sorted(pairs, key=lambda p: (-pops[p[1]], -pops[p[0]], p[1], p[0]))


def check_condition1(entries: Sequence[tuple]) -> list:
    """All (smaller, larger) name pairs where the smaller state has more seats."""
    pops = {name: pop for name, pop, _ in entries}
    out = []
    for name_i, p_i, s_i in entries:
        for name_j, p_j, s_j in entries:
            if p_i < p_j and s_i > s_j:
                out.append((name_i, name_j))
    return _sorted_pairs(out, pops)


def check_pre_rounding(entries: Sequence[tuple]) -> list:
    """Pairs violating ratio monotonicity on pre-rounding shares.

    A pair (smaller, larger) violates when the smaller state's
    population/share ratio is not strictly below the larger one's. Exact
    rational comparison throughout.
    """
    pops = {name: pop for name, pop, _ in entries}
    out = []
    for name_i, p_i, sh_i in entries:
        for name_j, p_j, sh_j in entries:
            if p_i < p_j and sh_i > 0 and sh_j > 0:
                if Fraction(p_i) / sh_i >= Fraction(p_j) / sh_j:
                    out.append((name_i, name_j))
    return _sorted_pairs(out, pops)


def check_post_rounding(entries: Sequence[tuple]) -> list:
    """States whose post-rounding ratio is beaten by a smaller state.

    Flags the larger-population member of each inverted pair. Diagnostic
    only.
    """
    pops = {name: pop for name, pop, _ in entries}
    flagged = set()
    for name_i, p_i, s_i in entries:
        for name_j, p_j, s_j in entries:
            if p_j < p_i and s_i > 0 and s_j > 0:
                if Fraction(p_j, s_j) > Fraction(p_i, s_i):
                    flagged.add(name_i)
    return sorted(flagged, key=lambda n: (-pops[n], n))


@dataclass(frozen=True)
class DpReport:
    """Findings of all three checks for one allocation."""

    condition1_violations: tuple
    pre_rounding_violations: tuple
    post_rounding_violations: tuple

    @property
    def satisfies_revised_dp(self) -> bool:
        """True iff Condition 1 and the pre-rounding ratio condition hold."""
        return not self.condition1_violations and not self.pre_rounding_violations


def dp_report(allocation: Allocation) -> DpReport:
    """Run all degressive-proportionality checks on an allocation."""
    seat_entries = [(e.state.name, e.state.population, e.seats) for e in allocation.entries]
    share_entries = [(e.state.name, e.state.population, e.share) for e in allocation.entries]
    return DpReport(
        tuple(check_condition1(seat_entries)),
        tuple(check_pre_rounding(share_entries)),
        tuple(check_post_rounding(seat_entries)),
    )
