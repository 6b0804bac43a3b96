"""Highest-quotient reformulation of the base-plus-proportional method.

Every state starts at its unconditional floor; remaining seats go one at a
time to the state with the largest priority quotient population/signpost,
with states removed once they hit the cap. On tie-free instances the result
is identical to the divisor solver, and the winning/losing boundary
quotients equal the divisor interval's endpoints.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    TIE,
    Allocation,
    ApportionmentParams,
    DivisorInterval,
    MemberState,
    RationalLike,
    RoundingRule,
    TieReport,
    as_fraction,
    check_unique_names,
    feasible_house_range,
    min_seats,
    seat_share,
)
from .errors import InfeasibleError, TieError


def signpost(seats_held: int, base: RationalLike, rule: RoundingRule) -> Fraction:
    """Divisor threshold below which the next seat is won.

    A state holding ``a`` seats gains its (a+1)-th seat at divisors smaller
    than population/signpost(a). Upwards rounding gives a - b, standard
    a + 1/2 - b, downwards a + 1 - b; with base 0 these are the classic
    Adams, Sainte-Lague/Webster and D'Hondt/Jefferson sequences.
    """
    b = as_fraction(base)
    if rule is RoundingRule.UP:
        return seats_held - b
    if rule is RoundingRule.STANDARD:
        return seats_held + Fraction(1, 2) - b
    return seats_held + 1 - b


@dataclass(frozen=True)
class TraceStep:
    step: int
    state: str
    quotient: Fraction
    seats_after: int


@dataclass(frozen=True)
class QuotientTrace:
    """Record of a sequential run: awards, cap removals, and the boundary.

    ``runners_up`` holds every unsatisfied claim tied for the best losing
    quotient; comparing it with the final award decides tie detection.
    """

    awards: tuple
    removals: tuple
    runners_up: tuple
    floor_seats: int
    house_size: int


def _tie_order(states: Sequence[MemberState], tie_policy: Optional[str]) -> dict:
    """Secondary ordering applied between equal quotients."""
    names = sorted(st.name for st in states)
    if tie_policy is not None and tie_policy.startswith("seed="):
        rng = random.Random(int(tie_policy[len("seed="):]))
        rng.shuffle(names)
    return {name: i for i, name in enumerate(names)}


def sequential_allocate(
    states: Sequence[MemberState],
    params: ApportionmentParams,
    tie_policy: Optional[str] = None,
) -> tuple[Allocation, QuotientTrace]:
    """Allocate seats one at a time by highest quotient.

    ``tie_policy`` of None fails closed with a :class:`TieError` when the
    final seat is contested; "lexicographic" resolves by state name and
    "seed=<n>" by a seeded lot. All quotient comparisons are exact.
    """
    check_unique_names(states)
    if params.house_size is None:
        raise ValueError("sequential allocation needs a target house size")
    if tie_policy not in (None, "lexicographic") and not (
        isinstance(tie_policy, str) and tie_policy.startswith("seed=")
    ):
        raise ValueError(f"unknown tie policy {tie_policy!r}")

    b, cap, rule, house = params.base, params.max_cap, params.rounding, params.house_size
    n = len(states)
    floor = min_seats(b, rule, cap)
    fr = feasible_house_range(n, params)
    if house < fr.lo or (fr.hi is not None and house > fr.hi):
        raise InfeasibleError(
            f"house size {house} outside feasible range {fr} for {n} states", fr
        )

    order = _tie_order(states, tie_policy)
    pops = {st.name: st.population for st in states}
    seats = {st.name: floor for st in states}
    heap = []
    removals = []
    for st in states:
        if cap is not None and floor >= cap:
            removals.append((st.name, 0))
            continue
        q = Fraction(st.population) / signpost(floor, b, rule)
        heap.append((-q, order[st.name], st.name))
    heapq.heapify(heap)

    awards = []
    remaining = house - n * floor
    for step in range(1, remaining + 1):
        if not heap:
            raise InfeasibleError("all states capped before the house was filled", fr)
        negq, _, name = heapq.heappop(heap)
        seats[name] += 1
        awards.append(TraceStep(step, name, -negq, seats[name]))
        if cap is not None and seats[name] >= cap:
            removals.append((name, step))
        else:
            q = Fraction(pops[name]) / signpost(seats[name], b, rule)
            heapq.heappush(heap, (-q, order[name], name))

    runners_up = []
    if heap:
        best = -heap[0][0]
        while heap and -heap[0][0] == best:
            negq, _, name = heapq.heappop(heap)
            runners_up.append((name, -negq))

    trace = QuotientTrace(tuple(awards), tuple(removals), tuple(runners_up), floor, house)
    report = detect_tie(trace, house)
    if report is not None and tie_policy is None:
        raise TieError(report)

    if report is not None:
        interval: DivisorInterval = TIE
        ref = report.boundary_divisor
    else:
        hi = awards[-1].quotient if awards else None
        lo = runners_up[0][1] if runners_up else Fraction(0)
        interval = DivisorInterval.between(lo, hi, rule)
        ref = interval.reference_divisor
    rows = [(st, seats[st.name], seat_share(st.population, b, ref, cap)) for st in states]
    return Allocation.build(rows, interval, params), trace


def detect_tie(trace: QuotientTrace, house_size: int) -> Optional[TieReport]:
    """Tie iff the quotient winning the final seat equals the best losing one.

    Tie existence here matches the divisor interval being empty.
    """
    if not trace.awards or not trace.runners_up:
        return None
    last = trace.awards[-1].quotient
    best_losing = trace.runners_up[0][1]
    if last != best_losing:
        return None
    winners = [a.state for a in trace.awards if a.quotient == last]
    tied = frozenset(winners) | frozenset(name for name, _ in trace.runners_up)
    return TieReport(tied, last, len(winners))
