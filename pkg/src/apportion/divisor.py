"""Divisor solver: find the divisors realizing a target house size.

The total T(d) of rounded seat shares is a non-increasing step function of
the divisor d that only changes at critical values population/signpost. The
solver enumerates those critical values exactly and picks out the interval
on which T equals the target; an empty interval is a tie.
"""

from __future__ import annotations

import dataclasses
import math
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
    round_share,
    seat_share,
)
from .errors import InfeasibleError, TieError
from .sequential import sequential_allocate, signpost


def _rounded_seats(
    population: int, params: ApportionmentParams, d: Fraction
) -> tuple[int, Fraction, bool]:
    """(seats, share, well_defined) at a fixed divisor, cap-aware.

    A capped state contributes exactly the maximum; that value is integral
    but deterministic, so it never signals a boundary.
    """
    share = seat_share(population, params.base, d, params.max_cap)
    if params.max_cap is not None and share == params.max_cap:
        return params.max_cap, share, True
    seats, well_defined = round_share(share, params.rounding)
    return seats, share, well_defined


def total_at_divisor(
    states: Sequence[MemberState], params: ApportionmentParams, d: RationalLike
) -> int:
    """T(d): the total of rounded seat shares at divisor d.

    Boundary roundings are resolved by the deterministic conventions of
    :func:`round_share`; use :func:`boundary_states_at` to detect them.
    """
    d = as_fraction(d)
    return sum(_rounded_seats(st.population, params, d)[0] for st in states)


def boundary_states_at(
    states: Sequence[MemberState], params: ApportionmentParams, d: RationalLike
) -> list:
    """Names of states whose rounding at d is not well defined."""
    d = as_fraction(d)
    return [
        st.name
        for st in states
        if not _rounded_seats(st.population, params, d)[2]
    ]


def evaluate_at_divisor(
    states: Sequence[MemberState], params: ApportionmentParams, d: RationalLike
) -> Allocation:
    """Full allocation at a fixed divisor.

    Raises :class:`TieError` when any state sits exactly on its rounding
    boundary at d, since the seat vector there is not well defined.
    """
    check_unique_names(states)
    d = as_fraction(d)
    rows = []
    boundary = []
    for st in states:
        seats, share, well_defined = _rounded_seats(st.population, params, d)
        if not well_defined:
            boundary.append(st.name)
        rows.append((st, seats, share))
    if boundary:
        raise TieError(TieReport(frozenset(boundary), d, len(boundary)))
    return Allocation.build(rows, DivisorInterval.point(d), params)


def _critical_divisors(
    states: Sequence[MemberState], params: ApportionmentParams
) -> list:
    """All divisors at which some state gains a seat, sorted descending.

    Values are population/signpost(k-1) for seat counts k above the floor
    and up to the cap; a capped state's exhausted quotients are excluded.
    With no cap the range is limited by the house size: no state can hold
    more than what remains after every other state's floor.
    """
    b, cap, rule = params.base, params.max_cap, params.rounding
    floor = min_seats(b, rule)
    if cap is not None:
        k_max = cap
    elif params.house_size is not None:
        # One past the most any single state can win, so the best losing
        # claim of a maxed-out state still appears as an interval endpoint.
        k_max = max(floor, params.house_size - (len(states) - 1) * floor + 1)
    else:
        k_max = floor
    out = []
    for st in states:
        p = Fraction(st.population)
        for k in range(floor + 1, k_max + 1):
            out.append((p / signpost(k - 1, b, rule), st.name))
    out.sort(key=lambda t: (-t[0], t[1]))
    return out


def _solve_interval(
    states: Sequence[MemberState], params: ApportionmentParams
) -> tuple[Optional[DivisorInterval], Optional[TieReport]]:
    check_unique_names(states)
    if params.house_size is None:
        raise ValueError("solving needs a target house size")
    n = len(states)
    if n < 1:
        raise ValueError("need at least one state")
    house = params.house_size
    fr = feasible_house_range(n, params)
    if house < fr.lo or (fr.hi is not None and house > fr.hi):
        raise InfeasibleError(
            f"house size {house} outside feasible range {fr} for {n} states", fr
        )

    crits = _critical_divisors(states, params)
    floor = min_seats(params.base, params.rounding, params.max_cap)
    k = house - n * floor
    if k < 0 or k > len(crits):
        raise InfeasibleError(
            f"house size {house} outside feasible range {fr} for {n} states", fr
        )
    if k == 0:
        lo = crits[0][0] if crits else Fraction(0)
        return DivisorInterval.between(lo, None, params.rounding), None
    hi = crits[k - 1][0]
    lo = crits[k][0] if k < len(crits) else Fraction(0)
    if lo == hi:
        above = sum(1 for v, _ in crits if v > hi)
        owners = frozenset(name for v, name in crits if v == hi)
        return None, TieReport(owners, hi, k - above)
    return DivisorInterval.between(lo, hi, params.rounding), None


def divisor_interval(
    states: Sequence[MemberState], params: ApportionmentParams
) -> DivisorInterval:
    """Exact divisor interval realizing the house size, or the TIE marker."""
    interval, report = _solve_interval(states, params)
    if report is not None:
        return TIE
    return interval


def solve(
    states: Sequence[MemberState],
    params: ApportionmentParams,
    tie_policy: Optional[str] = None,
) -> Allocation:
    """Allocation whose total equals the house size, with the maximal interval.

    Fails closed with :class:`TieError` when no divisor realizes the house
    size; an explicit ``tie_policy`` ("lexicographic" or "seed=<n>")
    delegates resolution to the sequential method.
    """
    interval, report = _solve_interval(states, params)
    if report is not None:
        if tie_policy is None:
            raise TieError(report)
        allocation, _ = sequential_allocate(states, params, tie_policy=tie_policy)
        return allocation
    allocation = evaluate_at_divisor(states, params, interval.reference_divisor)
    return dataclasses.replace(allocation, divisor_interval=interval)


def brute_force_oracle(
    states: Sequence[MemberState], params: ApportionmentParams
) -> Allocation:
    """Independent verification oracle for :func:`solve`.

    Enumerates every critical divisor, sorts exactly, and scans T(d) across
    consecutive critical values with its own inline rounding until the
    target total appears. Intended for small instances (n <= 12, house
    <= 200 or so).
    """
    check_unique_names(states)
    if params.house_size is None:
        raise ValueError("the oracle needs a target house size")
    b, cap, rule, house = params.base, params.max_cap, params.rounding, params.house_size
    n = len(states)
    fr = feasible_house_range(n, params)
    if house < fr.lo or (fr.hi is not None and house > fr.hi):
        raise InfeasibleError(
            f"house size {house} outside feasible range {fr} for {n} states", fr
        )

    def seats_at(p: int, d: Fraction) -> int:
        share = b + Fraction(p) / d
        if cap is not None and share >= cap:
            return cap
        if rule is RoundingRule.UP:
            return math.ceil(share)
        if rule is RoundingRule.DOWN:
            return math.floor(share)
        return math.floor(share + Fraction(1, 2))

    def total_at(d: Fraction) -> int:
        return sum(seats_at(st.population, d) for st in states)

    # Enumerate critical divisors on its own, without the solver's helper:
    # every d = p/signpost at which some state's rounded share can change.
    claims = []
    floor_uncapped = min_seats(b, rule)
    k_top = cap if cap is not None else house
    for st in states:
        for seat in range(floor_uncapped + 1, k_top + 1):
            s = signpost(seat - 1, b, rule)
            if s > 0:
                claims.append((Fraction(st.population) / s, st.name))
    values = sorted({v for v, _ in claims}, reverse=True)
    # Gap above all critical values first, then each inter-critical gap.
    prev_total = None
    gaps = []
    if values:
        gaps.append((values[0], None, values[0] * 2))
        for i, hi in enumerate(values):
            lo = values[i + 1] if i + 1 < len(values) else Fraction(0)
            gaps.append((lo, hi, (lo + hi) / 2))
    else:
        gaps.append((Fraction(0), None, Fraction(1)))
    for lo, hi, probe in gaps:
        total = total_at(probe)
        if total == house:
            rows = [
                (st, seats_at(st.population, probe), seat_share(st.population, b, probe, cap))
                for st in states
            ]
            return Allocation.build(rows, DivisorInterval.between(lo, hi, rule), params)
        if total > house:
            # T jumped past the target at the critical value separating this
            # gap from the previous one: an empty interval, i.e. a tie.
            boundary = hi if hi is not None else values[0]
            owners = frozenset(name for v, name in claims if v == boundary)
            contested = house - (prev_total if prev_total is not None else n * min_seats(b, rule, cap))
            raise TieError(TieReport(owners, boundary, contested))
        prev_total = total
    raise InfeasibleError(f"no divisor realizes house size {house}", fr)
