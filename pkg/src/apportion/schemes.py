"""Rules for evolving the minimum and base as the union grows, and
accession what-if scenarios.

Scheme A caps the proportion of seats handed out via the minimum and takes
the minimum as large as possible under that cap. Scheme B sets the base
directly as a function of the number of states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    Allocation,
    ApportionmentParams,
    MemberState,
    RationalLike,
    RoundingRule,
    as_fraction,
)
from .divisor import evaluate_at_divisor, solve


@dataclass(frozen=True)
class SchemeAConfig:
    """Cap on the proportion of seats allocated via the minimum."""

    cap_fraction: Fraction
    house_size: int

    def __post_init__(self):
        object.__setattr__(self, "cap_fraction", as_fraction(self.cap_fraction))
        if not 0 < self.cap_fraction <= 1:
            raise ValueError("cap_fraction must lie in (0, 1]")
        if self.cap_fraction * self.house_size < 1:
            raise ValueError("cap admits no minimum seat at all")


def scheme_a_minimum(n: int, config: SchemeAConfig) -> int:
    """Largest minimum m with n*m within the capped share of the house."""
    if n < 1:
        raise ValueError("need at least one state")
    m = math.floor(config.cap_fraction * config.house_size / n)
    if m < 1:
        raise ValueError(f"cap {config.cap_fraction} leaves no minimum seat for {n} states")
    return m


class BaseVariant(Enum):
    """How Scheme A derives the base from the minimum."""

    MINIMUM_MINUS_ONE = "minimum_minus_one"
    SMALLEST_FRACTION = "smallest_fraction"


def scheme_a_base(
    states: Sequence[MemberState],
    m: int,
    variant: BaseVariant,
    params: ApportionmentParams,
    granularity: Fraction = Fraction(1, 1000),
) -> Fraction:
    """Base under Scheme A for a minimum of ``m`` seats.

    MINIMUM_MINUS_ONE returns m - 1 (paired with upwards rounding).
    SMALLEST_FRACTION searches, to the given granularity, for the smallest
    base at which a full re-solve with upwards rounding gives the smallest
    state exactly m seats. The divisor is re-solved at every probe, so the
    base and divisor stay coupled.
    """
    if m < 1:
        raise ValueError("minimum must be at least one seat")
    if variant is BaseVariant.MINIMUM_MINUS_ONE:
        return Fraction(m - 1)

    smallest = min(states, key=lambda st: (st.population, st.name))
    base_params = ApportionmentParams(
        Fraction(0), params.max_cap, params.house_size, RoundingRule.UP
    )

    def seats_of_smallest(b: Fraction) -> int:
        trial = ApportionmentParams(b, params.max_cap, params.house_size, RoundingRule.UP)
        # Probes may land on tie boundaries; resolve deterministically so
        # the search can continue.
        return solve(states, trial, tie_policy="lexicographic").seats_for(smallest.name)

    # At b = m - 1 the floor alone guarantees m seats, so a smallest
    # sufficient base exists in [0, m - 1].
    lo, hi = 0, int((m - 1) / granularity)
    if seats_of_smallest(Fraction(0)) >= m:
        best = Fraction(0)
    else:
        while lo < hi:
            mid = (lo + hi) // 2
            if seats_of_smallest(mid * granularity) >= m:
                hi = mid
            else:
                lo = mid + 1
        best = lo * granularity
    if seats_of_smallest(best) != m:
        raise ValueError(
            f"no base at granularity {granularity} gives the smallest state exactly {m} seats"
        )
    return best


def scheme_b_base(n: int) -> Fraction:
    """Base as a fixed budget of 135 base-seats spread over n states."""
    if n < 1:
        raise ValueError("need at least one state")
    return Fraction(135, n)


@dataclass(frozen=True)
class ScenarioDelta:
    """Per-state seat changes between a baseline and a variant allocation."""

    baseline: Allocation
    variant: Allocation
    changes: tuple  # (name, seats_before or None, seats_after or None)
    joined: tuple
    removed: tuple


def compare_allocations(baseline: Allocation, variant: Allocation) -> ScenarioDelta:
    before = {e.state.name: e.seats for e in baseline.entries}
    after = {e.state.name: e.seats for e in variant.entries}
    order = sorted(
        set(before) | set(after),
        key=lambda n: (
            -max(
                next((e.state.population for e in baseline.entries if e.state.name == n), 0),
                next((e.state.population for e in variant.entries if e.state.name == n), 0),
            ),
            n,
        ),
    )
    changes = tuple((n, before.get(n), after.get(n)) for n in order)
    joined = tuple(n for n in order if n not in before)
    removed = tuple(n for n in order if n not in after)
    return ScenarioDelta(baseline, variant, changes, joined, removed)


def accession_scenario(
    baseline_states: Sequence[MemberState],
    acceding_states: Sequence[MemberState],
    params: ApportionmentParams,
    variant_house: Optional[int] = None,
    variant_divisor: Optional[RationalLike] = None,
) -> ScenarioDelta:
    """Solve before and after accession and report the seat deltas.

    The variant either re-solves at the same (or an overridden) house size,
    or, when ``variant_divisor`` is given, evaluates at that fixed divisor
    with the total emerging from the arithmetic.
    """
    baseline = solve(baseline_states, params)
    combined = list(baseline_states) + list(acceding_states)
    if variant_divisor is not None:
        variant = evaluate_at_divisor(combined, params, variant_divisor)
    else:
        vparams = ApportionmentParams(
            params.base, params.max_cap, variant_house or params.house_size, params.rounding
        )
        variant = solve(combined, vparams)
    return compare_allocations(baseline, variant)
