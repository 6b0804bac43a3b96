"""Core value types and exact arithmetic for base-plus-proportional apportionment.

Every state receives a fixed base of seats plus seats proportional to its
population at a rate of one seat per ``divisor`` persons, rounded by a
selectable rule and capped at a maximum. All shares, ratios and interval
endpoints are exact :class:`fractions.Fraction` values; floating point is
used nowhere in the engine, so ties and interval endpoints are always
decided exactly. Decimal rendering happens only at display time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

RationalLike = Union[int, str, float, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce a number to an exact Fraction.

    Strings may be integers ("5"), decimals ("5.5") or ratios ("135/29").
    Floats are interpreted via their shortest decimal representation so that
    a JSON payload of 5.5 means exactly 11/2.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


class RoundingRule(Enum):
    """Rounding applied to seat shares: upwards, to nearest, or downwards."""

    UP = "up"
    STANDARD = "standard"
    DOWN = "down"


@dataclass(frozen=True, order=True)
class MemberState:
    """A named polity with a positive integral population count."""

    name: str
    population: int

    def __post_init__(self):
        if not self.name or not self.name.strip():
            raise ValueError("state name must be non-empty")
        if not isinstance(self.population, int) or self.population < 1:
            raise ValueError(f"population of {self.name!r} must be a positive integer")


def check_unique_names(states: Sequence[MemberState]) -> None:
    seen = set()
    for st in states:
        if st.name in seen:
            raise ValueError(f"duplicate state name {st.name!r}")
        seen.add(st.name)


@dataclass(frozen=True)
class ApportionmentParams:
    """Full configuration of the method: base, cap, house size and rounding.

    ``max_cap`` may be None for an uncapped run. ``house_size`` may be None
    when an allocation is evaluated at a fixed divisor instead of being
    solved for a target total.
    """

    base: Fraction
    max_cap: Optional[int] = 96
    house_size: Optional[int] = 751
    rounding: RoundingRule = RoundingRule.UP

    def __post_init__(self):
        object.__setattr__(self, "base", as_fraction(self.base))
        if self.base < 0:
            raise ValueError("base must be non-negative")
        if self.max_cap is not None:
            if self.max_cap < 1:
                raise ValueError("max_cap must be a positive integer")
            if self.base >= self.max_cap:
                raise ValueError("base must be smaller than max_cap")
        if self.house_size is not None and self.house_size < 1:
            raise ValueError("house_size must be at least 1")

    def with_base(self, base: RationalLike) -> "ApportionmentParams":
        return ApportionmentParams(as_fraction(base), self.max_cap, self.house_size, self.rounding)


class HouseRange(NamedTuple):
    """Achievable house sizes; ``hi`` is None when there is no cap."""

    lo: int
    hi: Optional[int]

    def __str__(self):
        return f"[{self.lo}, {'unbounded' if self.hi is None else self.hi}]"


class EquivalenceClass(NamedTuple):
    """The three (base, rounding) systems that yield identical allocations.

    ``omitted`` lists class members dropped because their base would be
    negative.
    """

    members: frozenset
    omitted: tuple


def seat_share(
    population: int,
    base: RationalLike,
    divisor: RationalLike,
    max_cap: Optional[int],
) -> Fraction:
    """Pre-rounding seat share: min(base + population/divisor, max_cap)."""
    d = as_fraction(divisor)
    if d <= 0:
        raise ValueError("divisor must be positive")
    share = as_fraction(base) + Fraction(population) / d
    if max_cap is not None and share > max_cap:
        return Fraction(max_cap)
    return share


def round_share(x: RationalLike, rule: RoundingRule) -> tuple[int, bool]:
    """Round a non-negative share to integer seats.

    Returns ``(seats, well_defined)``. ``well_defined`` is False exactly at
    the rule's boundary (an integral share for UP/DOWN, an exact
    half-integer for STANDARD), signalling a potential tie upstream. The
    deterministic value returned at a STANDARD boundary follows the half-up
    convention; solvers must treat such points as tie boundaries, never as
    silently resolved.
    """
    x = as_fraction(x)
    if x < 0:
        raise ValueError("share must be non-negative")
    if rule is RoundingRule.UP:
        return math.ceil(x), x.denominator != 1
    if rule is RoundingRule.DOWN:
        return math.floor(x), x.denominator != 1
    # STANDARD, half-up: floor(x + 1/2); boundary at exact half-integers.
    return math.floor(x + Fraction(1, 2)), x.denominator != 2


_RULE_OFFSET = {
    RoundingRule.UP: Fraction(0),
    RoundingRule.STANDARD: Fraction(1, 2),
    RoundingRule.DOWN: Fraction(1),
}


def equivalent_specs(base: RationalLike, rule: RoundingRule) -> EquivalenceClass:
    """The equivalence class {(b, UP), (b+1/2, STANDARD), (b+1, DOWN)}.

    All three systems produce identical seat vectors whenever every share's
    rounding is well defined. Members whose base would be negative are
    omitted and reported separately.
    """
    anchor = as_fraction(base) - _RULE_OFFSET[rule]
    members, omitted = [], []
    for r, off in _RULE_OFFSET.items():
        candidate = anchor + off
        if candidate >= 0:
            members.append((candidate, r))
        else:
            omitted.append((candidate, r))
    return EquivalenceClass(frozenset(members), tuple(omitted))


def min_seats(base: RationalLike, rule: RoundingRule, max_cap: Optional[int] = None) -> int:
    """Seats awarded to an arbitrarily small positive population.

    This is the unconditional floor every state receives under the given
    base and rounding (6 under base 5 with upwards rounding).
    """
    b = as_fraction(base)
    if rule is RoundingRule.UP:
        floor = math.floor(b) + 1
    elif rule is RoundingRule.STANDARD:
        floor = math.floor(b + Fraction(1, 2))
    else:
        floor = math.floor(b)
    if max_cap is not None:
        floor = min(floor, max_cap)
    return floor


def feasible_house_range(n: int, params: ApportionmentParams) -> HouseRange:
    """Range of house sizes achievable for ``n`` states under ``params``."""
    if n < 1:
        raise ValueError("need at least one state")
    lo = n * min_seats(params.base, params.rounding, params.max_cap)
    hi = None if params.max_cap is None else n * params.max_cap
    return HouseRange(lo, hi)


@dataclass(frozen=True)
class DivisorInterval:
    """The exact set of divisors realizing a target house size.

    ``hi`` is None for an interval unbounded above. A ``tie`` interval is
    empty: no divisor realizes the target. Endpoints arise as critical
    values population/signpost and are exact rationals.
    """

    lo: Fraction
    lo_open: bool
    hi: Optional[Fraction]
    hi_open: bool
    tie: bool = False

    def __post_init__(self):
        if not self.tie and self.hi is not None and self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, d: RationalLike) -> "DivisorInterval":
        d = as_fraction(d)
        return cls(d, False, d, False)

    @classmethod
    def between(cls, lo: Fraction, hi: Optional[Fraction], rule: RoundingRule) -> "DivisorInterval":
        """Interval with endpoint closures implied by the rounding rule.

        With upwards rounding a state's extra seat is held strictly below
        its critical divisor, so the total is still met at the lower
        endpoint but not at the upper one; standard and downwards rounding
        behave the opposite way.
        """
        if rule is RoundingRule.UP:
            lo_open, hi_open = False, True
        else:
            lo_open, hi_open = True, False
        if lo == 0:
            lo_open = True
        if hi is None:
            hi_open = True
        return cls(lo, lo_open, hi, hi_open)

    def contains(self, d: RationalLike) -> bool:
        if self.tie:
            return False
        d = as_fraction(d)
        if d < self.lo or (self.lo_open and d == self.lo):
            return False
        if self.hi is None:
            return True
        return d < self.hi or (not self.hi_open and d == self.hi)

    @property
    def reference_divisor(self) -> Fraction:
        """A representative divisor strictly inside the interval (display only)."""
        if self.tie:
            raise ValueError("a tie interval is empty")
        if self.hi is None:
            return self.lo * 2 if self.lo > 0 else Fraction(1)
        if self.lo == self.hi:
            return self.lo
        return (self.lo + self.hi) / 2


TIE = DivisorInterval(Fraction(0), True, Fraction(0), True, tie=True)


@dataclass(frozen=True)
class TieReport:
    """States whose rounding boundaries coincide at the critical divisor."""

    tied_states: frozenset
    boundary_divisor: Fraction
    seats_contested: int


@dataclass(frozen=True)
class AllocationEntry:
    state: MemberState
    seats: int
    share: Fraction

    @property
    def ratio_before(self) -> Optional[Fraction]:
        """Population per pre-rounding seat share."""
        if self.share <= 0:
            return None
        return Fraction(self.state.population) / self.share

    @property
    def ratio_after(self) -> Optional[Fraction]:
        """Population per rounded seat."""
        if self.seats <= 0:
            return None
        return Fraction(self.state.population, self.seats)


@dataclass(frozen=True)
class Allocation:
    """A complete apportionment, ordered by population descending."""

    entries: tuple
    divisor_interval: DivisorInterval
    total_seats: int
    params: ApportionmentParams

    @classmethod
    def build(cls, rows, interval: DivisorInterval, params: ApportionmentParams) -> "Allocation":
        """Assemble from (state, seats, share) rows; sorts and totals."""
        entries = tuple(
            AllocationEntry(state, seats, share)
            for state, seats, share in sorted(rows, key=lambda r: (-r[0].population, r[0].name))
        )
        return cls(entries, interval, sum(e.seats for e in entries), params)

    def seats_for(self, name: str) -> int:
        for e in self.entries:
            if e.state.name == name:
                return e.seats
        raise KeyError(name)

    @property
    def seat_vector(self) -> tuple:
        return tuple(e.seats for e in self.entries)

    @property
    def capped_states(self) -> tuple:
        m = self.params.max_cap
        if m is None:
            return ()
        return tuple(e.state.name for e in self.entries if e.share == m)


def ratios(allocation: Allocation) -> list:
    """Per-entry (ratio_before, ratio_after) as exact rationals.

    Requires every entry to hold at least one seat and a positive share.
    """
    out = []
    for e in allocation.entries:
        if e.seats < 1 or e.share <= 0:
            raise ValueError(f"{e.state.name} has no seats; ratios are undefined")
        out.append((e.ratio_before, e.ratio_after))
    return out
