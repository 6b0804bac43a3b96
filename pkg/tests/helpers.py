"""Shared golden values and random-instance generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from apportion import ApportionmentParams, MemberState, RoundingRule, solve
from apportion.errors import TieError

# Golden seat vectors for the 2011 EU datasets under (b=5, M=96, H=751, UP),
# population-descending order.
EU27_SEATS = (96, 85, 81, 79, 62, 52, 32, 26, 19, 19, 18, 18, 18, 17,
              16, 15, 12, 12, 12, 11, 10, 8, 8, 7, 6, 6, 6)
EU28_SEATS = (96, 83, 80, 78, 61, 51, 31, 25, 19, 18, 18, 18, 17, 17,
              16, 15, 12, 12, 12, 11, 11, 9, 8, 8, 7, 6, 6, 6)
EU29_SEATS = (96, 82, 79, 77, 60, 51, 31, 25, 19, 18, 18, 18, 17, 17,
              15, 14, 12, 12, 12, 11, 11, 9, 8, 8, 7, 6, 6, 6, 6)

# Population/seat ratio columns (before, after) at divisor 819,000,
# one decimal, in the same order as EU27_SEATS.
EU27_RATIOS = (
    ("852106.8", "852106.8"), ("770259.3", "761342.0"), ("768264.0", "765531.5"),
    ("766950.8", "763801.6"), ("752036.4", "741758.3"), ("739643.2", "733987.1"),
    ("687772.5", "670693.3"), ("656745.2", "637499.6"), ("601222.1", "595006.2"),
    ("594438.5", "570521.3"), ("591356.6", "590984.1"), ("589315.9", "583711.8"),
    ("581298.7", "556351.3"), ("569380.7", "549451.9"), ("550056.4", "523455.6"),
    ("531334.8", "504247.3"), ("470724.2", "461228.2"), ("466706.8", "452077.1"),
    ("463965.8", "445952.2"), ("427330.9", "406168.5"), ("367250.6", "332903.9"),
    ("290290.0", "281046.8"), ("272953.4", "255872.0"), ("201939.0", "191446.7"),
    ("134291.1", "133857.8"), ("89446.6", "83677.7"), ("75027.7", "68828.3"),
)

DEFAULT_PARAMS = ApportionmentParams(Fraction(5), 96, 751, RoundingRule.UP)


def random_states(rng: random.Random, n: int,
                  pop_range=(10**5, 10**8)) -> list:
    return [MemberState(f"S{i:02d}", rng.randint(*pop_range)) for i in range(n)]


def random_instance(rng: random.Random, n_range=(3, 12),
                    pop_range=(10**5, 10**8), max_extra=50):
    """A random feasible instance with integer base; may contain ties."""
    n = rng.randint(*n_range)
    states = random_states(rng, n, pop_range)
    base = rng.randint(0, 8)
    floor = base + 1  # upwards rounding
    if rng.random() < 0.7:
        cap = floor + rng.randint(2, 12)
        extra = rng.randint(0, min(max_extra, n * (cap - floor)))
    else:
        cap = None
        extra = rng.randint(0, max_extra)
    house = n * floor + extra
    params = ApportionmentParams(Fraction(base), cap, house, RoundingRule.UP)
    return states, params


def random_tie_free_instance(rng: random.Random, **kwargs):
    """Resample until the divisor solver finds a nonempty interval."""
    while True:
        states, params = random_instance(rng, **kwargs)
        try:
            solve(states, params)
        except TieError:
            continue
        return states, params
