import random
from fractions import Fraction

import pytest

from apportion import (
    ApportionmentParams,
    MemberState,
    RoundingRule,
    detect_tie,
    sequential_allocate,
    signpost,
    solve,
)
from apportion.errors import TieError
from helpers import DEFAULT_PARAMS, EU27_SEATS, random_tie_free_instance

UP, STANDARD, DOWN = RoundingRule.UP, RoundingRule.STANDARD, RoundingRule.DOWN


class TestSignpost:
    def test_upwards_rounding(self):
        # Seat a+1 is claimed as soon as the share exceeds a.
        assert signpost(6, Fraction(5), UP) == 1
        assert signpost(8, Fraction(5), UP) == 3

    def test_downwards_rounding(self):
        assert signpost(4, Fraction(0), DOWN) == 5
        assert signpost(0, Fraction(0), DOWN) == 1

    def test_standard_rounding(self):
        assert signpost(3, Fraction(0), STANDARD) == Fraction(7, 2)

    def test_divisor_method_specialisations(self):
        # With no base, the three rules give the classic divisor sequences.
        assert [signpost(a, Fraction(0), DOWN) for a in range(4)] == [1, 2, 3, 4]
        assert [signpost(a, Fraction(0), UP) for a in range(1, 4)] == [1, 2, 3]
        assert [signpost(a, Fraction(0), STANDARD) for a in range(4)] == \
            [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)]


class TestSequentialAllocate:
    def test_eu27_matches_divisor_solution(self, eu27):
        alloc, trace = sequential_allocate(eu27.states, DEFAULT_PARAMS)
        assert alloc.seat_vector == EU27_SEATS
        assert trace.house_size == 751
        assert trace.floor_seats == 6

    def test_eu27_equivalent_down_spec(self, eu27):
        params = ApportionmentParams(Fraction(6), 96, 751, DOWN)
        alloc, _ = sequential_allocate(eu27.states, params)
        assert alloc.seat_vector == EU27_SEATS

    def test_trace_quotients_nonincreasing(self, eu27):
        _, trace = sequential_allocate(eu27.states, DEFAULT_PARAMS)
        quotients = [step.quotient for step in trace.awards]
        assert quotients == sorted(quotients, reverse=True)
        assert len(trace.awards) == 751 - 27 * trace.floor_seats

    def test_cap_is_respected(self, eu27):
        alloc, trace = sequential_allocate(eu27.states, DEFAULT_PARAMS)
        assert alloc.seats_for("Germany") == 96
        assert "Germany" in {name for name, _ in trace.removals}

    def test_tie_raises_without_policy(self):
        params = ApportionmentParams(Fraction(0), None, 3, UP)
        states = [MemberState("A", 100), MemberState("B", 100)]
        with pytest.raises(TieError):
            sequential_allocate(states, params)

    def test_tie_policies(self):
        params = ApportionmentParams(Fraction(0), None, 3, UP)
        states = [MemberState("A", 100), MemberState("B", 100)]
        alloc, _ = sequential_allocate(states, params, tie_policy="lexicographic")
        assert (alloc.seats_for("A"), alloc.seats_for("B")) == (2, 1)
        seeded, _ = sequential_allocate(states, params, tie_policy="seed=1")
        again, _ = sequential_allocate(states, params, tie_policy="seed=1")
        assert seeded.seat_vector == again.seat_vector

    def test_three_way_tie_detection(self):
        # At house 3 all three states claim a seat at quotient 300:
        # the largest via its second seat, the small pair via their first.
        params = ApportionmentParams(Fraction(0), None, 3, DOWN)
        states = [MemberState("A", 600), MemberState("B", 300), MemberState("C", 300)]
        with pytest.raises(TieError) as err:
            sequential_allocate(states, params)
        assert err.value.report.tied_states == frozenset({"A", "B", "C"})

    def test_no_tie_at_house_four(self):
        # One seat further on, every contested claim is awarded: no tie.
        params = ApportionmentParams(Fraction(0), None, 4, DOWN)
        states = [MemberState("A", 600), MemberState("B", 300), MemberState("C", 300)]
        alloc, trace = sequential_allocate(states, params)
        assert alloc.seat_vector == (2, 1, 1)
        assert detect_tie(trace, 4) is None

    def test_detect_tie_report(self):
        params = ApportionmentParams(Fraction(0), None, 3, UP)
        states = [MemberState("A", 100), MemberState("B", 100)]
        alloc, trace = sequential_allocate(states, params, tie_policy="lexicographic")
        report = detect_tie(trace, 3)
        assert report is not None
        assert report.tied_states == frozenset({"A", "B"})
        assert report.seats_contested == 1

    def test_agrees_with_divisor_solver(self):
        rng = random.Random(99)
        for _ in range(100):
            states, params = random_tie_free_instance(rng)
            alloc, _ = sequential_allocate(states, params)
            assert alloc.seat_vector == solve(states, params).seat_vector

    def test_interval_matches_divisor_solver(self):
        rng = random.Random(17)
        for _ in range(30):
            states, params = random_tie_free_instance(rng, n_range=(3, 6))
            alloc, _ = sequential_allocate(states, params)
            expected = solve(states, params).divisor_interval
            got = alloc.divisor_interval
            assert (got.lo, got.hi) == (expected.lo, expected.hi)
