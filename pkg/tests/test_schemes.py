from fractions import Fraction

import pytest

from apportion import (
    ApportionmentParams,
    BaseVariant,
    RoundingRule,
    SchemeAConfig,
    accession_scenario,
    compare_allocations,
    scheme_a_base,
    scheme_a_minimum,
    scheme_b_base,
    solve,
)
from apportion.datasets import CROATIA, eu27, eu28, eu29
from helpers import DEFAULT_PARAMS, EU28_SEATS, EU29_SEATS

QUARTER_CAP = SchemeAConfig(Fraction(1, 4), 751)


class TestSchemeAMinimum:
    def test_current_union_sizes(self):
        assert all(scheme_a_minimum(n, QUARTER_CAP) == 6 for n in range(27, 32))
        assert all(scheme_a_minimum(n, QUARTER_CAP) == 5 for n in range(32, 38))

    def test_single_state(self):
        assert scheme_a_minimum(1, QUARTER_CAP) == 187

    def test_budget_respected(self):
        for n in range(1, 188):
            m = scheme_a_minimum(n, QUARTER_CAP)
            assert n * m <= Fraction(1, 4) * 751
            assert n * (m + 1) > Fraction(1, 4) * 751

    def test_cap_validation(self):
        with pytest.raises(ValueError):
            SchemeAConfig(Fraction(0), 751)
        with pytest.raises(ValueError):
            SchemeAConfig(Fraction(1, 1000), 751)
        with pytest.raises(ValueError):
            scheme_a_minimum(0, QUARTER_CAP)
        with pytest.raises(ValueError):
            scheme_a_minimum(200, QUARTER_CAP)


class TestSchemeABase:
    def test_minimum_minus_one(self):
        states = eu27().states
        assert scheme_a_base(states, 6, BaseVariant.MINIMUM_MINUS_ONE, DEFAULT_PARAMS) == 5

    def test_smallest_fraction_gives_exactly_m(self):
        states = eu27().states
        b = scheme_a_base(states, 6, BaseVariant.SMALLEST_FRACTION, DEFAULT_PARAMS)
        assert 0 <= b <= 5
        assert b.denominator <= 1000
        params = ApportionmentParams(b, 96, 751, RoundingRule.UP)
        alloc = solve(states, params, tie_policy="lexicographic")
        assert alloc.seats_for("Malta") == 6
        # A slightly smaller base drops the smallest state below m.
        if b > 0:
            smaller = ApportionmentParams(
                b - Fraction(1, 1000), 96, 751, RoundingRule.UP
            )
            assert solve(states, smaller, tie_policy="lexicographic").seats_for("Malta") < 6

    def test_variant_ordering(self):
        # The searched base never exceeds the fallback m - 1.
        states = eu27().states
        b2 = scheme_a_base(states, 6, BaseVariant.SMALLEST_FRACTION, DEFAULT_PARAMS)
        assert b2 <= 5


class TestSchemeBBase:
    def test_reference_values(self):
        assert scheme_b_base(27) == 5
        assert scheme_b_base(29) == Fraction(135, 29)
        assert scheme_b_base(54) == Fraction(5, 2)

    def test_strictly_decreasing(self):
        values = [scheme_b_base(n) for n in range(1, 60)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_rejects_empty_union(self):
        with pytest.raises(ValueError):
            scheme_b_base(0)


class TestAccession:
    def test_croatia_joins_at_fixed_house(self):
        delta = accession_scenario(eu27().states, [CROATIA], DEFAULT_PARAMS)
        after = {name: seats for name, _, seats in delta.changes}
        assert after["Croatia"] == 11
        assert after["France"] == 83
        assert delta.joined == ("Croatia",)
        assert delta.removed == ()
        assert delta.variant.seat_vector == EU28_SEATS
        assert delta.baseline.total_seats == delta.variant.total_seats == 751

    def test_two_joiners_at_fixed_divisor(self):
        acceding = [s for s in eu29().states if s.name in ("Croatia", "Iceland")]
        delta = accession_scenario(
            eu27().states, acceding, DEFAULT_PARAMS, variant_divisor=844000
        )
        assert delta.variant.seat_vector == EU29_SEATS
        assert delta.variant.total_seats == 751

    def test_identity_delta(self):
        alloc = solve(eu27().states, DEFAULT_PARAMS)
        delta = compare_allocations(alloc, alloc)
        assert delta.joined == () and delta.removed == ()
        assert all(before == after for _, before, after in delta.changes)

    def test_changes_sorted_by_population(self):
        delta = accession_scenario(eu27().states, [CROATIA], DEFAULT_PARAMS)
        names = [name for name, _, _ in delta.changes]
        pops = {s.name: s.population for s in eu28().states}
        assert names == sorted(names, key=lambda n: (-pops[n], n))
