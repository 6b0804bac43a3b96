"""Exact base-plus-proportional seat apportionment engine."""

from .core import (
    TIE,
    Allocation,
    AllocationEntry,
    ApportionmentParams,
    DivisorInterval,
    EquivalenceClass,
    HouseRange,
    MemberState,
    RoundingRule,
    TieReport,
    as_fraction,
    equivalent_specs,
    feasible_house_range,
    min_seats,
    ratios,
    round_share,
    seat_share,
)
from .data import PopulationDataset, parse_population_file, render_dataset_csv
from .degressive import (
    DpReport,
    check_condition1,
    check_post_rounding,
    check_pre_rounding,
    dp_report,
)
from .divisor import (
    brute_force_oracle,
    divisor_interval,
    evaluate_at_divisor,
    solve,
    total_at_divisor,
)
from .errors import ApportionmentError, DatasetParseError, InfeasibleError, TieError
from .schemes import (
    BaseVariant,
    ScenarioDelta,
    SchemeAConfig,
    accession_scenario,
    compare_allocations,
    scheme_a_base,
    scheme_a_minimum,
    scheme_b_base,
)
from .sequential import QuotientTrace, detect_tie, sequential_allocate, signpost

__version__ = "0.1.0"
