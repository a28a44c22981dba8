"""Pawlak rough sets and the support matroid induced by an equivalence relation."""

from .errors import (
    AxiomViolation,
    CapExceeded,
    ElementNotInUniverse,
    InvalidPartition,
    ParseError,
    RoughMatroidError,
    TheoremViolation,
    UniverseMismatch,
)
from .family import SetFamily, low, max_elems, min_elems, opp, upp
from .induced import (
    EquivalenceReport,
    InclusionReport,
    InducedMatroid,
    closed_iff_checks,
    induced_bases,
    induced_closed_family,
    induced_hyperplanes,
    induced_independents,
    induced_matroid,
    induced_rank,
    intersection_inclusion_check,
    support_family,
)
from .matroid import (
    AxiomReport,
    Matroid,
    check_closedset_axioms,
    check_independence_axioms,
    check_support_axioms,
    matroid_from_supports,
)
from .oracle import Diff, SweepSummary, cross_validate, enumerate_subsets, sweep_all_partitions
from .rough import (
    DEFAULT_CAP,
    HARD_CAP,
    Partition,
    PropertyReport,
    Subset,
    Universe,
    block_of,
    check_approx_properties,
    is_precise,
    is_rough,
    lower_approx,
    refine,
    upper_approx,
)

__version__ = "0.1.0"
