"""The support matroid of an equivalence relation.

The support family of a partition is every subset whose upper approximation
is the whole universe, i.e. every subset meeting each block. It satisfies the
support-set axioms, so it determines a matroid: the partition matroid whose
independent sets are the partial transversals of the blocks. Each closed form
below generates its family directly from the blocks; ``InducedMatroid`` checks
all of them against the generic matroid engine when it is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from operator import or_

from .errors import AxiomViolation, TheoremViolation
from .family import SetFamily, min_elems
from .matroid import Matroid, check_closedset_axioms, check_support_axioms, matroid_from_supports
from .rough import (
    DEFAULT_CAP,
    Partition,
    Subset,
    check_cap,
    is_precise,
    is_rough,
    iter_bits,
    lower_approx,
    refine,
    submasks,
    upper_approx,
)


def _from_choices(P: Partition, choices) -> SetFamily:
    return SetFamily(P.universe, (reduce(or_, combo, 0) for combo in product(*choices)))


def support_family(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Subsets meeting every block: pick a nonempty piece of each block."""
    check_cap(len(P.universe), cap)
    return _from_choices(P, ([s for s in submasks(b) if s] for b in P.block_masks))


def support_family_by_upper(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Subsets whose upper approximation is the universe, by filtering."""
    check_cap(len(P.universe), cap)
    full = P.universe.full_mask
    return SetFamily(P.universe, (x for x in range(full + 1) if P.upper_mask(x) == full))


def support_family_by_lower_dual(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Subsets whose complement has an empty lower approximation."""
    check_cap(len(P.universe), cap)
    full = P.universe.full_mask
    return SetFamily(P.universe, (x for x in range(full + 1) if P.lower_mask(full & ~x) == 0))


def induced_bases(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Exact transversals: one element from each block."""
    check_cap(len(P.universe), cap)
    return _from_choices(P, ([1 << i for i in iter_bits(b)] for b in P.block_masks))


def induced_independents(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Partial transversals: at most one element from each block."""
    check_cap(len(P.universe), cap)
    return _from_choices(P, ([0] + [1 << i for i in iter_bits(b)] for b in P.block_masks))


def induced_rank(P: Partition, X: Subset) -> int:
    """Number of blocks that meet X."""
    x = P._mask(X)
    return sum(1 for b in P.block_masks if b & x)


def hyperplane_predicate(P: Partition, x: int) -> bool:
    """For every y outside X, upper(X) equals U minus the block of y.

    Only proper subsets qualify: for X = U the quantifier is empty, and U is
    never a hyperplane.
    """
    full = P.universe.full_mask
    outside = full & ~x
    if not outside:
        return False
    up = P.upper_mask(x)
    return all(up == full & ~P.block_mask_of(y) for y in iter_bits(outside))


def induced_hyperplanes(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    check_cap(len(P.universe), cap)
    full = P.universe.full_mask
    return SetFamily(P.universe, (x for x in range(full + 1) if hyperplane_predicate(P, x)))


def block_complements(P: Partition) -> SetFamily:
    full = P.universe.full_mask
    return SetFamily(P.universe, (full & ~b for b in P.block_masks))


def induced_closed_family(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """All unions of blocks, the empty union included."""
    check_cap(len(P.universe), cap)
    return _from_choices(P, ((0, b) for b in P.block_masks))


# -- closed-set equivalences -----------------------------------------------

CLOSED_PREDICATES = (
    "closed",
    "union-of-blocks",
    "upper-fixed",
    "lower-fixed",
    "upper-equals-lower",
    "precise",
)


@dataclass(frozen=True)
class EquivalenceReport:
    subset: Subset
    values: tuple[bool, ...]
    rough: bool

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1 and self.rough != self.values[-1]

    @property
    def closed(self) -> bool:
        return self.values[0]

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(CLOSED_PREDICATES, self.values))

    def render(self) -> str:
        flags = " ".join(f"{k}={'yes' if v else 'no'}" for k, v in self.as_dict().items())
        return f"CLOSED X={self.subset} {flags} rough={'yes' if self.rough else 'no'}"


def closed_predicates(P: Partition, X: Subset, matroid: Matroid) -> EquivalenceReport:
    """Evaluate the six closedness characterizations without asserting agreement."""
    x = P._mask(X)
    values = (
        X in matroid.closed_sets,
        all(b & x in (0, b) for b in P.block_masks),
        upper_approx(P, X) == X,
        lower_approx(P, X) == X,
        upper_approx(P, X) == lower_approx(P, X),
        is_precise(P, X),
    )
    return EquivalenceReport(X, values, is_rough(P, X))


def closed_iff_checks(P: Partition, X: Subset, matroid: Matroid | None = None) -> EquivalenceReport:
    """All six closedness characterizations of X, which must agree."""
    if matroid is None:
        matroid = induced_matroid(P).matroid
    report = closed_predicates(P, X, matroid)
    if not report.agree:
        raise TheoremViolation("closed-iff-precise", report.render())
    return report


# -- the support matroid ---------------------------------------------------


class InducedMatroid:
    """Support matroid of a partition, with every closed form checked eagerly.

    Construction raises ``TheoremViolation`` the moment any closed form
    disagrees with its generic recomputation. ``theorems`` lists the
    equivalences that were checked, in order.
    """

    def __init__(self, partition: Partition, *, cap: int = DEFAULT_CAP):
        self.partition = P = partition
        self.cap = cap
        self.theorems: list[str] = []

        S = support_family(P, cap=cap)
        self._agree("supports-upper-definition", S, support_family_by_upper(P, cap=cap))
        self._agree("supports-lower-duality", S, support_family_by_lower_dual(P, cap=cap))

        failed = [r for r in check_support_axioms(S) if not r.passed]
        if failed:
            raise TheoremViolation("support-axioms", " ".join(r.render() for r in failed))
        self.theorems.append("support-axioms")
        try:
            M = matroid_from_supports(S, cap=cap)
        except AxiomViolation as exc:
            raise TheoremViolation("support-matroid", str(exc)) from exc
        self.theorems.append("support-matroid")
        self.supports = S
        self.matroid = M

        self.bases = induced_bases(P, cap=cap)
        self._agree("bases-min-supports", self.bases, min_elems(S))
        self._agree("bases-generic", self.bases, M.bases)

        self.independents = induced_independents(P, cap=cap)
        self._agree("independents-partial-transversals", self.independents, M.independents)

        if M.full_rank != len(P):
            raise TheoremViolation("rank-counts-blocks", f"r(U)={M.full_rank} blocks={len(P)}")
        self.theorems.append("rank-counts-blocks")

        self.hyperplanes = induced_hyperplanes(P, cap=cap)
        self._agree("hyperplanes-block-complements", self.hyperplanes, block_complements(P))
        self._agree("hyperplanes-generic", self.hyperplanes, M.hyperplanes)

        self.closed_sets = induced_closed_family(P, cap=cap)
        self._agree("closed-sets-block-unions", self.closed_sets, M.closed_sets)
        failed = [r for r in check_closedset_axioms(self.closed_sets, cap=cap) if not r.passed]
        if failed:
            raise TheoremViolation("closed-set-axioms", " ".join(r.render() for r in failed))
        self.theorems.append("closed-set-axioms")

    def _agree(self, name: str, closed_form: SetFamily, generic: SetFamily) -> None:
        if closed_form != generic:
            raise TheoremViolation(
                name,
                f"only-closed-form={closed_form - generic} only-generic={generic - closed_form}",
            )
        self.theorems.append(name)

    @property
    def universe(self):
        return self.partition.universe

    @property
    def full_rank(self) -> int:
        return len(self.partition)

    def rank(self, X: Subset) -> int:
        return induced_rank(self.partition, X)

    def __repr__(self):
        return f"InducedMatroid({self.partition})"


def induced_matroid(P: Partition, *, cap: int = DEFAULT_CAP) -> InducedMatroid:
    return InducedMatroid(P, cap=cap)


# -- refinement ------------------------------------------------------------


@dataclass(frozen=True)
class InclusionReport:
    refined: Partition
    refined_supports: SetFamily
    common_supports: SetFamily
    witness: Subset | None

    @property
    def strict(self) -> bool:
        return self.witness is not None

    def render(self) -> str:
        lines = [
            "THEOREM intersection-inclusion PASS",
            f"SIZES refined={len(self.refined_supports)} common={len(self.common_supports)}",
        ]
        if self.strict:
            lines.append(f"INCLUSION strict witness={self.witness}")
        else:
            lines.append("INCLUSION equal")
        return "\n".join(lines)


def intersection_inclusion_check(
    P1: Partition, P2: Partition, *, cap: int = DEFAULT_CAP
) -> InclusionReport:
    """Supports of the common refinement sit inside the supports of both inputs.

    When the inclusion is strict the witness is the smallest missing set,
    ties broken by element order.
    """
    R = refine(P1, P2)
    refined = support_family(R, cap=cap)
    common = support_family(P1, cap=cap) & support_family(P2, cap=cap)
    if not refined <= common:
        raise TheoremViolation("intersection-inclusion", f"escaped={refined - common}")
    extra = (common - refined).masks
    witness = None
    if extra:
        best = min(extra, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
        witness = Subset(R.universe, best)
    return InclusionReport(R, refined, common, witness)
