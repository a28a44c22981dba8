"""Brute-force recomputation of every induced structure from first definitions.

Nothing here touches the bitmask fast paths. Subsets are handled as frozensets
of labels, the equivalence relation as a set of ordered pairs, and every
operator is evaluated element by element. ``cross_validate`` diffs the fast
closed forms and the generic matroid engine against these results.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import RoughMatroidError
from .family import SetFamily, low, max_elems, min_elems, opp
from .induced import (
    block_complements,
    closed_predicates,
    induced_bases,
    induced_closed_family,
    induced_hyperplanes,
    induced_independents,
    induced_rank,
    support_family,
)
from .matroid import matroid_from_supports
from .rough import DEFAULT_CAP, Partition, Subset, Universe, check_cap

log = logging.getLogger(__name__)

MAX_SWEEP = 7


def enumerate_subsets(U: Universe, *, cap: int = DEFAULT_CAP) -> Iterator[Subset]:
    """Every subset of U exactly once, in ascending mask order."""
    check_cap(len(U), cap)
    for mask in range(1 << len(U)):
        yield Subset(U, mask)


def all_partitions(U: Universe) -> Iterator[Partition]:
    """Every partition of U, generated from restricted growth strings."""
    for rgs in restricted_growth_strings(len(U)):
        yield _partition_from_rgs(U, rgs)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Sequences a with a[0] = 0 and a[i] <= 1 + max(a[:i]), lexicographically."""
    if n <= 0:
        return
    word = [0] * n

    def extend(i: int, top: int):
        if i == n:
            yield tuple(word)
            return
        for v in range(top + 2):
            word[i] = v
            yield from extend(i + 1, max(top, v))

    yield from extend(1, 0)


def _partition_from_rgs(U: Universe, rgs) -> Partition:
    blocks: list[list[str]] = [[] for _ in range(max(rgs) + 1)]
    for label, k in zip(U.labels, rgs):
        blocks[k].append(label)
    return Partition(U, blocks)


class BruteForce:
    """Definitions evaluated literally over frozensets of labels."""

    def __init__(self, P: Partition, *, cap: int = DEFAULT_CAP):
        self.universe = U = P.universe
        self.points = frozenset(U.labels)
        self.related = frozenset(
            (x, y) for block in P.blocks for x in block for y in block
        )
        self.powerset = [frozenset(s) for s in enumerate_subsets(U, cap=cap)]

    def rn(self, x: str) -> frozenset[str]:
        return frozenset(y for y in self.points if (x, y) in self.related)

    def upper(self, X: frozenset[str]) -> frozenset[str]:
        return frozenset(x for x in self.points if self.rn(x) & X)

    def lower(self, X: frozenset[str]) -> frozenset[str]:
        return frozenset(x for x in self.points if self.rn(x) <= X)

    def supports(self) -> list[frozenset[str]]:
        return [X for X in self.powerset if self.upper(X) == self.points]

    @staticmethod
    def minimal(family):
        return [X for X in family if not any(Y < X for Y in family)]

    @staticmethod
    def maximal(family):
        return [X for X in family if not any(X < Y for Y in family)]

    def lower_closure(self, family):
        return [X for X in self.powerset if any(X <= A for A in family)]

    def independents(self):
        return self.lower_closure(self.minimal(self.supports()))

    def rank_table(self) -> dict[frozenset[str], int]:
        ind = self.independents()
        return {X: max(len(I) for I in ind if I <= X) for X in self.powerset}

    def closed_sets(self, rank=None):
        rank = rank or self.rank_table()
        closed = []
        for X in self.powerset:
            cl = frozenset(e for e in self.points if rank[X | {e}] == rank[X])
            if cl == X:
                closed.append(X)
        return closed

    def hyperplanes(self, rank=None, closed=None):
        rank = rank or self.rank_table()
        closed = closed if closed is not None else self.closed_sets(rank)
        top = rank[self.points]
        return [X for X in closed if rank[X] == top - 1]

    def family(self, sets) -> SetFamily:
        return SetFamily(self.universe, (self.universe.mask_of(s) for s in sets))


def brute_force_supports(P: Partition, *, cap: int = DEFAULT_CAP) -> SetFamily:
    oracle = BruteForce(P, cap=cap)
    return oracle.family(oracle.supports())


@dataclass(frozen=True)
class Diff:
    """Disagreement between the fast routes of one structure and the oracle.

    For ``rank`` and ``closed-iff``, whose values are not families, both sides
    list the subsets on which some fast route disagrees with the oracle.
    """

    name: str
    only_in_fast: SetFamily
    only_in_oracle: SetFamily
    routes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.only_in_fast and not self.only_in_oracle

    def render(self) -> str:
        if self.passed:
            return f"DIFF {self.name} PASS"
        parts = [f"DIFF {self.name} FAIL"]
        if self.routes:
            parts.append("routes=" + ",".join(self.routes))
        parts.append(f"only-in-fast={self.only_in_fast}")
        parts.append(f"only-in-oracle={self.only_in_oracle}")
        return " ".join(parts)


def _diff(name: str, routes: dict[str, SetFamily], truth: SetFamily) -> Diff:
    U = truth.universe
    fast_extra = SetFamily(U)
    oracle_extra = SetFamily(U)
    bad = []
    for route, fam in routes.items():
        if fam != truth:
            bad.append(route)
            fast_extra = fast_extra | (fam - truth)
            oracle_extra = oracle_extra | (truth - fam)
    return Diff(name, fast_extra, oracle_extra, tuple(bad))


def cross_validate(P: Partition, *, cap: int = DEFAULT_CAP) -> list[Diff]:
    """Diff S, B, I, rank, H, L and the closed-set equivalences against the oracle."""
    U = P.universe
    check_cap(len(U), cap)
    oracle = BruteForce(P, cap=cap)
    o_rank = oracle.rank_table()
    o_closed = oracle.closed_sets(o_rank)
    empty = SetFamily(U)

    S = support_family(P, cap=cap)
    try:
        M = matroid_from_supports(S, cap=cap)
    except RoughMatroidError as exc:
        log.warning("generic matroid unavailable for %s: %s", P, exc)
        M = None

    def generic(attr):
        if M is None:
            return empty
        try:
            return attr(M)
        except RoughMatroidError as exc:
            log.warning("generic %s failed for %s: %s", attr, P, exc)
            return empty

    diffs = [
        _diff("S", {
            "closed-form": S,
            "generic": generic(lambda m: m.support_sets),
        }, oracle.family(oracle.supports())),
        _diff("B", {
            "closed-form": induced_bases(P, cap=cap),
            "min-supports": min_elems(S),
            "generic": generic(lambda m: m.bases),
        }, oracle.family(oracle.maximal(oracle.independents()))),
        _diff("I", {
            "closed-form": induced_independents(P, cap=cap),
            "low-min-supports": low(min_elems(S), cap=cap),
            "generic": generic(lambda m: m.independents),
        }, oracle.family(oracle.independents())),
    ]

    rank_bad = set()
    rank_routes = set()
    for X in enumerate_subsets(U, cap=cap):
        truth = o_rank[frozenset(X)]
        if induced_rank(P, X) != truth:
            rank_bad.add(X.mask)
            rank_routes.add("closed-form")
        if M is None or M.rank(X) != truth:
            rank_bad.add(X.mask)
            rank_routes.add("generic")
    bad_family = SetFamily(U, rank_bad)
    diffs.append(Diff("rank", bad_family, bad_family, tuple(sorted(rank_routes))))

    def generic_hyperplanes(m):
        top = m.full_rank - 1
        return SetFamily(U, (x for x in m.closed_sets.masks if m.rank_mask(x) == top))

    diffs.append(_diff("H", {
        "predicate": induced_hyperplanes(P, cap=cap),
        "block-complements": block_complements(P),
        "max-opp-supports": max_elems(opp(S, cap=cap)),
        "generic": generic(generic_hyperplanes),
    }, oracle.family(oracle.hyperplanes(o_rank, o_closed))))

    diffs.append(_diff("L", {
        "block-unions": induced_closed_family(P, cap=cap),
        "generic": generic(lambda m: m.closed_sets),
    }, oracle.family(o_closed)))

    truth_closed = set(oracle.family(o_closed).masks)
    fast_extra, oracle_extra = set(), set()
    for X in enumerate_subsets(U, cap=cap):
        is_closed = X.mask in truth_closed
        if M is None:
            (oracle_extra if is_closed else fast_extra).add(X.mask)
            continue
        report = closed_predicates(P, X, M)
        verdicts = set(report.values) | {not report.rough}
        if verdicts != {is_closed}:
            (oracle_extra if is_closed else fast_extra).add(X.mask)
    diffs.append(Diff("closed-iff", SetFamily(U, fast_extra), SetFamily(U, oracle_extra)))
    return diffs


@dataclass(frozen=True)
class SweepSummary:
    n: int
    partitions: int
    failures: int
    failed: tuple[str, ...] = ()

    def render(self) -> str:
        return f"SWEEP n={self.n} partitions={self.partitions} failures={self.failures}"


def sweep_universe(n: int) -> Universe:
    return Universe(str(i) for i in range(1, n + 1))


def _check_rgs(args) -> tuple[str, list[str]]:
    n, rgs = args
    P = _partition_from_rgs(sweep_universe(n), rgs)
    return str(P), [d.render() for d in cross_validate(P) if not d.passed]


def sweep_all_partitions(n: int, *, workers: int = 1) -> SweepSummary:
    """Cross-validate every partition of the universe {1..n}."""
    if not isinstance(n, int) or not 1 <= n <= MAX_SWEEP:
        raise ValueError(f"sweep size must be between 1 and {MAX_SWEEP}, got {n!r}")
    jobs = [(n, rgs) for rgs in restricted_growth_strings(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_rgs, jobs, chunksize=16))
    else:
        results = [_check_rgs(job) for job in jobs]
    failed = []
    for name, bad in results:
        if bad:
            log.error("partition %s: %s", name, "; ".join(bad))
            failed.append(name)
    return SweepSummary(n, len(results), len(failed), tuple(failed))
