"""Matroids over an explicit independent-set family.

Construction validates the independence axioms. Rank, closure, closed sets,
support sets and hyperplanes are derived from the family; on universes within
the exhaustive cap the rank of every subset is tabulated once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import AxiomViolation, TheoremViolation, UniverseMismatch
from .family import SetFamily, low, max_elems, min_elems, opp, upp
from .rough import DEFAULT_CAP, Subset, check_cap, iter_bits


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    passed: bool
    witness: tuple[Subset, ...] = ()
    element: str | None = None

    def __post_init__(self):
        if self.passed and (self.witness or self.element is not None):
            raise ValueError("a passing report carries no witness")
        if not self.passed and not (self.witness or self.element is not None):
            raise ValueError("a failing report needs a witness")

    def render(self) -> str:
        if self.passed:
            return f"AXIOM {self.axiom} PASS"
        parts = [f"AXIOM {self.axiom} FAIL"]
        parts += [f"{tag}={s}" for tag, s in zip(("A", "B", "C"), self.witness)]
        if self.element is not None:
            parts.append(f"e={self.element}")
        return " ".join(parts)


def _fail(axiom, U, *masks, element=None):
    return AxiomReport(axiom, False, tuple(Subset(U, m) for m in masks), element)


def _ok(axiom):
    return AxiomReport(axiom, True)


def check_independence_axioms(A: SetFamily) -> list[AxiomReport]:
    """I1 (empty set independent), I2 (hereditary), I3 (augmentation)."""
    U = A.universe
    present = A.mask_set
    reports = []

    if 0 in present:
        reports.append(_ok("I1"))
    else:
        # witness is the missing empty set
        reports.append(_fail("I1", U, 0))

    # hereditary iff closed under deleting one element at a time
    bad = next(
        ((a, a ^ (1 << i)) for a in A.masks for i in iter_bits(a) if a ^ (1 << i) not in present),
        None,
    )
    reports.append(_ok("I2") if bad is None else _fail("I2", U, *bad))

    bad = None
    for i1 in A.masks:
        for i2 in A.masks:
            if i1.bit_count() >= i2.bit_count():
                continue
            if not any(i1 | (1 << e) in present for e in iter_bits(i2 & ~i1)):
                bad = (i1, i2)
                break
        if bad:
            break
    reports.append(_ok("I3") if bad is None else _fail("I3", U, *bad))
    return reports


def check_support_axioms(S: SetFamily) -> list[AxiomReport]:
    """S1 (nonempty), S2 (upward closed), S3 (exchange by deletion)."""
    U = S.universe
    present = S.mask_set
    full = U.full_mask
    reports = [_ok("S1") if present else _fail("S1", U, 0)]

    # upward closed iff closed under adding one element at a time
    bad = next(
        ((s, s | (1 << i)) for s in S.masks for i in iter_bits(full & ~s) if s | (1 << i) not in present),
        None,
    )
    reports.append(_ok("S2") if bad is None else _fail("S2", U, *bad))

    bad = None
    for s1 in S.masks:
        for s2 in S.masks:
            if s1.bit_count() <= s2.bit_count():
                continue
            if not any(s1 & ~(1 << e) in present for e in iter_bits(s1 & ~s2)):
                bad = (s1, s2)
                break
        if bad:
            break
    reports.append(_ok("S3") if bad is None else _fail("S3", U, *bad))
    return reports


def check_closedset_axioms(L: SetFamily, *, cap: int = DEFAULT_CAP) -> list[AxiomReport]:
    """F1 (U closed), F2 (meets), F3 (covers of F partition U - F)."""
    U = L.universe
    check_cap(len(U), cap)
    full = U.full_mask
    present = L.mask_set
    reports = [_ok("F1") if full in present else _fail("F1", U, full)]

    bad = None
    for i, f1 in enumerate(L.masks):
        for f2 in L.masks[i + 1:]:
            if f1 & f2 not in present:
                bad = (f1, f2)
                break
        if bad:
            break
    reports.append(_ok("F2") if bad is None else _fail("F2", U, *bad))

    bad = None
    element = None
    for f in L.masks:
        above = SetFamily(U, (g for g in L.masks if g != f and f & ~g == 0))
        covered = 0
        done = []
        for g in min_elems(above).masks:
            diff = g & ~f
            clash = next((h for h in done if h & diff), None)
            if clash is not None:
                bad = (f, clash, g)
                break
            covered |= diff
            done.append(g)
        if bad:
            break
        if covered != full & ~f:
            bad = (f,)
            element = U.labels[next(iter_bits(full & ~f & ~covered))]
            break
    reports.append(_ok("F3") if bad is None else _fail("F3", U, *bad, element=element))
    return reports


class Matroid:
    """A matroid given by its independent sets; invalid families are rejected."""

    def __init__(self, independents: SetFamily, *, cap: int = DEFAULT_CAP):
        reports = check_independence_axioms(independents)
        if not all(r.passed for r in reports):
            raise AxiomViolation(reports)
        self.universe = independents.universe
        self.independents = independents
        self.cap = cap

    def __repr__(self):
        return f"Matroid(universe={list(self.universe)}, independents={len(self.independents)})"

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.independents == other.independents

    def __hash__(self):
        return hash(self.independents)

    def _mask(self, X: Subset) -> int:
        if X.universe != self.universe:
            raise UniverseMismatch("subset and matroid belong to different universes")
        return X.mask

    @cached_property
    def _rank_table(self) -> list[int] | None:
        n = len(self.universe)
        if n > self.cap:
            return None
        present = self.independents.mask_set
        table = [0] * (1 << n)
        for x in range(1, 1 << n):
            if x in present:
                table[x] = x.bit_count()
            else:
                table[x] = max(table[x & ~(1 << i)] for i in iter_bits(x))
        return table

    def rank_mask(self, x: int) -> int:
        table = self._rank_table
        if table is not None:
            return table[x]
        return max(i.bit_count() for i in self.independents.masks if i & ~x == 0)

    def closure_mask(self, x: int) -> int:
        r = self.rank_mask(x)
        out = x
        for e in iter_bits(self.universe.full_mask & ~x):
            if self.rank_mask(x | (1 << e)) == r:
                out |= 1 << e
        return out

    @cached_property
    def bases(self) -> SetFamily:
        found = max_elems(self.independents)
        sizes = {m.bit_count() for m in found.masks}
        if len(sizes) != 1:
            raise TheoremViolation("equicardinal-bases", str(found))
        return found

    def rank(self, X: Subset) -> int:
        return self.rank_mask(self._mask(X))

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.universe.full_mask)

    def closure(self, X: Subset) -> Subset:
        return Subset(self.universe, self.closure_mask(self._mask(X)))

    def is_closed(self, X: Subset) -> bool:
        x = self._mask(X)
        return self.closure_mask(x) == x

    @cached_property
    def closed_sets(self) -> SetFamily:
        check_cap(len(self.universe), self.cap)
        return SetFamily(
            self.universe,
            (x for x in range(1 << len(self.universe)) if self.closure_mask(x) == x),
        )

    @cached_property
    def support_sets(self) -> SetFamily:
        return upp(self.bases, cap=self.cap)

    @cached_property
    def hyperplanes(self) -> SetFamily:
        """Closed sets of corank one, cross-checked against Max(Opp(S))."""
        target = self.full_rank - 1
        by_rank = SetFamily(
            self.universe,
            (x for x in self.closed_sets.masks if self.rank_mask(x) == target),
        )
        by_supports = max_elems(opp(self.support_sets, cap=self.cap))
        if by_rank != by_supports:
            raise TheoremViolation(
                "hyperplanes-max-opp-supports",
                f"closed-corank-1={by_rank} max-opp-supports={by_supports}",
            )
        return by_rank


def bases(M: Matroid) -> SetFamily:
    return M.bases


def rank(M: Matroid, X: Subset) -> int:
    return M.rank(X)


def closure(M: Matroid, X: Subset) -> Subset:
    return M.closure(X)


def is_closed(M: Matroid, X: Subset) -> bool:
    return M.is_closed(X)


def closed_sets(M: Matroid) -> SetFamily:
    return M.closed_sets


def support_sets(M: Matroid) -> SetFamily:
    return M.support_sets


def hyperplanes(M: Matroid) -> SetFamily:
    return M.hyperplanes


def matroid_from_supports(S: SetFamily, *, cap: int = DEFAULT_CAP) -> Matroid:
    """The matroid whose independents are Low(Min(S)); S must satisfy S1-S3."""
    reports = check_support_axioms(S)
    if not all(r.passed for r in reports):
        raise AxiomViolation(reports)
    M = Matroid(low(min_elems(S), cap=cap), cap=cap)
    if M.bases != min_elems(S):
        raise TheoremViolation("bases-min-supports", f"bases={M.bases} min={min_elems(S)}")
    if M.support_sets != S:
        raise TheoremViolation("support-round-trip", f"recovered={M.support_sets}")
    return M
