"""Explicit families of subsets and the Upp/Low/Max/Min/Opp combinators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import UniverseMismatch
from .rough import DEFAULT_CAP, Subset, Universe, check_cap


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets of one universe, in ascending mask order."""

    universe: Universe
    masks: tuple[int, ...]

    def __init__(self, universe: Universe, members: Iterable = ()):
        full = universe.full_mask
        masks = set()
        for m in members:
            if isinstance(m, Subset):
                if m.universe != universe:
                    raise UniverseMismatch("member over a different universe")
                m = m.mask
            elif not isinstance(m, int):
                m = universe.mask_of(m)
            if m < 0 or m & ~full:
                raise ValueError(f"mask {m:#x} has bits outside the universe")
            masks.add(m)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "masks", tuple(sorted(masks)))

    @classmethod
    def powerset(cls, universe: Universe, *, cap: int = DEFAULT_CAP) -> SetFamily:
        check_cap(len(universe), cap)
        return cls(universe, range(1 << len(universe)))

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return (Subset(self.universe, m) for m in self.masks)

    def __len__(self):
        return len(self.masks)

    def __bool__(self):
        return bool(self.masks)

    def __contains__(self, item) -> bool:
        if isinstance(item, Subset):
            return item.universe == self.universe and item.mask in self.mask_set
        if isinstance(item, int):
            return item in self.mask_set
        return self.universe.mask_of(item) in self.mask_set

    def _other(self, other: SetFamily) -> frozenset[int]:
        if not isinstance(other, SetFamily):
            raise TypeError(f"expected SetFamily, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("families belong to different universes")
        return other.mask_set

    def __or__(self, other):
        return SetFamily(self.universe, self.mask_set | self._other(other))

    def __and__(self, other):
        return SetFamily(self.universe, self.mask_set & self._other(other))

    def __sub__(self, other):
        return SetFamily(self.universe, self.mask_set - self._other(other))

    def __le__(self, other):
        return self.mask_set <= self._other(other)

    def __lt__(self, other):
        return self.mask_set < self._other(other)

    def __str__(self):
        return "{" + ",".join(str(s) for s in self) + "}"

    def __repr__(self):
        return f"SetFamily({self})"


def upp(A: SetFamily, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """All X containing some member of A."""
    U = A.universe
    check_cap(len(U), cap)
    # only minimal members matter for the existential
    base = min_elems(A).masks
    return SetFamily(U, (x for x in range(1 << len(U)) if any(a & ~x == 0 for a in base)))


def low(A: SetFamily, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """All X contained in some member of A."""
    U = A.universe
    check_cap(len(U), cap)
    found = set()
    for a in max_elems(A).masks:
        sub = a
        while True:
            found.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & a
    return SetFamily(U, found)


def max_elems(A: SetFamily) -> SetFamily:
    """Members not strictly contained in another member."""
    # a strict superset always has a larger mask, so only later members can dominate
    masks = A.masks
    keep = [
        a for i, a in enumerate(masks)
        if not any(a & ~b == 0 for b in masks[i + 1:])
    ]
    return SetFamily(A.universe, keep)


def min_elems(A: SetFamily) -> SetFamily:
    """Members containing no other member strictly."""
    masks = A.masks
    keep = [
        a for i, a in enumerate(masks)
        if not any(b & ~a == 0 for b in masks[:i])
    ]
    return SetFamily(A.universe, keep)


def opp(A: SetFamily, *, cap: int = DEFAULT_CAP) -> SetFamily:
    """Complement of A within the powerset."""
    U = A.universe
    check_cap(len(U), cap)
    present = A.mask_set
    return SetFamily(U, (x for x in range(1 << len(U)) if x not in present))


def is_antichain(A: SetFamily) -> bool:
    masks = A.masks
    return not any(
        a & ~b == 0 for i, a in enumerate(masks) for b in masks[i + 1:]
    )
