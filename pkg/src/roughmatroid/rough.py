"""Approximation spaces over a finite universe.

Subsets are bitmasks: element ``i`` of the universe is bit ``1 << i``.
A partition stores its blocks as masks in canonical order (ascending by
smallest member), and the lower/upper approximation operators are computed
block-wise from those masks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    CapExceeded,
    ElementNotInUniverse,
    InvalidPartition,
    UniverseMismatch,
)

DEFAULT_CAP = 20
HARD_CAP = 24
DEFAULT_SAMPLES = 20000

_RESERVED = set("{},")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indexes of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask``), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def check_cap(size: int, cap: int) -> None:
    if cap > HARD_CAP:
        raise ValueError(f"exhaustive cap {cap} above hard limit {HARD_CAP}")
    if size > cap:
        raise CapExceeded(size, cap)


@dataclass(frozen=True)
class Universe:
    """Ordered, nonempty ground set of distinct textual labels."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise ValueError("universe must be nonempty")
        for x in labels:
            if not x or x.isspace():
                raise ValueError("element labels must be nonempty")
            if _RESERVED & set(x) or any(c.isspace() for c in x) or x == "-":
                raise ValueError(f"element label {x!r} is not renderable")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.labels)}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return str(label) in self.index

    def position(self, label) -> int:
        try:
            return self.index[str(label)]
        except KeyError:
            raise ElementNotInUniverse(label) from None

    def mask_of(self, labels: Iterable) -> int:
        mask = 0
        for x in labels:
            mask |= 1 << self.position(x)
        return mask

    def subset(self, labels: Iterable = ()) -> Subset:
        return Subset(self, self.mask_of(labels))

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def __repr__(self):
        return f"Universe({list(self.labels)!r})"


@dataclass(frozen=True)
class Subset:
    """A subset of a universe, stored as a membership bitmask."""

    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.universe):
            raise ValueError(f"mask {self.mask:#x} has bits outside the universe")

    def _same(self, other: Subset) -> int:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe is not self.universe and other.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")
        return other.mask

    def __or__(self, other):
        return Subset(self.universe, self.mask | self._same(other))

    def __and__(self, other):
        return Subset(self.universe, self.mask & self._same(other))

    def __sub__(self, other):
        return Subset(self.universe, self.mask & ~self._same(other))

    def __invert__(self):
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def __le__(self, other):
        return self.mask & ~self._same(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __iter__(self):
        return iter(self.universe.labels_of(self.mask))

    def __contains__(self, label):
        return label in self.universe and bool(self.mask >> self.universe.position(label) & 1)

    def __str__(self):
        return "{" + ",".join(self) + "}"

    def __repr__(self):
        return f"Subset({self})"


@dataclass(frozen=True)
class Partition:
    """The quotient U/R of an equivalence relation, as canonical block masks."""

    universe: Universe
    block_masks: tuple[int, ...] = field(repr=False)

    def __init__(self, universe: Universe, blocks: Iterable):
        masks = []
        for b in blocks:
            if isinstance(b, Subset):
                if b.universe != universe:
                    raise UniverseMismatch("block over a different universe")
                masks.append(b.mask)
            elif isinstance(b, int):
                masks.append(b)
            else:
                masks.append(universe.mask_of(b))
        seen = 0
        for m in masks:
            if m == 0:
                raise InvalidPartition("blocks must be nonempty")
            if m & seen:
                raise InvalidPartition("blocks must be pairwise disjoint")
            seen |= m
        if seen != universe.full_mask:
            missing = universe.labels_of(universe.full_mask & ~seen)
            raise InvalidPartition(f"blocks do not cover the universe; missing {list(missing)}")
        masks.sort(key=lambda m: m & -m)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "block_masks", tuple(masks))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable]) -> Partition:
        """Build from label blocks; the universe is taken in first-appearance order."""
        blocks = [[str(x) for x in b] for b in blocks]
        return cls(Universe(x for b in blocks for x in b), blocks)

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        return cls(universe, [1 << i for i in range(len(universe))])

    @classmethod
    def indiscrete(cls, universe: Universe) -> Partition:
        return cls(universe, [universe.full_mask])

    @property
    def blocks(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.block_masks)

    @cached_property
    def _block_index(self) -> tuple[int, ...]:
        owner = [0] * len(self.universe)
        for k, m in enumerate(self.block_masks):
            for i in iter_bits(m):
                owner[i] = k
        return tuple(owner)

    def block_mask_of(self, i: int) -> int:
        return self.block_masks[self._block_index[i]]

    def __len__(self):
        return len(self.block_masks)

    def _mask(self, X: Subset) -> int:
        if X.universe != self.universe:
            raise UniverseMismatch("subset and partition belong to different universes")
        return X.mask

    def lower_mask(self, x: int) -> int:
        out = 0
        for b in self.block_masks:
            if b & ~x == 0:
                out |= b
        return out

    def upper_mask(self, x: int) -> int:
        out = 0
        for b in self.block_masks:
            if b & x:
                out |= b
        return out

    def __str__(self):
        return " | ".join(" ".join(b) for b in self.blocks)


def block_of(P: Partition, x) -> Subset:
    """The equivalence class of ``x``."""
    return Subset(P.universe, P.block_mask_of(P.universe.position(x)))


def lower_approx(P: Partition, X: Subset) -> Subset:
    return Subset(P.universe, P.lower_mask(P._mask(X)))


def upper_approx(P: Partition, X: Subset) -> Subset:
    return Subset(P.universe, P.upper_mask(P._mask(X)))


def is_precise(P: Partition, X: Subset) -> bool:
    m = P._mask(X)
    return P.lower_mask(m) == P.upper_mask(m)


def is_rough(P: Partition, X: Subset) -> bool:
    return not is_precise(P, X)


def refine(P1: Partition, P2: Partition) -> Partition:
    """Common refinement: the partition of the intersected relation."""
    if P1.universe != P2.universe:
        raise UniverseMismatch("partitions belong to different universes")
    return Partition(
        P1.universe,
        [a & b for a in P1.block_masks for b in P2.block_masks if a & b],
    )


# -- property checks -------------------------------------------------------

PROPERTY_NAMES = ("1H", "1L", "2L", "2H", "3L", "3H", "4L", "4H", "5L", "5H", "6H")


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    x: Subset | None = None
    y: Subset | None = None

    def render(self) -> str:
        if self.passed:
            return f"PROPERTY {self.name} PASS"
        parts = [f"PROPERTY {self.name} FAIL"]
        if self.x is not None:
            parts.append(f"X={self.x}")
        if self.y is not None:
            parts.append(f"Y={self.y}")
        return " ".join(parts)


@dataclass(frozen=True)
class PropertyReport:
    results: tuple[PropertyResult, ...]
    exhaustive: bool
    pairs: int
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render(self) -> str:
        head = f"PROPERTIES mode={'exhaustive' if self.exhaustive else 'sampled'} pairs={self.pairs}"
        if self.seed is not None:
            head += f" seed={self.seed}"
        return "\n".join([head] + [r.render() for r in self.results])


def _single_checks(full: int, lo, up):
    """Per-X properties; each returns True when it holds at x."""
    return {
        "1L": lambda x: lo(0) == 0,
        "1H": lambda x: up(full) == full,
        "2L": lambda x: lo(x) & ~x == 0,
        "2H": lambda x: x & ~up(x) == 0,
        "4L": lambda x: lo(x) == full & ~up(full & ~x),
        "4H": lambda x: up(x) == full & ~lo(full & ~x),
        "5L": lambda x: lo(full & ~lo(x)) == full & ~lo(x),
        "5H": lambda x: up(full & ~up(x)) == full & ~up(x),
    }


def _pair_checks(lo, up):
    return {
        "3L": lambda x, y: lo(x & y) == lo(x) & lo(y),
        "3H": lambda x, y: up(x | y) == up(x) | up(y),
        "6H": lambda x, y: (x & ~y != 0) or (up(x) & ~up(y) == 0),
    }


def check_approx_properties(
    P: Partition,
    exhaustive: bool = True,
    *,
    cap: int = DEFAULT_CAP,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> PropertyReport:
    """Evaluate the Pawlak operator laws over all (or sampled) pairs X, Y.

    Normality is checked as ``lower(empty) == empty`` and multiplication as
    ``lower(X & Y) == lower(X) & lower(Y)``.
    """
    n = len(P.universe)
    full = P.universe.full_mask
    if exhaustive:
        check_cap(n, cap)
        size = 1 << n
        lo_table = [P.lower_mask(x) for x in range(size)]
        up_table = [P.upper_mask(x) for x in range(size)]
        lo, up = lo_table.__getitem__, up_table.__getitem__
        xs = range(size)
        pairs = [(x, y) for x in xs for y in xs]
        used_seed = None
    else:
        rng = random.Random(seed)
        lo, up = P.lower_mask, P.upper_mask
        pairs = [(rng.getrandbits(n), rng.getrandbits(n)) for _ in range(samples)]
        xs = [x for x, _ in pairs]
        used_seed = seed

    failures: dict[str, tuple] = {}
    for name, holds in _single_checks(full, lo, up).items():
        for x in xs:
            if not holds(x):
                failures[name] = (x, None)
                break
    for name, holds in _pair_checks(lo, up).items():
        for x, y in pairs:
            if not holds(x, y):
                failures[name] = (x, y)
                break

    U = P.universe
    results = []
    for name in PROPERTY_NAMES:
        if name in failures:
            x, y = failures[name]
            results.append(
                PropertyResult(name, False, Subset(U, x), None if y is None else Subset(U, y))
            )
        else:
            results.append(PropertyResult(name, True))
    return PropertyReport(tuple(results), exhaustive, len(pairs), used_seed)
