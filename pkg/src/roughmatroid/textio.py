"""Partition and family file formats, and the line-oriented report grammar.

Partition files hold one block per line; family files hold one set per line
with ``-`` for the empty set. In both, elements are whitespace-separated and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .family import SetFamily
from .rough import Partition, Universe

EMPTY_TOKEN = "-"
_RESERVED = set("{},")


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _check_label(token: str, lineno: int, source):
    if token == EMPTY_TOKEN:
        raise ParseError(f"'{EMPTY_TOKEN}' must stand alone on its line", lineno, source)
    if _RESERVED & set(token):
        raise ParseError(f"element {token!r} contains one of '{{', '}}', ','", lineno, source)


def parse_partition(text: str, *, universe: Universe | None = None, source=None) -> Partition:
    """Parse a partition file; without ``universe`` it is built in first-appearance order."""
    blocks: list[list[str]] = []
    where: dict[str, int] = {}
    for lineno, tokens in _records(text):
        for tok in tokens:
            _check_label(tok, lineno, source)
            if tok in where:
                raise ParseError(
                    f"element {tok!r} already listed on line {where[tok]}; blocks must be disjoint",
                    lineno, source,
                )
            if universe is not None and tok not in universe:
                raise ParseError(f"element {tok!r} not in universe", lineno, source)
            where[tok] = lineno
        blocks.append(tokens)
    if not blocks:
        raise ParseError("partition has no blocks", None, source)
    if universe is None:
        universe = Universe(where)
    elif len(where) != len(universe):
        missing = [x for x in universe if x not in where]
        raise ParseError(f"partition does not cover the universe; missing {missing}", None, source)
    return Partition(universe, blocks)


def parse_family(text: str, *, universe: Universe | None = None, source=None) -> SetFamily:
    """Parse a family file; without ``universe`` it is the union of all listed elements."""
    sets: list[tuple[int, list[str]]] = []
    order: dict[str, None] = {}
    for lineno, tokens in _records(text):
        if tokens == [EMPTY_TOKEN]:
            sets.append((lineno, []))
            continue
        if len(set(tokens)) != len(tokens):
            raise ParseError("element repeated within one set", lineno, source)
        for tok in tokens:
            _check_label(tok, lineno, source)
            if universe is not None and tok not in universe:
                raise ParseError(f"element {tok!r} not in universe", lineno, source)
            order.setdefault(tok)
        sets.append((lineno, tokens))
    if universe is None:
        if not order:
            raise ParseError("cannot infer a universe from a family with no elements", None, source)
        universe = Universe(order)
    return SetFamily(universe, (universe.mask_of(tokens) for _, tokens in sets))


def parse_labels(text: str, *, source=None) -> Universe:
    labels = []
    for lineno, tokens in _records(text):
        for tok in tokens:
            _check_label(tok, lineno, source)
            labels.append(tok)
    try:
        return Universe(labels)
    except ValueError as exc:
        raise ParseError(str(exc), None, source) from None


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read file: {exc}", None, str(path)) from None


def read_partition(path, *, universe: Universe | None = None) -> Partition:
    return parse_partition(_read(path), universe=universe, source=str(path))


def read_family(path, *, universe: Universe | None = None) -> SetFamily:
    return parse_family(_read(path), universe=universe, source=str(path))


def render_family(name: str, family: SetFamily) -> list[str]:
    return [f"FAMILY {name} size={len(family)}"] + [str(s) for s in family]


def format_family_file(family: SetFamily, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    for s in family:
        lines.append(" ".join(s) if s else EMPTY_TOKEN)
    return "\n".join(lines) + "\n"


def format_partition_file(P: Partition) -> str:
    return "".join(" ".join(b) + "\n" for b in P.blocks)
