"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RoughMatroidError(Exception):
    """Base class for all errors raised by roughmatroid."""


class UniverseMismatch(RoughMatroidError, ValueError):
    """Operands live over different universes."""


class ElementNotInUniverse(RoughMatroidError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"element not in universe: {self.label!r}"


class CapExceeded(RoughMatroidError, ValueError):
    """An exhaustive operation was asked to enumerate a universe above the cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"universe of size {size} exceeds exhaustive cap {cap}")
        self.size = size
        self.cap = cap


class InvalidPartition(RoughMatroidError, ValueError):
    pass


class AxiomViolation(RoughMatroidError, ValueError):
    """A family failed an axiom system it was required to satisfy.

    ``reports`` holds the full list of AxiomReports, failing ones included.
    """

    def __init__(self, reports):
        self.reports = list(reports)
        failed = [r for r in self.reports if not r.passed]
        super().__init__("; ".join(r.render() for r in failed) or "axiom violation")

    @property
    def failed(self):
        return [r for r in self.reports if not r.passed]


class TheoremViolation(RoughMatroidError, AssertionError):
    """Two computations that a theorem says must agree did not.

    This is never expected on correct code; it signals a bug.
    """

    def __init__(self, name: str, witness: str = ""):
        self.name = name
        self.witness = witness
        super().__init__(f"{name}: {witness}" if witness else name)

    def render(self) -> str:
        line = f"THEOREM {self.name} FAIL"
        return f"{line} {self.witness}" if self.witness else line


class ParseError(RoughMatroidError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = self.source or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        return f"{where}: {self.message}"
