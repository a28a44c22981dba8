from pathlib import Path

import pytest
from hypothesis import strategies as st

from roughmatroid import Partition, SetFamily, Universe

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

_ACCEPTANCE = pytest.StashKey[list]()


def universe(n: int) -> Universe:
    return Universe(range(1, n + 1))


def part(text: str, U: Universe | None = None) -> Partition:
    """'1 2 | 3 4' -> partition; the universe defaults to the listed order."""
    blocks = [b.split() for b in text.split("|")]
    if U is None:
        return Partition.from_blocks(blocks)
    return Partition(U, blocks)


def sets(U: Universe, *texts: str) -> SetFamily:
    """Each text is a whitespace-separated set; '' is the empty set."""
    return SetFamily(U, (U.mask_of(s.split()) for s in texts))


def S(U: Universe, text: str = ""):
    return U.subset(text.split())


@st.composite
def partitions(draw, min_size=1, max_size=6):
    n = draw(st.integers(min_size, max_size))
    word = [0]
    for _ in range(n - 1):
        word.append(draw(st.integers(0, max(word) + 1)))
    U = universe(n)
    blocks = [[] for _ in range(max(word) + 1)]
    for label, k in zip(U.labels, word):
        blocks[k].append(label)
    return Partition(U, blocks)


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def acceptance(request):
    """Record one line per acceptance criterion; printed in the terminal summary."""
    lines = request.config.stash[_ACCEPTANCE]

    def record(number: int, title: str, passed: bool, detail: str = ""):
        line = f"CRITERION {number} {'PASS' if passed else 'FAIL'} {title}"
        if detail:
            line += f" ({detail})"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
