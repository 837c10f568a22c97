import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fracmatch.core import Hypergraph, all_k_subsets  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def hypergraphs(draw, max_n=7, min_n=2):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n - 1))
    universe = list(all_k_subsets(n, k))
    picks = draw(st.lists(st.sampled_from(universe), unique=True, max_size=len(universe)))
    return Hypergraph(n, k, tuple(picks))


@pytest.fixture
def star63():
    return Hypergraph(6, 3, tuple(e for e in all_k_subsets(6, 3) if 1 in e))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
