from __future__ import annotations

import itertools

from hypothesis import strategies as st

from qhstruct.quiver import Quiver

ACCEPTANCE_LINES: list[str] = []


@st.composite
def dags(draw, min_n=1, max_n=6, max_arrows=None):
    """Acyclic quivers without parallel arrows, randomly labelled."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_arrows)) if pairs else []
    perm = draw(st.permutations(range(1, n + 1)))
    return Quiver(n, tuple((perm[a - 1], perm[b - 1]) for a, b in chosen))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
