import random

import pytest
from hypothesis import strategies as st

from twocolour.diagram import GaussDiagram, parse

TREFOIL = "O1+ O2+ U1+ U2+"
HOPF = "O1+ U2+ / O2+ U1+"
VIRTUAL_HOPF = "O1+ / U1+"
WITNESS = "O1+ O2+ O3- O4- / U1+ U2+ U4- U3-"


@pytest.fixture
def trefoil():
    return parse(TREFOIL)


@pytest.fixture
def hopf():
    return parse(HOPF)


@pytest.fixture
def virtual_hopf():
    return parse(VIRTUAL_HOPF)


@st.composite
def diagrams(draw, max_components=4, max_chords=6, nondegenerate=False, min_components=1):
    n = draw(st.integers(min_components, max_components))
    k = draw(st.integers(0, max_chords))
    words = [[] for _ in range(n)]
    signs = {}
    for label in range(1, k + 1):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        over_first = draw(st.booleans())
        words[i].insert(draw(st.integers(0, len(words[i]))), (label, over_first))
        words[j].insert(draw(st.integers(0, len(words[j]))), (label, not over_first))
        signs[label] = draw(st.sampled_from((1, -1)))
    d = GaussDiagram.build(words, signs)
    if nondegenerate:
        # pad odd circles with kinks joining them pairwise, keeps the sample non-degenerate
        odd = [i for i, w in enumerate(d.words) if len(w) % 2]
        words = [list(w) for w in d.words]
        label = k
        for a, b in zip(odd[::2], odd[1::2]):
            label += 1
            words[a].append((label, True))
            words[b].append((label, False))
            signs[label] = draw(st.sampled_from((1, -1)))
        d = GaussDiagram.build(words, signs)
    return d


def brute_force_colouring_count(d):
    """Count colourings of every interval that flip colour at each endpoint."""
    intervals = [(i, k) for i, w in enumerate(d.words) for k in range(max(len(w), 1))]
    count = 0
    for mask in range(1 << len(intervals)):
        colour = {iv: (mask >> t) & 1 for t, iv in enumerate(intervals)}
        ok = True
        for i, w in enumerate(d.words):
            L = len(w)
            for k in range(L):
                # interval k enters endpoint k, interval k+1 leaves it
                if L and colour[(i, k)] == colour[(i, (k + 1) % L)]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def seeded_rng(seed=0):
    return random.Random(seed)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
