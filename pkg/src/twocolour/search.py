"""Exhaustive search for a link with vanishing linking numbers but nonzero J^2."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional

from .colouring import is_two_colourable
from .diagram import GaussDiagram, serialize
from .invariants import two_colour_writhe_enum

__all__ = ["SearchResult", "two_component_diagrams", "find_lk_zero_witness"]


@dataclass
class SearchResult:
    diagram: Optional[GaussDiagram]
    j2: Optional[tuple[int, ...]]
    examined: int


def two_component_diagrams(chords: int, mixed_only: bool = True) -> Iterator[GaussDiagram]:
    """All 2-component diagrams with ``chords`` chords, in a fixed order.

    With ``mixed_only`` every chord joins the two circles; the first
    circle then reads ``1..k`` and the second a permutation of it, which
    covers every such diagram up to relabelling and basepoint choice on
    the first circle. Otherwise each chord's two endpoints are placed in
    every way across the two circles, skipping relabelled duplicates.
    """
    labels = list(range(1, chords + 1))
    if mixed_only:
        for perm in permutations(labels):
            for over_first in product((True, False), repeat=chords):
                for signs in product((1, -1), repeat=chords):
                    w0 = [(l, over_first[l - 1]) for l in labels]
                    w1 = [(l, not over_first[l - 1]) for l in perm]
                    yield GaussDiagram.build([w0, w1], dict(zip(labels, signs)))
        return
    tokens = [(l, over) for l in labels for over in (True, False)]
    seen = set()
    for split in range(len(tokens) + 1):
        for perm in permutations(tokens):
            for signs in product((1, -1), repeat=chords):
                d = GaussDiagram.build([perm[:split], perm[split:]], dict(zip(labels, signs)))
                key = serialize(d)
                if key not in seen:
                    seen.add(key)
                    yield d


def find_lk_zero_witness(max_chords: int = 6, mixed_only: bool = True) -> SearchResult:
    """First diagram (fewest chords) with zero linking matrix and J^2 not all zero.

    J^2 is computed by enumerating colourings, never by the fast path.
    """
    examined = 0
    for k in range(1, max_chords + 1):
        for d in two_component_diagrams(k, mixed_only):
            examined += 1
            if not is_two_colourable(d):
                continue
            if any(v for row in d.linking_matrix() for v in row):
                continue
            j2 = two_colour_writhe_enum(d)
            if any(j2):
                return SearchResult(d, j2, examined)
    return SearchResult(None, None, examined)
