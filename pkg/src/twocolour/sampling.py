"""Seeded random Gauss diagrams for tests, fuzzing and searches."""

from __future__ import annotations

import random
from typing import Optional

from .diagram import GaussDiagram

__all__ = ["random_diagram", "random_nondegenerate"]


def random_diagram(rng: random.Random, components: int, chords: int,
                   mixed_bias: float = 0.5) -> GaussDiagram:
    """Scatter ``chords`` signed chords over ``components`` circles.

    With probability ``mixed_bias`` a chord joins two distinct circles
    (when there are at least two).
    """
    words: list[list[tuple[int, bool]]] = [[] for _ in range(components)]
    signs = {}
    for label in range(1, chords + 1):
        i = rng.randrange(components)
        j = i
        if components > 1 and rng.random() < mixed_bias:
            j = rng.choice([k for k in range(components) if k != i])
        over_on_i = rng.random() < 0.5
        words[i].insert(rng.randint(0, len(words[i])), (label, over_on_i))
        words[j].insert(rng.randint(0, len(words[j])), (label, not over_on_i))
        signs[label] = rng.choice((1, -1))
    return GaussDiagram.build(words, signs)


def random_nondegenerate(rng: random.Random, components: int, chords: int,
                         mixed_bias: float = 0.5, tries: int = 1000) -> Optional[GaussDiagram]:
    """Like ``random_diagram`` but every circle has an even number of endpoints."""
    for _ in range(tries):
        d = random_diagram(rng, components, chords, mixed_bias)
        if all(n % 2 == 0 for n in d.component_lengths()):
            return d
    return None
