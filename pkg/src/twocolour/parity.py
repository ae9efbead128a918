"""Parity schemes on the chords of a Gauss diagram.

The 2-colour parity compares the colours of the two intervals entering a
crossing: the chord is odd exactly when those colours agree. On a single
circle this says an odd number of endpoints separates the two ends of the
chord, which is the Gaussian parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colouring import NotTwoColourable, TwoColouring, require_colourable
from .diagram import GaussDiagram, SimpleGaussDiagram

__all__ = [
    "ParityAssignment",
    "NotAKnot",
    "OddLinkingNumbers",
    "two_colour_parity",
    "free_two_colour_parity",
    "gaussian_parity",
    "naive_parity",
    "ip_self_parity",
    "project",
    "NotTwoColourable",
]


class NotAKnot(ValueError):
    pass


class OddLinkingNumbers(ValueError):
    pass


@dataclass(frozen=True)
class ParityAssignment:
    values: dict[int, int]
    scheme: str = field(default="")

    def __getitem__(self, label: int) -> int:
        return self.values[label]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def odd(self) -> set[int]:
        return {l for l, v in self.values.items() if v}

    @property
    def even(self) -> set[int]:
        return {l for l, v in self.values.items() if not v}


def _colour_rule(d, c: TwoColouring) -> dict[int, int]:
    require_colourable(d, c)
    bits = c.bits
    out = {}
    for label, (i, p), (j, q) in d.chord_positions():
        out[label] = int((bits[i] ^ p ^ bits[j] ^ q) & 1 == 0)
    return out


def two_colour_parity(d: GaussDiagram, c: TwoColouring) -> ParityAssignment:
    return ParityAssignment(_colour_rule(d, c), f"two-colour({c})")


def free_two_colour_parity(s: SimpleGaussDiagram, c: TwoColouring) -> ParityAssignment:
    """The same rule on a simple Gauss diagram; it reads no decorations."""
    return ParityAssignment(_colour_rule(s, c), f"free-two-colour({c})")


def gaussian_parity(d: GaussDiagram) -> ParityAssignment:
    if d.n_components != 1:
        raise NotAKnot(f"Gaussian parity needs one component, got {d.n_components}")
    values = {}
    for label, (_, p), (_, q) in d.chord_positions():
        between = abs(p - q) - 1
        values[label] = between & 1
    return ParityAssignment(values, "gaussian")


def naive_parity(d: GaussDiagram) -> ParityAssignment:
    return ParityAssignment(
        {label: int(i != j) for label, (i, _), (j, _) in d.chord_positions()}, "naive")


def ip_self_parity(d: GaussDiagram) -> ParityAssignment:
    """Im-Park parity restricted to self-crossings.

    Mixed crossings are left out: whether all of them are IP-odd or all
    IP-even is decided by a condition this package does not model.
    """
    lk = d.linking_matrix()
    if any(v % 2 for row in lk for v in row):
        raise OddLinkingNumbers("IP parity needs even pairwise linking numbers")
    values = {}
    for label, (i, p), (j, q) in d.chord_positions():
        if i == j:
            values[label] = (abs(p - q) - 1) & 1
    return ParityAssignment(values, "ip-self")


def project(d: GaussDiagram, c: TwoColouring) -> GaussDiagram:
    """Turn every odd crossing virtual, i.e. delete its chord.

    Components that lose all their endpoints stay as crossing-free
    components.
    """
    odd = two_colour_parity(d, c).odd
    words = [[ep for ep in w if ep[0] not in odd] for w in d.words]
    return GaussDiagram.build(words, {l: s for l, s in d.signs if l not in odd})
