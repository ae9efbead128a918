"""Gauss diagrams of virtual links and their text format.

A diagram is a list of components (core circles). Each component is stored
as a linear word of endpoints read from a basepoint; the word is understood
cyclically. An endpoint is ``(label, over)``. Every label occurs exactly
twice in a diagram, once as an over-crossing and once as an under-crossing,
and carries a sign of +1 or -1.

Text format, one link per input::

    O1+ O2+ U1+ U2+          # virtual trefoil
    O1+ U2+ / O2+ U1+        # positive Hopf link
    _                        # crossing-free component

Components are separated by `` / `` or by newlines, ``#`` starts a comment.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

__all__ = [
    "ParseError",
    "GaussSyntaxError",
    "LabelError",
    "GaussDiagram",
    "SimpleGaussDiagram",
    "Mirror",
    "ReverseComponent",
    "CrossingChange",
    "parse",
    "serialize",
    "transform",
    "forget",
    "rotate_basepoint",
]

Endpoint = tuple[int, bool]  # (label, is_over)
Position = tuple[int, int]  # (component, index)

_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])")


class ParseError(ValueError):
    pass


class GaussSyntaxError(ParseError):
    """A token does not match ``[OU][1-9][0-9]*[+-]`` or ``_``."""


class LabelError(ParseError):
    """A label is not used exactly once as O and once as U with one sign."""


@dataclass(frozen=True)
class GaussDiagram:
    words: tuple[tuple[Endpoint, ...], ...]
    signs: tuple[tuple[int, int], ...]  # sorted (label, sign) pairs

    def __post_init__(self):
        seen: dict[int, list[bool]] = {}
        for word in self.words:
            for label, over in word:
                seen.setdefault(label, []).append(over)
        sign_map = dict(self.signs)
        if len(sign_map) != len(self.signs):
            raise LabelError("duplicate sign entry")
        for label, overs in seen.items():
            if sorted(overs) != [False, True]:
                raise LabelError(f"label {label} must appear once as O and once as U")
            if sign_map.get(label) not in (1, -1):
                raise LabelError(f"label {label} needs sign +1 or -1")
        if set(sign_map) != set(seen):
            raise LabelError("sign table does not match the labels in use")

    @classmethod
    def build(cls, words: Iterable[Iterable[Endpoint]], signs: dict[int, int]) -> GaussDiagram:
        return cls(tuple(tuple(w) for w in words), tuple(sorted(signs.items())))

    @property
    def n_components(self) -> int:
        return len(self.words)

    @property
    def n_chords(self) -> int:
        return len(self.signs)

    @property
    def labels(self) -> list[int]:
        return [label for label, _ in self.signs]

    @cached_property
    def sign(self) -> dict[int, int]:
        return dict(self.signs)

    @cached_property
    def _where(self) -> dict[Endpoint, Position]:
        return {ep: (i, k) for i, word in enumerate(self.words) for k, ep in enumerate(word)}

    def over(self, label: int) -> Position:
        return self._where[(label, True)]

    def under(self, label: int) -> Position:
        return self._where[(label, False)]

    def chord_positions(self) -> Iterator[tuple[int, Position, Position]]:
        """Yield ``(label, over_position, under_position)`` for every chord."""
        for label in self.labels:
            yield label, self.over(label), self.under(label)

    def is_mixed(self, label: int) -> bool:
        return self.over(label)[0] != self.under(label)[0]

    def component_lengths(self) -> list[int]:
        return [len(w) for w in self.words]

    def linking_matrix(self) -> list[list[int]]:
        n = self.n_components
        lk = [[0] * n for _ in range(n)]
        for label, (i, _), (j, _) in self.chord_positions():
            if i != j:
                lk[i][j] += self.sign[label]
                lk[j][i] += self.sign[label]
        return lk

    def relabel(self) -> GaussDiagram:
        """Relabel chords 1..k in order of first appearance."""
        new: dict[int, int] = {}
        for word in self.words:
            for label, _ in word:
                new.setdefault(label, len(new) + 1)
        words = [[(new[label], over) for label, over in word] for word in self.words]
        return GaussDiagram.build(words, {new[l]: s for l, s in self.signs})

    def fresh_label(self) -> int:
        return max(self.labels, default=0) + 1

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class SimpleGaussDiagram:
    """Gauss diagram with signs and over/under information erased."""

    words: tuple[tuple[int, ...], ...]

    @property
    def n_components(self) -> int:
        return len(self.words)

    def component_lengths(self) -> list[int]:
        return [len(w) for w in self.words]

    def chord_positions(self) -> Iterator[tuple[int, Position, Position]]:
        first: dict[int, Position] = {}
        for i, word in enumerate(self.words):
            for k, label in enumerate(word):
                if label in first:
                    yield label, first.pop(label), (i, k)
                else:
                    first[label] = (i, k)


def parse(text: str) -> GaussDiagram:
    """Parse a Gauss code.

    >>> parse("O1+ U2+ / O2+ U1+").n_components
    2
    """
    pieces: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        pieces.extend(line.split("/"))
    if not pieces:
        raise GaussSyntaxError("empty Gauss code")

    words: list[list[Endpoint]] = []
    signs: dict[int, str] = {}
    uses: dict[int, list[bool]] = {}
    for piece in pieces:
        tokens = piece.split()
        if not tokens:
            raise GaussSyntaxError("empty component; use '_' for a crossing-free component")
        if tokens == ["_"]:
            words.append([])
            continue
        word = []
        for tok in tokens:
            m = _TOKEN.fullmatch(tok)
            if m is None:
                raise GaussSyntaxError(f"malformed token {tok!r}")
            kind, num, sgn = m.groups()
            label = int(num)
            if signs.setdefault(label, sgn) != sgn:
                raise LabelError(f"label {label} used with both signs")
            uses.setdefault(label, []).append(kind == "O")
            word.append((label, kind == "O"))
        words.append(word)
    for label, overs in uses.items():
        if sorted(overs) != [False, True]:
            raise LabelError(f"label {label} must appear exactly once as O and once as U")
    return GaussDiagram.build(words, {l: 1 if s == "+" else -1 for l, s in signs.items()})


def serialize(d: GaussDiagram) -> str:
    d = d.relabel()
    parts = []
    for word in d.words:
        if not word:
            parts.append("_")
            continue
        parts.append(" ".join(
            f"{'O' if over else 'U'}{label}{'+' if d.sign[label] > 0 else '-'}"
            for label, over in word
        ))
    return " / ".join(parts)


class Mirror(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    REVERSE_ALL = "reverse-all"


@dataclass(frozen=True)
class ReverseComponent:
    index: int


@dataclass(frozen=True)
class CrossingChange:
    label: int


TransformKind = Union[Mirror, ReverseComponent, CrossingChange]


def _reverse(d: GaussDiagram, comps: set[int]) -> GaussDiagram:
    words = [list(reversed(w)) if i in comps else list(w) for i, w in enumerate(d.words)]
    signs = dict(d.sign)
    # a crossing changes sign iff exactly one of its strands is reversed
    for label, (i, _), (j, _) in d.chord_positions():
        if (i in comps) != (j in comps):
            signs[label] = -signs[label]
    return GaussDiagram.build(words, signs)


def transform(d: GaussDiagram, kind: TransformKind) -> GaussDiagram:
    """Apply a mirror, an orientation reversal or a crossing change.

    ``Mirror.VERTICAL`` changes every classical crossing: over and under are
    swapped and signs negated. ``Mirror.HORIZONTAL`` reverses every word and
    negates every sign, keeping over/under. ``ReverseComponent(i)`` reverses
    the orientation of one component, which negates the sign of each mixed
    crossing on it. ``Mirror.REVERSE_ALL`` reverses every component.
    """
    if kind is Mirror.VERTICAL:
        words = [[(l, not o) for l, o in w] for w in d.words]
        return GaussDiagram.build(words, {l: -s for l, s in d.signs})
    if kind is Mirror.HORIZONTAL:
        words = [list(reversed(w)) for w in d.words]
        return GaussDiagram.build(words, {l: -s for l, s in d.signs})
    if kind is Mirror.REVERSE_ALL:
        return _reverse(d, set(range(d.n_components)))
    if isinstance(kind, ReverseComponent):
        if not 0 <= kind.index < d.n_components:
            raise IndexError(f"component {kind.index} out of range")
        return _reverse(d, {kind.index})
    if isinstance(kind, CrossingChange):
        if kind.label not in d.sign:
            raise IndexError(f"no chord labelled {kind.label}")
        words = [[(l, not o) if l == kind.label else (l, o) for l, o in w] for w in d.words]
        signs = dict(d.sign)
        signs[kind.label] = -signs[kind.label]
        return GaussDiagram.build(words, signs)
    raise TypeError(f"unknown transform {kind!r}")


def forget(d: GaussDiagram) -> SimpleGaussDiagram:
    return SimpleGaussDiagram(tuple(tuple(l for l, _ in w) for w in d.words))


def rotate_basepoint(d: GaussDiagram, component: int, offset: int) -> GaussDiagram:
    """Move the basepoint of ``component`` forward by ``offset`` endpoints."""
    if not 0 <= component < d.n_components:
        raise IndexError(f"component {component} out of range")
    word = d.words[component]
    if not word:
        return d
    k = offset % len(word)
    words = list(d.words)
    words[component] = word[k:] + word[:k]
    return GaussDiagram(tuple(words), d.signs)
