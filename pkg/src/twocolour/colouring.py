"""2-colourings of Gauss diagrams.

A 2-colouring alternates colour at every chord endpoint, so it is fixed by
the colour of one interval per component. We store the colour of the
interval entering endpoint 0 of each component (0 = red, 1 = green); the
interval entering endpoint ``k`` then has colour ``bits[i] ^ (k % 2)``.
Alternation closes up around a component iff it carries an even number of
endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

__all__ = [
    "NotTwoColourable",
    "TwoColouring",
    "degenerate_components",
    "is_two_colourable",
    "colourings",
    "dualize",
    "global_dual",
    "generating_set",
    "incoming_colour",
    "require_colourable",
]


class NotTwoColourable(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TwoColouring:
    bits: tuple[int, ...]

    @classmethod
    def from_string(cls, s: str) -> TwoColouring:
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit-string: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)


def degenerate_components(d) -> set[int]:
    return {i for i, n in enumerate(d.component_lengths()) if n % 2}


def is_two_colourable(d) -> bool:
    return not degenerate_components(d)


def require_colourable(d, c: TwoColouring | None = None) -> None:
    bad = degenerate_components(d)
    if bad:
        raise NotTwoColourable(f"degenerate components {sorted(bad)}")
    if c is not None and len(c) != d.n_components:
        raise ValueError(f"colouring {c} has {len(c)} bits, diagram has {d.n_components} components")


def colourings(d) -> list[TwoColouring]:
    if degenerate_components(d):
        return []
    return [TwoColouring(bits) for bits in product((0, 1), repeat=d.n_components)]


def dualize(c: TwoColouring, components: Iterable[int]) -> TwoColouring:
    bits = list(c.bits)
    for i in set(components):
        if not 0 <= i < len(bits):
            raise IndexError(f"component {i} out of range")
        bits[i] ^= 1
    return TwoColouring(tuple(bits))


def global_dual(c: TwoColouring) -> TwoColouring:
    return dualize(c, range(len(c)))


def generating_set(n: int) -> list[TwoColouring]:
    """One colouring from each global-dual pair, relative to the all-zero base.

    Ordered by weight, then lexicographically. For even ``n`` the middle
    layer keeps the strings that precede their complement, i.e. those
    starting with 0.
    """
    if n < 1:
        raise ValueError("need at least one component")
    out = []
    for w in range(n // 2 + 1):
        layer = []
        for ones in combinations(range(n), w):
            bits = [0] * n
            for i in ones:
                bits[i] = 1
            layer.append(tuple(bits))
        if 2 * w == n:
            layer = [b for b in layer if b < tuple(1 - x for x in b)]
        out.extend(TwoColouring(b) for b in sorted(layer))
    return out


def incoming_colour(d, c: TwoColouring, component: int, position: int) -> int:
    require_colourable(d, c)
    if not 0 <= component < d.n_components:
        raise IndexError(f"component {component} out of range")
    if not 0 <= position < max(d.component_lengths()[component], 1):
        raise IndexError(f"position {position} out of range")
    return c.bits[component] ^ (position & 1)
