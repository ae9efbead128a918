"""Writhe-type invariants of virtual links and the obstruction report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .colouring import (
    NotTwoColourable,
    TwoColouring,
    generating_set,
    is_two_colourable,
    require_colourable,
)
from .diagram import GaussDiagram
from .parity import ip_self_parity, two_colour_parity

__all__ = [
    "TooManyComponents",
    "WritheProfile",
    "writhe",
    "two_colour_writhe",
    "two_colour_writhe_enum",
    "two_colour_writhe_fast",
    "dual_writhes",
    "self_writhe",
    "naive_writhe",
    "linking_matrix",
    "ip_self_writhe",
    "ip_candidates",
    "smoothing_height",
    "chequerboard_colouring",
    "report",
]

DEFAULT_MAX_COMPONENTS = 20


class TooManyComponents(ValueError):
    pass


def writhe(d: GaussDiagram, c: TwoColouring) -> int:
    """Signed count of the crossings that are odd for ``c``."""
    p = two_colour_parity(d, c)
    return sum(d.sign[l] for l in p.odd)


def two_colour_writhe_enum(d: GaussDiagram) -> tuple[int, ...]:
    """J^2 by evaluating every colouring of the generating set directly."""
    require_colourable(d)
    return tuple(sorted(writhe(d, c) for c in generating_set(d.n_components)))


def dual_writhes(d: GaussDiagram) -> tuple[int, list[int], list[list[int]]]:
    """Writhes of the all-zero base colouring and its one- and two-fold duals.

    Returns ``(J_base, J_single, J_pair)`` where ``J_single[i]`` is the
    writhe after dualizing component ``i`` and ``J_pair[i][j]`` after
    dualizing ``i`` and ``j``. One pass over the chords.
    """
    require_colourable(d)
    n = d.n_components
    base = 0
    delta = [0] * n  # sum over mixed chords on i: +sign if even, -sign if odd
    pair = [[0] * n for _ in range(n)]  # 2*(odd - even) signed sums on i-j chords
    for label, (i, p), (j, q) in d.chord_positions():
        s = d.sign[label]
        odd = (p ^ q) & 1 == 0
        if odd:
            base += s
        if i == j:
            continue
        flip = -s if odd else s
        delta[i] += flip
        delta[j] += flip
        pair[i][j] -= 2 * flip
        pair[j][i] -= 2 * flip
    single = [base + x for x in delta]
    double = [[single[i] + single[j] + pair[i][j] - base if i != j else base
               for j in range(n)] for i in range(n)]
    return base, single, double


def two_colour_writhe_fast(d: GaussDiagram, max_components: Optional[int] = DEFAULT_MAX_COMPONENTS
                           ) -> tuple[int, ...]:
    """J^2 from the base, single-dual and double-dual writhes.

    A generating colouring dualizing the components ``p_1..p_m`` (m >= 3)
    has writhe

        sum_{k<l} J[p_k,p_l] - (m-2) sum_s J[p_s] + (m-1)(m-2)/2 J_base

    so only the chords are scanned once; the rest is arithmetic on at most
    n^2 numbers per entry.
    """
    n = d.n_components
    if max_components is not None and n > max_components:
        raise TooManyComponents(
            f"{n} components gives 2^{n - 1} entries; raise max_components to allow it")
    base, single, double = dual_writhes(d)
    out = []
    for c in generating_set(n):
        idx = [i for i, b in enumerate(c.bits) if b]
        m = len(idx)
        if m == 0:
            out.append(base)
        elif m == 1:
            out.append(single[idx[0]])
        elif m == 2:
            out.append(double[idx[0]][idx[1]])
        else:
            pairs = sum(double[a][b] for k, a in enumerate(idx) for b in idx[k + 1:])
            ones = sum(single[a] for a in idx)
            out.append(pairs - (m - 2) * ones + (m - 1) * (m - 2) // 2 * base)
    return tuple(sorted(out))


def two_colour_writhe(d: GaussDiagram, method: str = "fast") -> tuple[int, ...]:
    if method == "fast":
        return two_colour_writhe_fast(d)
    if method == "enum":
        return two_colour_writhe_enum(d)
    raise ValueError(f"unknown method {method!r}")


def self_writhe(d: GaussDiagram) -> int:
    """J^2_S: signed count of odd self-crossings (the same for every colouring)."""
    require_colourable(d)
    p = two_colour_parity(d, TwoColouring((0,) * d.n_components))
    return sum(d.sign[l] for l in p.odd if not d.is_mixed(l))


def naive_writhe(d: GaussDiagram) -> int:
    return sum(d.sign[l] for l in d.labels if d.is_mixed(l))


def linking_matrix(d: GaussDiagram) -> list[list[int]]:
    """Signed count of crossings between each pair of components (no 1/2)."""
    return d.linking_matrix()


def ip_self_writhe(d: GaussDiagram) -> int:
    p = ip_self_parity(d)
    return sum(d.sign[l] for l in p.odd)


def ip_candidates(d: GaussDiagram) -> tuple[int, int]:
    """The two possible IP writhes: mixed crossings all even, or all odd."""
    ip_s = ip_self_writhe(d)
    lk = d.linking_matrix()
    total = sum(lk[i][j] for i in range(len(lk)) for j in range(i + 1, len(lk)))
    return ip_s, ip_s + total


def smoothing_height(d: GaussDiagram, c: TwoColouring) -> int:
    """Height m - n_- of the alternately coloured smoothing for ``c``.

    A positive crossing takes its 1-resolution when odd, a negative one
    when even.
    """
    p = two_colour_parity(d, c)
    ones = sum(1 for l in d.labels if (p[l] == 1) == (d.sign[l] > 0))
    negatives = sum(1 for l in d.labels if d.sign[l] < 0)
    return ones - negatives


def chequerboard_colouring(d: GaussDiagram) -> Optional[TwoColouring]:
    """A colouring making every chord even, or None.

    Each chord between components i and j forces ``bits[i] ^ bits[j]``;
    the constraints are solved by propagation over the component graph.
    Choices are made so the smallest such colouring is returned.
    """
    if not is_two_colourable(d):
        return None
    n = d.n_components
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for _, (i, p), (j, q) in d.chord_positions():
        need = 1 ^ ((p ^ q) & 1)  # bits[i] ^ bits[j] making incoming colours differ
        if i == j:
            if need:
                return None
            continue
        adj[i].append((j, need))
        adj[j].append((i, need))
    bits: list[Optional[int]] = [None] * n
    for root in range(n):
        if bits[root] is not None:
            continue
        bits[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v, need in adj[u]:
                want = bits[u] ^ need
                if bits[v] is None:
                    bits[v] = want
                    stack.append(v)
                elif bits[v] != want:
                    return None
    return TwoColouring(tuple(bits))  # type: ignore[arg-type]


@dataclass
class WritheProfile:
    components: int
    chords: int
    two_colourable: bool
    naive: int
    lk: list[list[int]]
    j2: Optional[tuple[int, ...]] = None
    j2_self: Optional[int] = None
    ip_self: Optional[int] = None
    ip_candidates: Optional[tuple[int, int]] = None
    flags: dict[str, Optional[bool]] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "components": self.components,
            "chords": self.chords,
            "two_colourable": self.two_colourable,
            "j2": list(self.j2) if self.j2 is not None else None,
            "j2_self": self.j2_self,
            "naive": self.naive,
            "ip_self": self.ip_self,
            "ip_candidates": list(self.ip_candidates) if self.ip_candidates is not None else None,
            "lk": self.lk,
            "flags": dict(self.flags),
        }


FLAG_NAMES = (
    "chequerboard_certified",
    "slice_obstructed",
    "amphichiral_obstructed",
    "cb_concordance_obstructed",
    "compatible",
)


def report(d: GaussDiagram, method: str = "fast") -> WritheProfile:
    """Every invariant of ``d`` plus the concordance obstruction flags.

    Degenerate diagrams get a partial profile: the colouring-dependent
    fields are None.
    """
    lk = d.linking_matrix()
    prof = WritheProfile(
        components=d.n_components,
        chords=d.n_chords,
        two_colourable=is_two_colourable(d),
        naive=naive_writhe(d),
        lk=lk,
    )
    flags: dict[str, Optional[bool]] = dict.fromkeys(FLAG_NAMES)
    flags["compatible"] = all(sum(row) == 0 for row in lk)
    if prof.two_colourable:
        if method == "check":
            fast, slow = two_colour_writhe_fast(d, None), two_colour_writhe_enum(d)
            if fast != slow:
                raise AssertionError(f"fast J^2 {fast} disagrees with enumeration {slow}")
            j2 = fast
        else:
            j2 = two_colour_writhe(d, method)
        prof.j2 = j2
        prof.j2_self = self_writhe(d)
        flags["chequerboard_certified"] = chequerboard_colouring(d) is not None
        flags["slice_obstructed"] = any(j2)
        flags["amphichiral_obstructed"] = j2 != tuple(sorted(-x for x in j2))
        flags["cb_concordance_obstructed"] = 0 not in j2
    if not any(v % 2 for row in lk for v in row):
        prof.ip_candidates = ip_candidates(d)
        prof.ip_self = prof.ip_candidates[0]
    prof.flags = flags
    return prof


__all__ += ["FLAG_NAMES", "NotTwoColourable"]
