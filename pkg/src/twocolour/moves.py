"""Reidemeister moves on Gauss diagrams, random walks and the parity-axiom check.

Virtual moves and the detour move do not change a Gauss diagram, so only
the classical moves are implemented. Moves keep chord labels: untouched
chords have the same label before and after, new chords get fresh labels.

R3 uses three chords ``a`` (top over middle), ``b`` (top over bottom) and
``c`` (middle over bottom). Each strand carries a cyclically adjacent pair
of endpoints: ``O(a), O(b)`` on the top, ``U(a), O(c)`` in the middle and
``U(b), U(c)`` on the bottom. The move reverses the order of every pair.
Which orders and signs are admissible is the table ``R3_PATTERNS``, read
off from triangles of three oriented lines in the plane (see
``r3_patterns_from_lines``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .colouring import TwoColouring, generating_set, is_two_colourable, require_colourable
from .diagram import GaussDiagram, Position
from .parity import ParityAssignment, naive_parity, project, two_colour_parity

__all__ = [
    "StaleSite",
    "R1Insert",
    "R1Delete",
    "R2Insert",
    "R2Delete",
    "R3",
    "MoveSite",
    "R3_PATTERNS",
    "r3_patterns_from_lines",
    "available_moves",
    "apply",
    "transport",
    "random_walk",
    "walk_moves",
    "AxiomViolation",
    "AxiomReport",
    "verify_parity_axioms",
]

# (top order, middle order, bottom order, (sign a, sign b, sign c));
# an order is False when the pair reads (a, b), (a, c), (b, c) along the
# strand and True when it reads the other way round.
R3_PATTERNS: frozenset[tuple[bool, bool, bool, tuple[int, int, int]]] = frozenset({
    (False, False, False, (1, 1, 1)), (False, False, False, (-1, -1, -1)),
    (False, False, True, (-1, 1, 1)), (False, False, True, (1, -1, -1)),
    (False, True, False, (-1, 1, -1)), (False, True, False, (1, -1, 1)),
    (False, True, True, (-1, -1, 1)), (False, True, True, (1, 1, -1)),
    (True, False, False, (-1, -1, 1)), (True, False, False, (1, 1, -1)),
    (True, False, True, (-1, 1, -1)), (True, False, True, (1, -1, 1)),
    (True, True, False, (-1, 1, 1)), (True, True, False, (1, -1, -1)),
    (True, True, True, (-1, -1, -1)), (True, True, True, (1, 1, 1)),
})


def r3_patterns_from_lines(samples: int = 4000, seed: int = 0) -> set:
    """Recompute the R3 table from random triangles of oriented lines.

    Lines T, M, B with T over M over B. A crossing is positive when the
    under strand passes from right to left of the over strand.
    """
    rng = random.Random(seed)

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    def meet(p, u, q, v):
        # p + t u = q + s v
        det = cross(u, v)
        w = (q[0] - p[0], q[1] - p[1])
        return cross(w, v) / det, cross(w, u) / det

    found = set()
    for _ in range(samples):
        pts = [(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3)]
        dirs = [(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(3)]
        if min(abs(cross(dirs[i], dirs[j])) for i, j in ((0, 1), (0, 2), (1, 2))) < 1e-6:
            continue
        ta, ma = meet(pts[0], dirs[0], pts[1], dirs[1])
        tb, bb = meet(pts[0], dirs[0], pts[2], dirs[2])
        mc, bc = meet(pts[1], dirs[1], pts[2], dirs[2])

        def sgn(o, u):
            return 1 if cross(dirs[o], dirs[u]) > 0 else -1

        found.add((ta > tb, ma > mc, bb > bc, (sgn(0, 1), sgn(0, 2), sgn(1, 2))))
    return found


class StaleSite(ValueError):
    """The move site was located on a different diagram."""


@dataclass(frozen=True)
class R1Insert:
    component: int
    gap: int  # insert before endpoint ``gap`` (0..len)
    sign: int
    over_first: bool


@dataclass(frozen=True)
class R1Delete:
    label: int


@dataclass(frozen=True)
class R2Insert:
    over_gap: tuple[int, int]  # (component, gap) receiving O(a), O(b)
    under_gap: tuple[int, int]  # receiving U(a), U(b) or U(b), U(a)
    sign: int  # sign of a; b gets the opposite sign
    parallel: bool  # True: under pair reads U(a), U(b)


@dataclass(frozen=True)
class R2Delete:
    a: int
    b: int


@dataclass(frozen=True)
class R3:
    a: int
    b: int
    c: int
    pairs: tuple[tuple[Position, Position], ...]  # top, middle, bottom, in strand order


MoveKind = Union[R1Insert, R1Delete, R2Insert, R2Delete, R3]
KIND_NAMES = {R1Insert: "R1+", R1Delete: "R1-", R2Insert: "R2+", R2Delete: "R2-", R3: "R3"}


@dataclass(frozen=True)
class MoveSite:
    diagram: GaussDiagram
    move: MoveKind

    @property
    def touched(self) -> tuple[int, ...]:
        """Labels of the chords the move involves in the source diagram."""
        m = self.move
        if isinstance(m, R1Delete):
            return (m.label,)
        if isinstance(m, R2Delete):
            return (m.a, m.b)
        if isinstance(m, R3):
            return (m.a, m.b, m.c)
        return ()

    def __str__(self) -> str:
        return f"{KIND_NAMES[type(self.move)]} {self.move}"


def _next(d: GaussDiagram, pos: Position) -> Position:
    i, k = pos
    return i, (k + 1) % len(d.words[i])


def _prev(d: GaussDiagram, pos: Position) -> Position:
    i, k = pos
    return i, (k - 1) % len(d.words[i])


def _adjacent_pairs(d: GaussDiagram):
    """Cyclically adjacent endpoint pairs ``(pos, next_pos)``, each once."""
    for i, w in enumerate(d.words):
        n = len(w)
        if n < 2:
            continue
        for k in range(n if n > 2 else 1):
            yield (i, k), (i, (k + 1) % n)


def _r1_deletes(d: GaussDiagram) -> list[R1Delete]:
    out = []
    for label in d.labels:
        o, u = d.over(label), d.under(label)
        if o[0] == u[0] and (_next(d, o) == u or _next(d, u) == o):
            out.append(R1Delete(label))
    return out


def _r2_deletes(d: GaussDiagram) -> list[R2Delete]:
    out = set()
    for p, q in _adjacent_pairs(d):
        (la, oa), (lb, ob) = d.words[p[0]][p[1]], d.words[q[0]][q[1]]
        if not (oa and ob) or la == lb or d.sign[la] == d.sign[lb]:
            continue
        ua, ub = d.under(la), d.under(lb)
        if ua[0] == ub[0] and (_next(d, ua) == ub or _next(d, ub) == ua):
            out.add(R2Delete(min(la, lb), max(la, lb)))
    return sorted(out, key=lambda m: (m.a, m.b))


def _r3_sites(d: GaussDiagram) -> list[R3]:
    found: dict[tuple[int, int, int], R3] = {}
    word = d.words

    def at(pos):
        return word[pos[0]][pos[1]]

    def neighbours(pos):
        if len(word[pos[0]]) < 2:
            return []
        return [(_prev(d, pos), True), (_next(d, pos), False)]  # True: neighbour comes first

    for p, q in _adjacent_pairs(d):
        (l1, o1), (l2, o2) = at(p), at(q)
        if not (o1 and o2) or l1 == l2:
            continue
        for a, b in ((l1, l2), (l2, l1)):
            top_rev = a != l1
            ua, ub = d.under(a), d.under(b)
            for npos, c_first in neighbours(ua):
                c, c_over = at(npos)
                if not c_over or c in (a, b):
                    continue
                uc = d.under(c)
                if uc[0] != ub[0]:
                    continue
                if _next(d, ub) == uc:
                    bot_options = [False]
                elif _next(d, uc) == ub:
                    bot_options = [True]
                else:
                    continue
                if len(word[ub[0]]) == 2:
                    bot_options = [False, True]
                mid_options = [True, False] if len(word[ua[0]]) == 2 else [c_first]
                top_options = [False, True] if len(word[p[0]]) == 2 else [top_rev]
                signs = (d.sign[a], d.sign[b], d.sign[c])
                ok = any((t, m, bo, signs) in R3_PATTERNS
                         for t in top_options for m in mid_options for bo in bot_options)
                if not ok or (a, b, c) in found:
                    continue
                top = (p, q)
                mid = (npos, ua) if c_first else (ua, npos)
                bot = (uc, ub) if _next(d, uc) == ub else (ub, uc)
                found[(a, b, c)] = R3(a, b, c, (top, mid, bot))
    return [found[k] for k in sorted(found)]


def _r1_inserts(d: GaussDiagram) -> list[R1Insert]:
    return [R1Insert(i, g, s, f)
            for i, w in enumerate(d.words) for g in range(len(w) + 1)
            for s in (1, -1) for f in (True, False)]


def _gaps(d: GaussDiagram) -> list[tuple[int, int]]:
    return [(i, g) for i, w in enumerate(d.words) for g in range(len(w) + 1)]


def _r2_inserts(d: GaussDiagram) -> list[R2Insert]:
    gaps = _gaps(d)
    return [R2Insert(og, ug, s, par)
            for og in gaps for ug in gaps for s in (1, -1) for par in (True, False)]


KINDS = ("R1+", "R1-", "R2+", "R2-", "R3")


def available_moves(d: GaussDiagram, kinds: Iterable[str] = KINDS) -> list[MoveSite]:
    """Every valid move site of the requested kinds (``R1+``, ``R1-``, ``R2+``, ``R2-``, ``R3``)."""
    kinds = set(kinds)
    moves: list[MoveKind] = []
    if "R1-" in kinds:
        moves += _r1_deletes(d)
    if "R2-" in kinds:
        moves += _r2_deletes(d)
    if "R3" in kinds:
        moves += _r3_sites(d)
    if "R1+" in kinds:
        moves += _r1_inserts(d)
    if "R2+" in kinds:
        moves += _r2_inserts(d)
    return [MoveSite(d, m) for m in moves]


def _insert(words: list[list], inserts: list[tuple[int, int, list]]) -> None:
    # apply from the rightmost gap so earlier gap indices stay valid;
    # on a tie the first listed block ends up first
    for i, g, block in sorted(inserts, key=lambda t: (t[0], t[1]), reverse=True):
        words[i][g:g] = block


def _apply_move(d: GaussDiagram, m: MoveKind) -> GaussDiagram:
    words = [list(w) for w in d.words]
    signs = dict(d.sign)
    if isinstance(m, R1Insert):
        x = d.fresh_label()
        block = [(x, True), (x, False)] if m.over_first else [(x, False), (x, True)]
        _insert(words, [(m.component, m.gap, block)])
        signs[x] = m.sign
    elif isinstance(m, R2Insert):
        a = d.fresh_label()
        b = a + 1
        under = [(a, False), (b, False)] if m.parallel else [(b, False), (a, False)]
        over = [(a, True), (b, True)]
        if m.over_gap == m.under_gap:
            _insert(words, [(*m.over_gap, over + under)])
        else:
            _insert(words, [(*m.over_gap, over), (*m.under_gap, under)])
        signs[a], signs[b] = m.sign, -m.sign
    elif isinstance(m, (R1Delete, R2Delete)):
        gone = {m.label} if isinstance(m, R1Delete) else {m.a, m.b}
        words = [[ep for ep in w if ep[0] not in gone] for w in words]
        for l in gone:
            del signs[l]
    elif isinstance(m, R3):
        for (i, k), (j, l) in m.pairs:
            words[i][k], words[j][l] = words[j][l], words[i][k]
    else:
        raise TypeError(f"unknown move {m!r}")
    return GaussDiagram.build(words, signs)


def apply(d: GaussDiagram, site: MoveSite) -> GaussDiagram:
    if site.diagram != d:
        raise StaleSite("move site belongs to another diagram")
    return _apply_move(d, site.move)


def transport(d: GaussDiagram, site: MoveSite, c: TwoColouring) -> TwoColouring:
    """Carry a colouring of ``d`` across ``site`` to the rewritten diagram.

    Intervals away from the move keep their colour. Insertions and R3 do
    not shift the parity of any surviving position relative to the
    basepoint; a deletion that straddles the basepoint shifts it by one.
    """
    m = site.move
    if not isinstance(m, (R1Delete, R2Delete)):
        return c
    gone = set(site.touched)
    bits = list(c.bits)
    for i, w in enumerate(d.words):
        removed = [k for k, (l, _) in enumerate(w) if l in gone]
        if not removed:
            continue
        survivors = [k for k, (l, _) in enumerate(w) if l not in gone]
        if survivors:
            shift = sum(1 for k in removed if k < survivors[0])
        else:
            shift = removed[0]
        bits[i] ^= shift & 1
    return TwoColouring(tuple(bits))


# ---------------------------------------------------------------- random walks


def _random_insert(d: GaussDiagram, rng: random.Random, room: int) -> Optional[MoveKind]:
    gaps = _gaps(d)
    if room >= 2 and rng.random() < 0.6:
        return R2Insert(rng.choice(gaps), rng.choice(gaps), rng.choice((1, -1)),
                        rng.random() < 0.5)
    if room >= 1:
        i, g = rng.choice(gaps)
        return R1Insert(i, g, rng.choice((1, -1)), rng.random() < 0.5)
    return None


def _triangle_setup(d: GaussDiagram, rng: random.Random) -> Optional[list[MoveKind]]:
    """Two R2 insertions that pass a new strand over an existing crossing.

    Afterwards the diagram has an R3 triangle involving that crossing.
    """
    if not d.labels:
        return None
    c = rng.choice(d.labels)
    oc, uc = d.over(c), d.under(c)
    strand = rng.choice(_gaps(d))
    options = []
    for side_m in (0, 1):
        for side_b in (0, 1):
            for sa in (1, -1):
                for sb in (1, -1):
                    for pa in (True, False):
                        for pb in (True, False):
                            options.append((side_m, side_b, sa, sb, pa, pb))
    rng.shuffle(options)
    for side_m, side_b, sa, sb, pa, pb in options[:24]:
        first = R2Insert(strand, (oc[0], oc[1] + side_m), sa, pa)
        d1 = _apply_move(d, first)
        # the new over pair sits at strand gap; put the second pair between its endpoints
        a1 = d.fresh_label()
        o_a = d1.over(a1)
        uc1 = d1.under(c)
        second = R2Insert((o_a[0], o_a[1] + 1), (uc1[0], uc1[1] + side_b), sb, pb)
        d2 = _apply_move(d1, second)
        if any(c in (m.a, m.b, m.c) for m in _r3_sites(d2)):
            return [first, second]
    return None


def walk_moves(d: GaussDiagram, steps: int, seed: int, max_chords: int = 12):
    """Yield ``(site, new_diagram)`` along a seeded random walk.

    Each step picks an R3 move when one exists (with probability 0.35),
    otherwise inserts with probability ``1 - chords/max_chords`` and
    deletes otherwise. Some insertions are planned pairs of R2 moves that
    create an R3 triangle, so R3 moves occur regularly. If nothing else
    applies an R1 kink is added, overshooting the bound by one.
    """
    rng = random.Random(seed)
    queued: list[MoveKind] = []
    for _ in range(steps):
        move: Optional[MoveKind] = None
        if queued:
            move = queued.pop(0)
        else:
            k = d.n_chords
            r3 = _r3_sites(d)
            deletes = _r1_deletes(d) + _r2_deletes(d)
            room = max_chords - k
            if r3 and rng.random() < 0.35:
                move = rng.choice(r3)
            elif room > 0 and (not deletes or rng.random() < room / max_chords):
                if room >= 4 and rng.random() < 0.4:
                    plan = _triangle_setup(d, rng)
                    if plan:
                        move, queued = plan[0], plan[1:]
                if move is None:
                    move = _random_insert(d, rng, room)
            elif deletes:
                move = rng.choice(deletes)
            elif r3:
                move = rng.choice(r3)
            if move is None:
                i, g = rng.choice(_gaps(d))
                move = R1Insert(i, g, rng.choice((1, -1)), rng.random() < 0.5)
        site = MoveSite(d, move)
        d = _apply_move(d, move)
        yield site, d


def random_walk(d: GaussDiagram, steps: int, seed: int, max_chords: int = 12) -> list[GaussDiagram]:
    """Deterministic trajectory of ``steps + 1`` diagrams, one move apart."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    return [d] + [nd for _, nd in walk_moves(d, steps, seed, max_chords)]


# ----------------------------------------------------------- parity axioms

ParityRule = Callable[[GaussDiagram, TwoColouring], ParityAssignment]


def naive_rule(d: GaussDiagram, c: TwoColouring) -> ParityAssignment:
    return naive_parity(d)


@dataclass
class AxiomViolation:
    axiom: int
    diagram: str
    move: str
    colouring: str
    detail: str


@dataclass
class AxiomReport:
    steps: int = 0
    checks: int = 0
    move_counts: dict[str, int] = field(default_factory=dict)
    violations: list[AxiomViolation] = field(default_factory=list)
    projections: int = 0
    projections_colourable: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def witness(self) -> Optional[AxiomViolation]:
        return self.violations[0] if self.violations else None


def check_move(d: GaussDiagram, site: MoveSite, new: GaussDiagram, c: TwoColouring,
               rule: ParityRule, strong: bool = True) -> list[tuple[int, str]]:
    """Parity axioms 0-3 for one move and one colouring; returns failures.

    With ``strong`` an R3 move on three odd crossings is also a failure.
    """
    before = rule(d, c)
    after = rule(new, transport(d, site, c))
    m = site.move
    involved = set(site.touched)
    fails = []
    if isinstance(m, R1Insert):
        involved = set(after.values) - set(before.values)
        (x,) = involved
        if after[x]:
            fails.append((1, f"inserted kink {x} is odd"))
    elif isinstance(m, R2Insert):
        involved = set(after.values) - set(before.values)
        a, b = sorted(involved)
        if after[a] != after[b]:
            fails.append((2, f"inserted pair {a},{b} has mixed parity"))
    elif isinstance(m, R1Delete):
        if before[m.label]:
            fails.append((1, f"deleted kink {m.label} is odd"))
    elif isinstance(m, R2Delete):
        if before[m.a] != before[m.b]:
            fails.append((2, f"deleted pair {m.a},{m.b} has mixed parity"))
    elif isinstance(m, R3):
        triple = (m.a, m.b, m.c)
        n_odd = sum(before[l] for l in triple)
        if n_odd == 3 and strong:
            fails.append((3, f"R3 triple {triple} all odd (not strong)"))
        elif n_odd == 1:
            fails.append((3, f"R3 triple {triple} has exactly one odd"))
        if any(before[l] != after[l] for l in triple):
            fails.append((3, f"R3 triple {triple} changed parity"))
    for l in set(before.values) & set(after.values):
        if l not in involved and before[l] != after[l]:
            fails.append((0, f"untouched chord {l} changed parity"))
    return fails


def verify_parity_axioms(d: GaussDiagram, steps: int, seed: int, max_chords: int = 12,
                         rule: ParityRule = two_colour_parity, strong: bool = True,
                         on_step: Optional[Callable[[MoveSite, GaussDiagram], None]] = None,
                         ) -> AxiomReport:
    """Walk ``steps`` random moves and check the parity axioms at each one.

    Every colouring of the generating set is carried along the walk, so
    the check covers one representative of each parity the diagram has.
    ``on_step`` is called with each move site and the resulting diagram.
    Pass ``strong=False`` for parities that are only weak, such as the
    naive parity on links with three or more components.
    """
    require_colourable(d)
    rep = AxiomReport()
    cols = generating_set(d.n_components)
    for site, new in walk_moves(d, steps, seed, max_chords):
        cur = site.diagram
        name = KIND_NAMES[type(site.move)]
        rep.move_counts[name] = rep.move_counts.get(name, 0) + 1
        for c in cols:
            for axiom, detail in check_move(cur, site, new, c, rule, strong):
                rep.violations.append(AxiomViolation(axiom, str(cur), str(site), str(c), detail))
            rep.checks += 1
        if on_step is not None:
            on_step(site, new)
        cols = [transport(cur, site, c) for c in cols]
        rep.steps += 1
        if rep.steps % 50 == 0:
            for c in cols:
                rep.projections += 1
                rep.projections_colourable += is_two_colourable(project(new, c))
        if rep.violations:
            break
    return rep
