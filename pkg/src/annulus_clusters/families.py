"""Counting and enumerating inner-equivalence families of annulus triangulations.

Two triangulations are inner equivalent when a sequence of full Dehn twists
of the inner boundary carries one to the other.  Each family is represented
by exactly one member of a *cell*: the triangulations containing a fixed
triple of defining arcs

* ``alpha``: the bridging arc from b_{m-i} to a_k that crosses the fundamental
  date line,
* ``beta``: the bridging arc from a_k to b_{j+1} that does not,
* ``gamma``: the inner exterior arc from b_{m-i} to b_{j+1} (absent when it
  would hug the boundary, i.e. when ``i + j == 0``).

The defining arcs cut the annulus into an inner polygon ``R1`` with
``i + j + 2`` corners and a strip polygon ``R2`` with ``n + m - i - j + 1``
corners, so a cell holds ``C(i+j) * C(n+m-i-j-1)`` triangulations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .annulus import (
    Arc,
    DomainError,
    MarkedAnnulus,
    Side,
    Triangulation,
    exterior_arcs,
    lift_arc,
    raw_chords_cross,
    unlift,
)

BRUTE_FORCE_LIMIT = 10

_OUT, _IN = 0, 1


def catalan(k: int) -> int:
    """The k-th Catalan number."""
    if k < 0:
        raise DomainError("catalan needs k >= 0")
    return comb(2 * k, k) // (k + 1)


def count_families(n: int, m: int) -> int:
    """Number of inner-equivalence families of triangulations of A(n, m)."""
    MarkedAnnulus(n, m)
    return n * sum((i + 1) * catalan(i) * catalan(n + m - i - 1) for i in range(m))


def double_sum(n: int, m: int) -> int:
    """The cell-by-cell count before collapsing to a single sum."""
    return sum(catalan(i) * catalan(n + m - i - 1) for j in range(m) for i in range(j, m))


def single_sum(n: int, m: int) -> int:
    return sum((k + 1) * catalan(k) * catalan(n + m - k - 1) for k in range(m))


@lru_cache(maxsize=None)
def _polygon_diagonals(p: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if p <= 3:
        return ((),)
    out = []
    last = p - 1
    for k in range(1, p - 1):
        left = _polygon_diagonals(k + 1)
        right = _polygon_diagonals(p - k)
        for dl, dr in product(left, right):
            diags = []
            if k > 1:
                diags.append((0, k))
            diags.extend(dl)
            if k < p - 2:
                diags.append((k, last))
            diags.extend((a + k, b + k) for a, b in dr)
            out.append(tuple(sorted(diags)))
    return tuple(out)


def polygon_triangulations(p: int, labels: Sequence | None = None) -> list[list[tuple]]:
    """All triangulations of a convex ``p``-gon as lists of diagonals.

    Vertices are ``labels`` (default ``0..p-1``) in cyclic order.  Diagonals
    are pairs of labels.  A 2-gon has one, empty, triangulation.
    """
    if p < 2:
        raise DomainError("a polygon needs at least two vertices")
    if labels is None:
        labels = list(range(p))
    if len(labels) != p:
        raise DomainError("labels must list every vertex once")
    return [[(labels[a], labels[b]) for a, b in d] for d in _polygon_diagonals(p)]


@dataclass(frozen=True, order=True)
class CellId:
    k: int
    i: int
    j: int

    def check(self, ann: MarkedAnnulus) -> None:
        if not (1 <= self.k <= ann.n and self.i >= 0 and self.j >= 0 and self.i + self.j <= ann.m - 1):
            raise DomainError(f"{self} is not a cell of A({ann.n},{ann.m})")


def cells(ann: MarkedAnnulus) -> Iterator[CellId]:
    """Every cell, in the deterministic enumeration order."""
    for k in range(1, ann.n + 1):
        for j in range(ann.m):
            for i in range(ann.m - j):
                yield CellId(k, i, j)


@dataclass(frozen=True)
class CellGeometry:
    """Lifted corner coordinates of a cell's defining arcs."""

    A: int
    B1: int
    B2: int
    alpha: Arc
    beta: Arc
    gamma: Arc | None
    r1: tuple
    r2: tuple


def cell_geometry(cell: CellId, ann: MarkedAnnulus) -> CellGeometry:
    cell.check(ann)
    L = ann.scale
    A = cell.k * 6 * ann.m
    B1 = 2 - cell.i * 6 * ann.n
    B2 = (cell.j + 1) * 6 * ann.n + 2
    alpha = unlift((_IN, B1, _OUT, A), ann)
    beta = unlift((_OUT, A, _IN, B2), ann)
    gamma = unlift((_IN, B1, _IN, B2), ann) if cell.i + cell.j > 0 else None
    r1 = tuple((_IN, x) for x in range(B1, B2 + 1, 6 * ann.n))
    r2 = tuple((_OUT, A + s * 6 * ann.m) for s in range(ann.n + 1)) + tuple(
        (_IN, x) for x in range(B1 + L, B2 - 1, -6 * ann.n))
    return CellGeometry(A, B1, B2, alpha, beta, gamma, r1, r2)


def _polygon_arcs(corners: tuple, ann: MarkedAnnulus) -> list[tuple[Arc, ...]]:
    return [tuple(unlift((a[0], a[1], b[0], b[1]), ann) for a, b in diags)
            for diags in polygon_triangulations(len(corners), corners)]


@lru_cache(maxsize=4096)
def _enumerate_cell_cached(cell: CellId, ann: MarkedAnnulus) -> tuple[Triangulation, ...]:
    g = cell_geometry(cell, ann)
    fixed = [g.alpha, g.beta] + ([g.gamma] if g.gamma is not None else [])
    out = []
    for d1 in _polygon_arcs(g.r1, ann):
        for d2 in _polygon_arcs(g.r2, ann):
            out.append(Triangulation.of(ann, fixed + list(d1) + list(d2)))
    return tuple(out)


def enumerate_cell(cell: CellId, ann: MarkedAnnulus) -> list[Triangulation]:
    """All triangulations of the cell, in deterministic order."""
    return list(_enumerate_cell_cached(cell, ann))


def cell_size(cell: CellId, ann: MarkedAnnulus) -> int:
    cell.check(ann)
    s = cell.i + cell.j
    return catalan(s) * catalan(ann.n + ann.m - s - 1)


def enumerate_representatives(n: int, m: int) -> Iterator[tuple[CellId, Triangulation]]:
    """One representative for every family of A(n, m), grouped by cell."""
    ann = MarkedAnnulus(n, m)
    for cell in cells(ann):
        for t in _enumerate_cell_cached(cell, ann):
            yield cell, t


def small_pool(ann: MarkedAnnulus) -> list[Arc]:
    """Candidate arcs of small triangulations: winding-0 bridging arcs read from
    either end, together with every valid exterior arc."""
    pool = []
    for a in ann.points(Side.OUTER):
        for b in ann.points(Side.INNER):
            pool.append(Arc(a, b, 0))
            pool.append(Arc(b, a, 0))
    pool.extend(exterior_arcs(ann))
    return pool


def brute_force_small_triangulations(n: int, m: int) -> list[Triangulation]:
    """Every triangulation of A(n, m) whose bridging arcs are all small.

    Exhaustive clique search in the compatibility graph of the small pool;
    refuses when ``n + m`` exceeds the search guard.
    """
    ann = MarkedAnnulus(n, m)
    if n + m > BRUTE_FORCE_LIMIT:
        raise DomainError(f"brute force is limited to n + m <= {BRUTE_FORCE_LIMIT}")
    pool = small_pool(ann)
    raws = [lift_arc(a, ann).raw() for a in pool]
    size = len(pool)
    compat = [0] * size
    for x in range(size):
        for y in range(x + 1, size):
            if not raw_chords_cross(raws[x], raws[y], ann.scale):
                compat[x] |= 1 << y
                compat[y] |= 1 << x
    target = n + m
    found: list[Triangulation] = []

    def grow(chosen: list[int], candidates: int) -> None:
        if len(chosen) == target:
            found.append(Triangulation.of(ann, (pool[c] for c in chosen)))
            return
        if bin(candidates).count("1") < target - len(chosen):
            return
        while candidates:
            low = candidates & -candidates
            c = low.bit_length() - 1
            candidates ^= low
            chosen.append(c)
            grow(chosen, candidates & compat[c])
            chosen.pop()

    grow([], (1 << size) - 1)
    found.sort(key=lambda t: [a.sort_key() for a in t.arcs])
    return found


def _inner_lifts_to(arc: Arc, ann: MarkedAnnulus, target: int) -> int | None:
    """Outer abscissa of the lift of bridging ``arc`` whose inner end is ``target``."""
    s0, x0, s1, x1 = lift_arc(arc, ann).raw()
    xo, xi = (x0, x1) if s0 == _OUT else (x1, x0)
    shift, rem = divmod(target - xi, ann.scale)
    if rem:
        return None
    return xo + shift * ann.scale


def _defining_inner_arc(t: Triangulation) -> tuple[int, int]:
    """(B1, B2): lifted ends of the widest inner arc over the inner date-line point."""
    ann = t.annulus
    L = ann.scale
    mark = ann.fdl[1]
    best = None
    for arc in t.arcs:
        if arc.is_bridging or arc.start.side is not Side.INNER:
            continue
        _, x0, _, x1 = lift_arc(arc, ann).raw()
        shift = -((x1 - mark) // L) * L
        x0, x1 = x0 + shift, x1 + shift
        if x0 < mark < x1 and (best is None or x1 - x0 > best[1] - best[0]):
            best = (x0, x1)
    if best is None:
        return 2, 6 * ann.n + 2
    return best


def canonicalize(t: Triangulation) -> tuple[CellId, Triangulation, int]:
    """Locate the family representative of ``t``.

    Returns ``(cell, representative, z)`` where ``representative`` is the
    result of ``z`` clockwise full inner twists applied to ``t``.
    """
    ann = t.annulus
    L = ann.scale
    if len(t) != ann.n + ann.m or len(t.bridging) < 2:
        raise DomainError("canonicalize needs a triangulation")
    B1, B2 = _defining_inner_arc(t)
    apexes = None
    for target in (B1, B2):
        found = {x for a in t.bridging if (x := _inner_lifts_to(a, ann, target)) is not None}
        apexes = found if apexes is None else apexes & found
    if len(apexes) != 1:
        raise DomainError("no unique triangle rests on the defining inner arc")
    apex = apexes.pop()
    z = (apex - 6 * ann.m) // L
    A = apex - z * L
    n_step, m_step = 6 * ann.n, 6 * ann.m
    cell = CellId(A // m_step, (2 - B1) // n_step, (B2 - 2) // n_step - 1)
    rep = t.full_twist(z)
    g = cell_geometry(cell, ann)
    for arc in (g.alpha, g.beta, g.gamma):
        if arc is not None and arc not in rep:
            raise DomainError(f"{arc} missing from the normalised triangulation")
    return cell, rep, z


def same_family(t1: Triangulation, t2: Triangulation) -> bool:
    if t1.annulus != t2.annulus:
        raise DomainError("triangulations live on different annuli")
    c1, r1, _ = canonicalize(t1)
    c2, r2, _ = canonicalize(t2)
    return c1 == c2 and r1 == r2
