"""The marked annulus A(n, m), its arcs, and their lifts to the universal cover.

The cover is the strip R x [0, 1].  The outer boundary is the line y = 0 and
the inner boundary is the line y = 1; clockwise on either boundary means
increasing x.  All coordinates are kept as integers in units of
``1 / (6 n m)`` so that the outer grid ``i/n``, the inner grid
``j/m + 1/(3nm)`` and the midpoints used by the fundamental date line are all
exact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator


class DomainError(ValueError):
    """An input lies outside the domain of the operation."""


class InvalidTriangulation(DomainError):
    """A set of arcs fails one of the triangulation invariants.

    ``reason`` is one of ``"arc"``, ``"duplicate"``, ``"count"``,
    ``"crossing"``, ``"bridging"`` or ``"non-maximal"``.
    """

    def __init__(self, reason: str, message: str, arcs: tuple = ()):
        super().__init__(message)
        self.reason = reason
        self.arcs = arcs


class Side(str, enum.Enum):
    OUTER = "outer"
    INNER = "inner"


class Direction(str, enum.Enum):
    CW = "cw"
    CCW = "ccw"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.CW else -1


_SIDE_RANK = {Side.OUTER: 0, Side.INNER: 1}


@dataclass(frozen=True)
class MarkedAnnulus:
    """Annulus with ``n`` outer marked points a_1..a_n and ``m`` inner points b_1..b_m."""

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)) or self.n < 1 or self.m < 1:
            raise DomainError(f"A(n, m) needs n, m >= 1, got ({self.n!r}, {self.m!r})")

    @property
    def scale(self) -> int:
        """Integer length of one period of the cover."""
        return 6 * self.n * self.m

    @property
    def delta(self) -> Fraction:
        return Fraction(1, 3 * self.n * self.m)

    def step(self, side: Side) -> int:
        return 6 * self.m if side is Side.OUTER else 6 * self.n

    def count(self, side: Side) -> int:
        return self.n if side is Side.OUTER else self.m

    def base(self, point: "BoundaryPoint") -> int:
        """Integer abscissa in [0, scale) of the base lift of ``point``."""
        self.check_point(point)
        if point.side is Side.OUTER:
            return (point.index % self.n) * 6 * self.m
        return (point.index % self.m) * 6 * self.n + 2

    def point_at(self, side: Side, x: int) -> "BoundaryPoint":
        """The marked point whose lifts include abscissa ``x``."""
        r = x % self.scale
        if side is Side.INNER:
            r -= 2
        q, rem = divmod(r, self.step(side))
        if rem:
            raise DomainError(f"abscissa {x} is not a lift of a marked point on the {side.value} boundary")
        return BoundaryPoint(side, q if q else self.count(side))

    def check_point(self, point: "BoundaryPoint") -> None:
        if not 1 <= point.index <= self.count(point.side):
            raise DomainError(f"{point} is not a marked point of A({self.n},{self.m})")

    def points(self, side: Side) -> list["BoundaryPoint"]:
        return [BoundaryPoint(side, i) for i in range(1, self.count(side) + 1)]

    @property
    def fdl(self) -> tuple[int, int]:
        """Integer abscissae (outer, inner) of the base fundamental date line."""
        return 3 * self.m, 3 * self.n + 2


@dataclass(frozen=True)
class BoundaryPoint:
    side: Side
    index: int

    def __str__(self):
        return f"{'a' if self.side is Side.OUTER else 'b'}{self.index}"


def outer(i: int) -> BoundaryPoint:
    return BoundaryPoint(Side.OUTER, i)


def inner(j: int) -> BoundaryPoint:
    return BoundaryPoint(Side.INNER, j)


@dataclass(frozen=True)
class Arc:
    """The isotopy class a(start, end)[winding].

    A bridging arc has two spellings, a(x, y)[w] and a(y, x)[-w - 1]; the
    constructor always stores the one with ``winding >= 0``.
    """

    start: BoundaryPoint
    end: BoundaryPoint
    winding: int = 0

    def __post_init__(self):
        if self.start.side is not self.end.side and self.winding < 0:
            start, end = self.end, self.start
            object.__setattr__(self, "start", start)
            object.__setattr__(self, "end", end)
            object.__setattr__(self, "winding", -self.winding - 1)

    @property
    def is_bridging(self) -> bool:
        return self.start.side is not self.end.side

    @property
    def is_exterior(self) -> bool:
        return self.start.side is self.end.side

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    @property
    def outer_winding(self) -> int:
        """Winding of a bridging arc when read from its outer endpoint."""
        if not self.is_bridging:
            raise DomainError("outer_winding is only defined for bridging arcs")
        if self.start.side is Side.OUTER:
            return self.winding
        return -self.winding - 1

    def sort_key(self):
        return (_SIDE_RANK[self.start.side], self.start.index,
                _SIDE_RANK[self.end.side], self.end.index, self.winding)

    def __lt__(self, other: "Arc"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"a({self.start},{self.end})[{self.winding}]"


@dataclass(frozen=True)
class Chord:
    """A lift of an arc to the cover, in integer units of ``1/scale``."""

    side0: Side
    x0: int
    side1: Side
    x1: int
    scale: int

    @property
    def kind(self) -> str:
        return "bridging" if self.side0 is not self.side1 else "exterior"

    @property
    def start(self) -> tuple[Fraction, int]:
        return Fraction(self.x0, self.scale), _SIDE_RANK[self.side0]

    @property
    def end(self) -> tuple[Fraction, int]:
        return Fraction(self.x1, self.scale), _SIDE_RANK[self.side1]

    def raw(self) -> tuple:
        return (_SIDE_RANK[self.side0], self.x0, _SIDE_RANK[self.side1], self.x1)

    def shifted(self, dx: int) -> "Chord":
        return Chord(self.side0, self.x0 + dx, self.side1, self.x1 + dx, self.scale)


_SIDES = (Side.OUTER, Side.INNER)


def _first_lift_after(ann: MarkedAnnulus, point: BoundaryPoint, x: int, strict: bool) -> int:
    base = ann.base(point)
    L = ann.scale
    k = (x - base) // L
    cand = base + k * L
    if cand < x or (strict and cand == x):
        cand += L
    return cand


def lift_arc(arc: Arc, ann: MarkedAnnulus) -> Chord:
    """Canonical lift of ``arc``: start at its base abscissa, end placed by the winding."""
    ann.check_point(arc.start)
    ann.check_point(arc.end)
    x0 = ann.base(arc.start)
    L = ann.scale
    if arc.is_bridging:
        x1 = _first_lift_after(ann, arc.end, x0, strict=True) + arc.winding * L
    elif arc.is_loop:
        x1 = x0 + arc.winding * L
    else:
        x1 = _first_lift_after(ann, arc.end, x0, strict=False) + arc.winding * L
    return Chord(arc.start.side, x0, arc.end.side, x1, L)


@lru_cache(maxsize=None)
def _unlift_raw(ann: MarkedAnnulus, s0: int, x0: int, s1: int, x1: int) -> Arc:
    side0, side1 = _SIDES[s0], _SIDES[s1]
    if side0 is side1 and x1 < x0:
        x0, x1 = x1, x0
    start = ann.point_at(side0, x0)
    end = ann.point_at(side1, x1)
    L = ann.scale
    if side0 is not side1:
        first = _first_lift_after(ann, end, x0, strict=True)
    elif start == end:
        first = x0
    else:
        first = _first_lift_after(ann, end, x0, strict=False)
    winding, rem = divmod(x1 - first, L)
    assert rem == 0
    return Arc(start, end, winding)


def unlift(chord: Chord | tuple, ann: MarkedAnnulus) -> Arc:
    """Recover the arc whose lifts include ``chord`` (a Chord or raw tuple)."""
    if isinstance(chord, Chord):
        chord = chord.raw()
    s0, x0, s1, x1 = chord
    shift = (x0 // ann.scale) * ann.scale
    return _unlift_raw(ann, s0, x0 - shift, s1, x1 - shift)


def arc_defect(arc: Arc, ann: MarkedAnnulus) -> str | None:
    """Why ``arc`` is not a valid arc of a triangulation, or None.

    Exterior arcs must be simple (span at most one period) and must not be
    homotopic to a boundary segment (span of a single step).
    """
    try:
        chord = lift_arc(arc, ann)
    except DomainError as exc:
        return str(exc)
    if arc.is_bridging:
        return None
    span = chord.x1 - chord.x0
    if span <= 0 or span > ann.scale:
        return f"{arc} is not simple"
    if span == ann.step(arc.start.side):
        return f"{arc} is homotopic to a boundary segment"
    return None


def is_valid_arc(arc: Arc, ann: MarkedAnnulus) -> bool:
    return arc_defect(arc, ann) is None


def _key(s: int, x: int) -> tuple[int, int]:
    # position on the boundary of the strip: along y=0 left to right, then y=1 right to left
    return (0, x) if s == 0 else (1, -x)


def chords_interleave(a: tuple, b: tuple) -> bool:
    """True iff the two fixed raw chords cross properly (shared endpoints excluded)."""
    p, q = _key(a[0], a[1]), _key(a[2], a[3])
    r, s = _key(b[0], b[1]), _key(b[2], b[3])
    if r in (p, q) or s in (p, q):
        return False
    if q < p:
        p, q = q, p
    return (p < r < q) != (p < s < q)


def raw_chords_cross(a: tuple, b: tuple, period: int) -> bool:
    """True iff some translate of raw chord ``b`` has endpoints interleaving with ``a``."""
    p, q = _key(a[0], a[1]), _key(a[2], a[3])
    if q < p:
        p, q = q, p
    lo_a, hi_a = min(a[1], a[3]), max(a[1], a[3])
    lo_b, hi_b = min(b[1], b[3]), max(b[1], b[3])
    for k in range((lo_a - hi_b) // period - 1, (hi_a - lo_b) // period + 2):
        dx = k * period
        r = _key(b[0], b[1] + dx)
        s = _key(b[2], b[3] + dx)
        if r == p or r == q or s == p or s == q:
            continue
        if (p < r < q) != (p < s < q):
            return True
    return False


def arcs_cross(a: Arc, b: Arc, ann: MarkedAnnulus) -> bool:
    """True iff the two isotopy classes cannot be realised disjointly.

    Lifts are geodesics of the cover, which is a disc; two of them meet in
    the interior exactly when their endpoints interleave along its boundary.
    Shared endpoints never count.
    """
    return raw_chords_cross(lift_arc(a, ann).raw(), lift_arc(b, ann).raw(), ann.scale)


def fdl_crossings(arc: Arc, ann: MarkedAnnulus) -> int:
    """Number of translates of the fundamental date line crossed by the lift of ``arc``."""
    c = lift_arc(arc, ann).raw()
    g_out, g_in = ann.fdl
    p, q = _key(c[0], c[1]), _key(c[2], c[3])
    if q < p:
        p, q = q, p
    lo, hi = min(c[1], c[3]), max(c[1], c[3])
    L = ann.scale
    total = 0
    for k in range((lo - max(g_out, g_in)) // L - 1, (hi - min(g_out, g_in)) // L + 2):
        r = _key(0, g_out + k * L)
        s = _key(1, g_in + k * L)
        if (p < r < q) != (p < s < q):
            total += 1
    return total


def twist_raw(raw: tuple, boundary: Side, shift: int) -> tuple:
    s0, x0, s1, x1 = raw
    b = _SIDE_RANK[boundary]
    return (s0, x0 + shift if s0 == b else x0, s1, x1 + shift if s1 == b else x1)


def twist_shift(ann: MarkedAnnulus, boundary: Side, direction: Direction,
                elementary: bool = True, times: int = 1) -> int:
    boundary, direction = Side(boundary), Direction(direction)
    unit = ann.step(boundary) if elementary else ann.scale
    return direction.sign * unit * times


def dehn_twist_arc(arc: Arc, ann: MarkedAnnulus, boundary: Side, direction: Direction,
                   elementary: bool = True, times: int = 1) -> Arc:
    """Image of ``arc`` under a Dehn twist of one boundary component.

    An elementary twist rotates the chosen boundary by one marked point,
    a full twist by a whole turn; ``times`` repeats it.
    """
    shift = twist_shift(ann, boundary, direction, elementary, times)
    return unlift(twist_raw(lift_arc(arc, ann).raw(), boundary, shift), ann)


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of ``annulus``; ``arcs`` is kept sorted."""

    annulus: MarkedAnnulus
    arcs: tuple[Arc, ...] = field(default=())

    @classmethod
    def of(cls, annulus: MarkedAnnulus, arcs: Iterable[Arc]) -> "Triangulation":
        return cls(annulus, tuple(sorted(arcs, key=Arc.sort_key)))

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __len__(self):
        return len(self.arcs)

    def __contains__(self, arc):
        return arc in self.arcs

    @property
    def bridging(self) -> list[Arc]:
        return [a for a in self.arcs if a.is_bridging]

    def twisted(self, boundary: Side, direction: Direction, elementary: bool = True,
                times: int = 1) -> "Triangulation":
        ann = self.annulus
        shift = twist_shift(ann, boundary, direction, elementary, times)
        return Triangulation.of(
            ann, (unlift(twist_raw(lift_arc(a, ann).raw(), boundary, shift), ann) for a in self.arcs))

    def full_twist(self, k: int = 1) -> "Triangulation":
        """Apply ``k`` clockwise full twists of the inner boundary (negative k: counter-clockwise)."""
        if k == 0:
            return self
        return self.twisted(Side.INNER, Direction.CW, elementary=False, times=k)

    def __str__(self):
        return "{" + ", ".join(map(str, self.arcs)) + "}"


def _candidate_pool(ann: MarkedAnnulus, windings: Iterable[int]) -> list[Arc]:
    pool = []
    for w in windings:
        for a in ann.points(Side.OUTER):
            for b in ann.points(Side.INNER):
                pool.append(Arc(a, b, w) if w >= 0 else Arc(b, a, -w - 1))
    pool.extend(exterior_arcs(ann))
    return pool


def exterior_arcs(ann: MarkedAnnulus) -> list[Arc]:
    """Every valid exterior arc of ``ann`` (non-loops of winding 0, loops of winding 1)."""
    out = []
    for side in _SIDES:
        count = ann.count(side)
        for s in range(1, count + 1):
            for span in range(2, count + 1):
                start = BoundaryPoint(side, s)
                if span == count:
                    out.append(Arc(start, start, 1))
                else:
                    out.append(Arc(start, BoundaryPoint(side, (s + span - 1) % count + 1), 0))
    return out


def validate_triangulation(arcs: Iterable[Arc], ann: MarkedAnnulus) -> Triangulation:
    """Check every triangulation invariant and return the triangulation.

    Raises InvalidTriangulation naming the first violated invariant.
    """
    arcs = list(arcs)
    for a in arcs:
        defect = arc_defect(a, ann)
        if defect is not None:
            raise InvalidTriangulation("arc", defect, (a,))
    if len(set(arcs)) != len(arcs):
        raise InvalidTriangulation("duplicate", "repeated arc", tuple(arcs))
    p = ann.n + ann.m
    if len(arcs) != p:
        raise InvalidTriangulation("count", f"expected {p} arcs, got {len(arcs)}", tuple(arcs))
    raws = [lift_arc(a, ann).raw() for a in arcs]
    for i in range(p):
        for j in range(i + 1, p):
            if raw_chords_cross(raws[i], raws[j], ann.scale):
                raise InvalidTriangulation(
                    "crossing", f"{arcs[i]} crosses {arcs[j]}", (arcs[i], arcs[j]))
    bridging = [a.outer_winding for a in arcs if a.is_bridging]
    if len(bridging) < 2:
        raise InvalidTriangulation("bridging", "fewer than two bridging arcs", tuple(arcs))
    present = set(arcs)
    lo = min(bridging)
    for cand in _candidate_pool(ann, range(lo - 1, max(bridging) + 2)):
        if cand in present:
            continue
        c = lift_arc(cand, ann).raw()
        if not any(raw_chords_cross(c, r, ann.scale) for r in raws):
            raise InvalidTriangulation("non-maximal", f"{cand} can be added", (cand,))
    return Triangulation.of(ann, arcs)
