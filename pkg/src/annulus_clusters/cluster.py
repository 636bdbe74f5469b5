"""From triangulations to cluster objects, and the twist action on both sides.

A steep frame is an all-bridging triangulation whose lifted chords
``X_g`` (``g`` any integer, ``X_{g+p} = X_g`` shifted by one period) encode an
orientation vector: ``X_g`` and ``X_{g+1}`` share their inner end when
``eps_g`` is ``+`` and their outer end when it is ``-``.  An arc that crosses
the consecutive chords ``X_g0 .. X_g1`` corresponds to the string starting at
``g0 mod p`` with ``g1 - g0 + 1`` vertices; the steep arcs themselves
correspond to the shifted projectives.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .annulus import (
    Arc,
    Direction,
    DomainError,
    MarkedAnnulus,
    Side,
    Triangulation,
    arc_defect,
    chords_interleave,
    dehn_twist_arc,
    lift_arc,
    unlift,
    validate_triangulation,
)
from .strings import (
    Component,
    Orientation,
    StringWord,
    add_cohook_end,
    add_cohook_start,
    add_hook_end,
    add_hook_start,
    annulus_signature,
    classify,
    delete_cohook_end,
    delete_cohook_start,
    delete_hook_end,
    delete_hook_start,
    injective,
    projective,
    tau,
)

_OUT, _IN = 0, 1


@dataclass(frozen=True)
class ShiftedProjective:
    vertex: int

    def __str__(self):
        return f"ΣP({self.vertex})"


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    __str__ = __repr__

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()

Indecomposable = Union[StringWord, ShiftedProjective, _Zero]


class Step(str, enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class RayKind(str, enum.Enum):
    RAY = "ray"
    CORAY = "coray"


@dataclass(frozen=True)
class SteepFrame:
    """Steep chords for an orientation, on the annulus A(#+, #-)."""

    orientation: Orientation
    annulus: MarkedAnnulus

    @property
    def p(self) -> int:
        return self.orientation.p

    def chord(self, g: int) -> tuple:
        """Raw lift (outer side first) of the steep chord X_g."""
        q, r = divmod(g - 1, self.p)
        return tuple(v + q * self.annulus.scale if t else v
                     for t, v in zip((0, 1, 0, 1), self._base[r]))

    @property
    def _base(self) -> tuple:
        cached = self.__dict__.get("_base_cache")
        if cached is None:
            ann = self.annulus
            xo, xi = 6 * ann.m, 6 * ann.n + 2
            cached = []
            for g in range(1, self.p + 1):
                cached.append((_OUT, xo, _IN, xi))
                if self.orientation.eps(g) > 0:
                    xo += 6 * ann.m
                else:
                    xi += 6 * ann.n
            cached = tuple(cached)
            object.__setattr__(self, "_base_cache", cached)
        return cached

    def steep_arc(self, j: int) -> Arc:
        return unlift(self.chord(j), self.annulus)

    @property
    def steep_arcs(self) -> list[Arc]:
        return [self.steep_arc(j) for j in range(1, self.p + 1)]

    def steep_label(self, arc: Arc) -> int | None:
        for j in range(1, self.p + 1):
            if self.steep_arc(j) == arc:
                return j
        return None

    def triangulation(self) -> Triangulation:
        return validate_triangulation(self.steep_arcs, self.annulus)

    def crossed(self, arc: Arc) -> list[int]:
        """Global labels g of the steep chords crossed by the canonical lift of ``arc``."""
        c = lift_arc(arc, self.annulus).raw()
        L = self.annulus.scale
        lo, hi = min(c[1], c[3]), max(c[1], c[3])
        g_lo = (lo // L - 2) * self.p
        g_hi = (hi // L + 2) * self.p
        return [g for g in range(g_lo, g_hi + 1) if chords_interleave(c, self.chord(g))]

    def orientation_from_chords(self) -> Orientation:
        signs = []
        for g in range(1, self.p + 1):
            a, b = self.chord(g), self.chord(g + 1)
            signs.append(1 if a[3] == b[3] else -1)
        return Orientation(tuple(signs))


def steep_frame(eps: Orientation | str) -> SteepFrame:
    o = Orientation.parse(eps)
    n, m = annulus_signature(o)
    return SteepFrame(o, MarkedAnnulus(n, m))


def phi(arc: Arc, frame: SteepFrame) -> Indecomposable:
    """The module of a non-steep arc; ZERO for steep arcs and non-arcs."""
    if arc_defect(arc, frame.annulus) is not None:
        return ZERO
    gs = frame.crossed(arc)
    if not gs:
        return ZERO
    g0, g1 = gs[0], gs[-1]
    if gs != list(range(g0, g1 + 1)):
        raise AssertionError(f"{arc} crosses a non-contiguous set of steep chords")
    return StringWord.window(frame.orientation, g0, g1 - g0 + 1)


def object_of(arc: Arc, frame: SteepFrame) -> Indecomposable:
    """Cluster-level image of an arc: steep arcs go to their shifted projectives."""
    label = frame.steep_label(arc)
    if label is not None:
        return ShiftedProjective(label)
    return phi(arc, frame)


def phi_inverse(obj: Indecomposable, frame: SteepFrame) -> Arc:
    """The arc whose image is ``obj``."""
    if isinstance(obj, ShiftedProjective):
        if not 1 <= obj.vertex <= frame.p:
            raise DomainError(f"no vertex {obj.vertex}")
        return frame.steep_arc(obj.vertex)
    if not isinstance(obj, StringWord):
        raise DomainError("the zero object has no arc")
    if obj.cyclic:
        raise DomainError("bands have no arc")
    if obj.orientation != frame.orientation:
        raise DomainError("string and frame use different orientations")
    g0 = obj.start
    g1 = g0 + obj.length - 1
    before, first = frame.chord(g0 - 1), frame.chord(g0)
    after, last = frame.chord(g1 + 1), frame.chord(g1)
    u = (_OUT, before[1]) if before[3] == first[3] else (_IN, before[3])
    v = (_OUT, after[1]) if after[3] == last[3] else (_IN, after[3])
    raw = u + v
    if u[0] == v[0] and u[1] > v[1]:
        raw = v + u
    if u[0] == v[0] and raw[3] - raw[1] > frame.annulus.scale:
        raise DomainError(f"{obj} is not rigid: its exterior arc would not be simple")
    arc = unlift(raw, frame.annulus)
    defect = arc_defect(arc, frame.annulus)
    if defect is not None:
        raise DomainError(f"{obj} has no arc: {defect}")
    return arc


def summand_key(obj: Indecomposable):
    if isinstance(obj, StringWord):
        return (0, obj.start, obj.length)
    if isinstance(obj, ShiftedProjective):
        return (1, obj.vertex, 0)
    return (2, 0, 0)


@dataclass(frozen=True)
class ClusterObject:
    summands: tuple

    @classmethod
    def of(cls, summands: Iterable[Indecomposable]) -> "ClusterObject":
        return cls(tuple(sorted(summands, key=summand_key)))

    def __str__(self):
        return " ⊕ ".join(str(s) for s in self.summands)


def cluster_of(t: Triangulation, frame: SteepFrame) -> ClusterObject:
    if t.annulus != frame.annulus:
        raise DomainError("triangulation and frame live on different annuli")
    if len(t) != frame.p:
        raise DomainError("not a triangulation")
    summands = [object_of(a, frame) for a in t.arcs]
    if any(s is ZERO for s in summands):
        raise DomainError("triangulation contains a non-arc")
    return ClusterObject.of(summands)


def triangulation_of(cluster: Iterable[Indecomposable], frame: SteepFrame) -> Triangulation:
    return validate_triangulation([phi_inverse(s, frame) for s in cluster], frame.annulus)


def _shift_twist(obj: ShiftedProjective, boundary: Side, direction: Direction,
                 o: Orientation) -> Indecomposable:
    j = obj.vertex
    if boundary is Side.INNER:
        if direction is Direction.CW:
            return ShiftedProjective(o.vertex(j + 1)) if o.eps(j) < 0 else projective(o, j + 1)
        return ShiftedProjective(o.vertex(j - 1)) if o.eps(j - 1) < 0 else injective(o, j - 1)
    if direction is Direction.CW:
        return ShiftedProjective(o.vertex(j + 1)) if o.eps(j) > 0 else injective(o, j + 1)
    return ShiftedProjective(o.vertex(j - 1)) if o.eps(j - 1) > 0 else projective(o, j - 1)


def _or_shift(result: StringWord | None, o: Orientation, vertex: int) -> Indecomposable:
    return result if result is not None else ShiftedProjective(o.vertex(vertex))


def twist_object(obj: Indecomposable, boundary: Side, direction: Direction,
                 frame: SteepFrame | Orientation | str) -> Indecomposable:
    """Elementary twist of a boundary, computed on the module side.

    Transjective strings move by adding or deleting a hook or cohook; when a
    deletion is impossible the string is projective or injective and leaves
    the module category for a shifted projective.  Regular strings move by
    the translate along their own boundary and are fixed by the other one.
    """
    boundary, direction = Side(boundary), Direction(direction)
    o = frame.orientation if isinstance(frame, SteepFrame) else Orientation.parse(frame)
    if obj is ZERO:
        return ZERO
    if isinstance(obj, ShiftedProjective):
        return _shift_twist(obj, boundary, direction, o)
    comp = classify(obj)
    cw = direction is Direction.CW
    first, last = obj.start, obj.start + obj.length - 1
    if comp is Component.BAND:
        raise DomainError("bands are not moved by twists of arcs")
    if comp is Component.PREPROJECTIVE:
        if boundary is Side.INNER:
            return add_hook_end(obj) if cw else _or_shift(delete_hook_end(obj), o, first - 1)
        return _or_shift(delete_hook_start(obj), o, last + 1) if cw else add_hook_start(obj)
    if comp is Component.PREINJECTIVE:
        if boundary is Side.INNER:
            return _or_shift(delete_cohook_start(obj), o, last + 1) if cw else add_cohook_start(obj)
        return add_cohook_end(obj) if cw else _or_shift(delete_cohook_end(obj), o, first - 1)
    if comp is Component.RIGHT_REGULAR:
        if boundary is Side.OUTER:
            return obj
        return tau(obj, inverse=cw)
    if boundary is Side.INNER:
        return obj
    return tau(obj, inverse=not cw)


_RAY_MOVES = {
    (RayKind.RAY, Step.FORWARD): (Side.INNER, Direction.CW),
    (RayKind.RAY, Step.BACKWARD): (Side.INNER, Direction.CCW),
    (RayKind.CORAY, Step.FORWARD): (Side.OUTER, Direction.CCW),
    (RayKind.CORAY, Step.BACKWARD): (Side.OUTER, Direction.CW),
}


def ray_step(obj: Indecomposable, step: Step, kind: RayKind, steps: int,
             frame: SteepFrame | Orientation | str) -> Indecomposable:
    """Move ``steps`` positions along the ray or coray through ``obj``.

    Forward along a ray is an inner clockwise elementary twist; forward along
    a coray is an outer counter-clockwise one.  Negative ``steps`` reverse.
    """
    step, kind = Step(step), RayKind(kind)
    if steps < 0:
        step = Step.BACKWARD if step is Step.FORWARD else Step.FORWARD
        steps = -steps
    if isinstance(obj, StringWord) and classify(obj) not in (
            Component.PREPROJECTIVE, Component.PREINJECTIVE):
        raise DomainError(f"{obj} is regular and lies on no ray")
    boundary, direction = _RAY_MOVES[kind, step]
    for _ in range(steps):
        obj = twist_object(obj, boundary, direction, frame)
    return obj


def is_regular(obj: Indecomposable) -> bool:
    return isinstance(obj, StringWord) and classify(obj) in (
        Component.LEFT_REGULAR, Component.RIGHT_REGULAR, Component.BAND)


@dataclass(frozen=True)
class SummandReport:
    arc: Arc
    before: Indecomposable
    after: Indecomposable
    expected: Indecomposable
    regular: bool

    @property
    def passed(self) -> bool:
        return self.after == self.expected


@dataclass(frozen=True)
class FamilyReport:
    z: int
    positions: int
    summands: tuple[SummandReport, ...]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.summands)


def verify_family_theorem(t: Triangulation, z: int, frame: SteepFrame) -> FamilyReport:
    """Compare ``z`` full inner twists of ``t`` with moving along rays.

    Regular summands must be unchanged; every other summand must move
    ``z * m`` positions forward along its ray.
    """
    ann = frame.annulus
    if t.annulus != ann:
        raise DomainError("triangulation and frame live on different annuli")
    validate_triangulation(t.arcs, ann)
    positions = z * ann.m
    rows = []
    for arc in t.arcs:
        before = object_of(arc, frame)
        moved = dehn_twist_arc(arc, ann, Side.INNER, Direction.CW, elementary=False, times=z) \
            if z else arc
        after = object_of(moved, frame)
        regular = is_regular(before)
        expected = before if regular else ray_step(before, Step.FORWARD, RayKind.RAY, positions, frame)
        rows.append(SummandReport(arc, before, after, expected, regular))
    return FamilyReport(z, positions, tuple(rows))
