"""Invariant suites run by ``annulus-clusters check``, plus the independent oracles they use.

Every suite returns a :class:`SuiteResult`.  Randomised suites draw from a
``random.Random`` seeded by the caller so that runs are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .annulus import (
    Arc,
    Direction,
    MarkedAnnulus,
    Side,
    arcs_cross,
    dehn_twist_arc,
    exterior_arcs,
    fdl_crossings,
    lift_arc,
    unlift,
    validate_triangulation,
)
from .cluster import (
    ShiftedProjective,
    object_of,
    phi_inverse,
    steep_frame,
    twist_object,
    verify_family_theorem,
)
from .families import (
    brute_force_small_triangulations,
    canonicalize,
    catalan,
    cell_size,
    cells,
    count_families,
    double_sum,
    enumerate_cell,
    enumerate_representatives,
    single_sum,
)
from .mutation import (
    LaurentSeed,
    MultiQuiver,
    exchange_matrix,
    mutate_matrix,
    mutate_quiver,
    mutate_seed,
    quiver_of_orientation,
)
from .strings import (
    Action,
    End,
    Hook,
    Orientation,
    StringWord,
    dimension_vector,
    hook_op,
    quiver_from_orientation,
    tau,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checked} checks{extra}"


def arcs_with_windings(ann: MarkedAnnulus, bound: int) -> list[Arc]:
    """Bridging arcs with outer-read winding in [-bound, bound] and every valid exterior arc."""
    out = []
    for a in ann.points(Side.OUTER):
        for b in ann.points(Side.INNER):
            for w in range(-bound, bound + 1):
                out.append(Arc(a, b, w) if w >= 0 else Arc(b, a, -w - 1))
    return out + exterior_arcs(ann)


def orientations(n: int, m: int) -> list[Orientation]:
    """Every orientation vector with n plus signs and m minus signs."""
    from itertools import combinations

    p = n + m
    out = []
    for plus in combinations(range(p), n):
        out.append(Orientation(tuple(1 if i in plus else -1 for i in range(p))))
    return out


# ---------------------------------------------------------------- geometric oracle

def _segment(arc: Arc, ann: MarkedAnnulus, dx: int) -> tuple:
    s0, x0, s1, x1 = lift_arc(arc, ann).raw()
    if s0 == 1:
        s0, x0, s1, x1 = s1, x1, s0, x0
    return (Fraction(x0 + dx), Fraction(0)), (Fraction(x1 + dx), Fraction(1))


def _segments_meet(p1, p2, q1, q2) -> list[tuple[Fraction, Fraction]]:
    """Intersection points of two closed segments (empty if disjoint or parallel)."""
    (x1, y1), (x2, y2) = p1, p2
    (x3, y3), (x4, y4) = q1, q2
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if den == 0:
        return []
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    u = -((x1 - x2) * (y1 - y3) - (y1 - y2) * (x1 - x3)) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return [(x1 + t * (x2 - x1), y1 + t * (y2 - y1))]
    return []


def _interval(arc: Arc, ann: MarkedAnnulus) -> tuple[int, int]:
    _, x0, _, x1 = lift_arc(arc, ann).raw()
    return min(x0, x1), max(x0, x1)


def _inside(x: int, lo: int, hi: int, L: int) -> bool:
    """Some translate of x lies strictly inside (lo, hi)."""
    first = x + ((lo - x) // L) * L
    while first <= lo:
        first += L
    return first < hi


def oracle_cross(a: Arc, b: Arc, ann: MarkedAnnulus) -> bool:
    """Case-by-case crossing test, independent of the interleaving predicate.

    Bridging pairs: exact intersection of straight lifts away from shared
    endpoints.  Exterior pairs on one boundary: strict interleaving of lifted
    intervals.  Exterior pairs on different boundaries: never.  Bridging
    against exterior: the bridging end on that boundary falls strictly inside
    the exterior interval.
    """
    L = ann.scale
    if a.is_bridging and b.is_bridging:
        p1, p2 = _segment(a, ann, 0)
        K = abs(a.winding) + abs(b.winding) + 2
        for k in range(-K, K + 1):
            q1, q2 = _segment(b, ann, k * L)
            for pt in _segments_meet(p1, p2, q1, q2):
                if pt not in (p1, p2, q1, q2):
                    return True
        return False
    if a.is_bridging:
        a, b = b, a
    lo, hi = _interval(a, ann)
    side = a.start.side
    if b.is_bridging:
        end = b.start if b.start.side is side else b.end
        return _inside(ann.base(end), lo, hi, L)
    if b.start.side is not side:
        return False
    lo2, hi2 = _interval(b, ann)
    for k in range((lo - hi2) // L - 1, (hi - lo2) // L + 2):
        c, d = lo2 + k * L, hi2 + k * L
        if len({lo, hi, c, d}) < 4:
            continue
        if (lo < c < hi) != (lo < d < hi):
            return True
    return False


def oracle_fdl_crossings(arc: Arc, ann: MarkedAnnulus) -> int:
    """Count fundamental date line translates met by the straight or interval model."""
    g_out, g_in = ann.fdl
    L = ann.scale
    if arc.is_exterior:
        lo, hi = _interval(arc, ann)
        g = g_out if arc.start.side is Side.OUTER else g_in
        return sum(1 for k in range((lo - g) // L - 1, (hi - g) // L + 2) if lo < g + k * L < hi)
    p1, p2 = _segment(arc, ann, 0)
    lo, hi = min(p1[0], p2[0]), max(p1[0], p2[0])
    count = 0
    for k in range(int(lo // L) - 2, int(hi // L) + 3):
        f0 = (Fraction(g_out + k * L), Fraction(0))
        f1 = (Fraction(g_in + k * L), Fraction(1))
        count += len(_segments_meet(p1, p2, f0, f1))
    return count


# ---------------------------------------------------------------- algebraic oracle

def euler_matrix(eps) -> list[list[int]]:
    q = quiver_from_orientation(eps)
    p = q.p
    e = [[int(i == j) for j in range(p)] for i in range(p)]
    for s, t in q.arrows:
        e[s - 1][t - 1] -= 1
    return e


def _solve(a: list[list[int]], b: list[int]) -> list[Fraction]:
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def coxeter_tau_dims(eps, dims: Iterable[int]) -> tuple[int, ...]:
    """Dimension vector of tau M from that of a non-projective M, via the Euler form."""
    e = euler_matrix(eps)
    d = list(dims)
    p = len(d)
    rhs = [-sum(d[i] * e[i][v] for i in range(p)) for v in range(p)]
    sol = _solve(e, rhs)
    return tuple(int(x) for x in sol)


def random_string(rng: random.Random, max_p: int = 8, max_len: int = 50) -> StringWord:
    p = rng.randint(2, max_p)
    while True:
        signs = tuple(rng.choice((1, -1)) for _ in range(p))
        if len(set(signs)) == 2:
            break
    return StringWord.window(Orientation(signs), rng.randint(1, p), rng.randint(1, max_len))


# ---------------------------------------------------------------- suites

def suite_lifts(level: str, rng: random.Random) -> SuiteResult:
    bound = 4 if level == "full" else 3
    checked = 0
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            ann = MarkedAnnulus(n, m)
            for arc in arcs_with_windings(ann, 3):
                checked += 1
                if unlift(lift_arc(arc, ann), ann) != arc:
                    return SuiteResult("lift round trip", False, checked, str(arc))
    return SuiteResult("lift round trip", True, checked)


def suite_crossings(level: str, rng: random.Random) -> SuiteResult:
    shapes = [(2, 2), (2, 1), (1, 2)] + ([(3, 2), (1, 1), (3, 1)] if level == "full" else [])
    checked = 0
    for n, m in shapes:
        ann = MarkedAnnulus(n, m)
        arcs = arcs_with_windings(ann, 2)
        for a in arcs:
            if arcs_cross(a, a, ann):
                return SuiteResult("crossing predicate", False, checked, f"{a} crosses itself")
            if fdl_crossings(a, ann) != oracle_fdl_crossings(a, ann):
                return SuiteResult("crossing predicate", False, checked, f"fdl count of {a}")
            for b in arcs:
                checked += 1
                c = arcs_cross(a, b, ann)
                if c != arcs_cross(b, a, ann) or c != oracle_cross(a, b, ann):
                    return SuiteResult("crossing predicate", False, checked, f"{a} vs {b}")
    return SuiteResult("crossing predicate", True, checked)


def suite_twists(level: str, rng: random.Random) -> SuiteResult:
    ann = MarkedAnnulus(2, 2)
    arcs = arcs_with_windings(ann, 2)
    checked = 0
    for boundary in Side:
        for elementary in (True, False):
            f = {a: dehn_twist_arc(a, ann, boundary, Direction.CW, elementary) for a in arcs}
            for a in arcs:
                if dehn_twist_arc(f[a], ann, boundary, Direction.CCW, elementary) != a:
                    return SuiteResult("dehn twists", False, checked, f"{a} not restored")
                for b in arcs:
                    checked += 1
                    if arcs_cross(a, b, ann) != arcs_cross(f[a], f[b], ann):
                        return SuiteResult("dehn twists", False, checked, f"{a}, {b}")
    return SuiteResult("dehn twists", True, checked)


def suite_counts(level: str, rng: random.Random) -> SuiteResult:
    bound = 5 if level == "full" else 3
    checked = 0
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            checked += 1
            got = sum(1 for _ in enumerate_representatives(n, m))
            if got != count_families(n, m):
                return SuiteResult("enumeration vs closed form", False, checked, f"A({n},{m})")
    for n in range(1, 13):
        for m in range(1, 13):
            checked += 1
            if double_sum(n, m) != single_sum(n, m):
                return SuiteResult("enumeration vs closed form", False, checked, "single sum")
            if n <= 8 and m <= 8 and count_families(n, m) != count_families(m, n):
                return SuiteResult("enumeration vs closed form", False, checked, "symmetry")
        if count_families(n, 1) != n * catalan(n):
            return SuiteResult("enumeration vs closed form", False, checked, "m = 1")
    return SuiteResult("enumeration vs closed form", True, checked)


def suite_cells(level: str, rng: random.Random) -> SuiteResult:
    bound = 3 if level == "full" else 2
    checked = 0
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            ann = MarkedAnnulus(n, m)
            seen: dict = {}
            for cell in cells(ann):
                members = enumerate_cell(cell, ann)
                if len(members) != cell_size(cell, ann):
                    return SuiteResult("cells", False, checked, f"size of {cell}")
                for t in members:
                    checked += 1
                    validate_triangulation(t.arcs, ann)
                    if t in seen:
                        return SuiteResult("cells", False, checked, f"{cell} meets {seen[t]}")
                    seen[t] = cell
    return SuiteResult("cells", True, checked)


def suite_canonical(level: str, rng: random.Random) -> SuiteResult:
    shapes = [(2, 2), (3, 2)] if level == "full" else [(2, 2)]
    checked = 0
    for n, m in shapes:
        for cell, r in enumerate_representatives(n, m):
            for k in range(-2, 3):
                checked += 1
                if canonicalize(r.full_twist(k)) != (cell, r, -k):
                    return SuiteResult("canonical form", False, checked, f"{cell}, k={k}")
    return SuiteResult("canonical form", True, checked)


def suite_brute(level: str, rng: random.Random) -> SuiteResult:
    """Small triangulations all reach representatives, and every family is reached.

    The raw count is reported in the detail; it exceeds the family count when a
    family has two small members (all bridging arcs read the same way round).
    """
    shapes = [(1, 1), (1, 2), (2, 1), (2, 2)] + ([(1, 3), (3, 1), (2, 3), (3, 2)] if level == "full" else [])
    checked = 0
    extra = []
    for n, m in shapes:
        reps = {(c, r) for c, r in enumerate_representatives(n, m)}
        small = brute_force_small_triangulations(n, m)
        reached = set()
        for t in small:
            checked += 1
            c, r, _ = canonicalize(t)
            reached.add((c, r))
        if reached != reps:
            return SuiteResult("small triangulations", False, checked, f"A({n},{m}) partition")
        if len(small) != len(reps):
            extra.append(f"A({n},{m}): {len(small)} small for {len(reps)} families")
    return SuiteResult("small triangulations", True, checked, "; ".join(extra))


def suite_strings(level: str, rng: random.Random) -> SuiteResult:
    samples = 1000 if level == "full" else 200
    checked = 0
    for _ in range(samples):
        s = random_string(rng)
        checked += 1
        t = tau(s)
        if t is not None:
            if tau(t, inverse=True) != s:
                return SuiteResult("string calculus", False, checked, f"tau^-1 tau {s}")
            if coxeter_tau_dims(s.orientation, dimension_vector(s)) != dimension_vector(t):
                return SuiteResult("string calculus", False, checked, f"Coxeter check {s}")
        u = tau(s, inverse=True)
        if u is not None and tau(u) != s:
            return SuiteResult("string calculus", False, checked, f"tau tau^-1 {s}")
        for which in Hook:
            for where in End:
                added = hook_op(s, which, where, Action.ADD)
                if added is not None and hook_op(added, which, where, Action.DELETE) != s:
                    return SuiteResult("string calculus", False, checked, f"add/delete {which} {where} {s}")
    return SuiteResult("string calculus", True, checked)


def suite_bridge(level: str, rng: random.Random) -> SuiteResult:
    shapes = [(2, 2), (2, 1)] + ([(1, 2), (3, 1), (1, 3)] if level == "full" else [])
    checked = 0
    for n, m in shapes:
        for eps in orientations(n, m):
            frame = steep_frame(eps)
            ann = frame.annulus
            for arc in arcs_with_windings(ann, 2):
                obj = object_of(arc, frame)
                checked += 1
                if not isinstance(obj, ShiftedProjective) and phi_inverse(obj, frame) != arc:
                    return SuiteResult("arcs and modules", False, checked, f"phi of {arc}")
                for boundary in Side:
                    for d in Direction:
                        geo = object_of(dehn_twist_arc(arc, ann, boundary, d), frame)
                        if geo != twist_object(obj, boundary, d, frame):
                            return SuiteResult("arcs and modules", False, checked,
                                               f"{boundary.value} {d.value} twist of {arc}")
            for cell, r in enumerate_representatives(n, m):
                for z in range(-2, 3):
                    checked += 1
                    if not verify_family_theorem(r, z, frame).passed:
                        return SuiteResult("arcs and modules", False, checked, f"family of {r}, z={z}")
    return SuiteResult("arcs and modules", True, checked)


def random_quiver(rng: random.Random, size: int, max_mult: int = 2) -> MultiQuiver:
    mat = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            mult = rng.randint(0, max_mult)
            if rng.random() < 0.5:
                mat[i][j] = mult
            else:
                mat[j][i] = mult
    return MultiQuiver(tuple(map(tuple, mat)))


def random_annulus_quiver(rng: random.Random, max_p: int = 4) -> MultiQuiver:
    """A type Ã quiver from a random orientation with 2..max_p vertices."""
    p = rng.randint(2, max_p)
    while True:
        signs = tuple(rng.choice((1, -1)) for _ in range(p))
        if len(set(signs)) == 2:
            return quiver_of_orientation(Orientation(signs))


def suite_mutation(level: str, rng: random.Random) -> SuiteResult:
    samples = 200
    checked = 0
    for _ in range(samples):
        q = random_quiver(rng, rng.randint(1, 5))
        for k in range(1, q.size + 1):
            checked += 1
            mq = mutate_quiver(q, k)
            if mutate_quiver(mq, k) != q or exchange_matrix(mq) != mutate_matrix(exchange_matrix(q), k):
                return SuiteResult("mutation", False, checked, f"quiver {q} at {k}")
    depth = 8
    for _ in range(samples):
        q = random_annulus_quiver(rng, 4)
        seed = LaurentSeed.initial(q)
        for _ in range(rng.randint(1, depth)):
            k = rng.randint(1, q.size)
            nxt = mutate_seed(seed, k)
            checked += 1
            if mutate_seed(nxt, k) != seed or not nxt.is_laurent():
                return SuiteResult("mutation", False, checked, f"seed at {k}")
            seed = nxt
    return SuiteResult("mutation", True, checked)


SUITES: dict[str, Callable[[str, random.Random], SuiteResult]] = {
    "lifts": suite_lifts,
    "crossings": suite_crossings,
    "twists": suite_twists,
    "counts": suite_counts,
    "cells": suite_cells,
    "canonical": suite_canonical,
    "brute": suite_brute,
    "strings": suite_strings,
    "bridge": suite_bridge,
    "mutation": suite_mutation,
}


def run_checks(level: str = "quick", seed: int = 0, only: Iterable[str] | None = None) -> list[SuiteResult]:
    names = list(only) if only else list(SUITES)
    return [SUITES[name](level, random.Random(f"{seed}:{name}")) for name in names]
