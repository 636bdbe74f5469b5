"""String combinatorics for path algebras of type Ã.

An orientation vector ``eps`` of length ``p`` fixes the quiver on the
``p``-cycle: arrow ``alpha_i`` joins ``i`` and ``i + 1`` (indices mod ``p``)
and points forward when ``eps_i`` is ``+``.  Without relations, a string
never turns back, so it is a window of consecutive vertices walked in one
direction.  Every string is stored in its increasing-index spelling
``(start, length)``; the letters are ``alpha_start, alpha_{start+1}, ...``
taken directly or inversely according to their signs.

Throughout, the *end* of a string is its increasing side and the *start* its
decreasing side.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .annulus import DomainError


class Component(str, enum.Enum):
    PREPROJECTIVE = "preprojective"
    PREINJECTIVE = "preinjective"
    LEFT_REGULAR = "left-regular"
    RIGHT_REGULAR = "right-regular"
    BAND = "band"


class Hook(str, enum.Enum):
    HOOK = "hook"
    COHOOK = "cohook"


class End(str, enum.Enum):
    START = "start"
    END = "end"


class Action(str, enum.Enum):
    ADD = "add"
    DELETE = "delete"


@dataclass(frozen=True)
class Orientation:
    """Orientation vector: a tuple of +1 / -1 of length at least 2 using both signs."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) < 2 or any(s not in (1, -1) for s in self.signs):
            raise DomainError("an orientation needs at least two signs from {+, -}")
        if len(set(self.signs)) < 2:
            raise DomainError("a cyclically oriented quiver is not tame")

    @classmethod
    def parse(cls, text: str | Sequence) -> "Orientation":
        if isinstance(text, Orientation):
            return text
        if isinstance(text, str):
            table = {"+": 1, "-": -1, "−": -1}
            try:
                return cls(tuple(table[c] for c in text.strip()))
            except KeyError as exc:
                raise DomainError(f"bad orientation character {exc.args[0]!r}") from None
        return cls(tuple(int(s) for s in text))

    @property
    def p(self) -> int:
        return len(self.signs)

    def eps(self, i: int) -> int:
        """Sign of arrow alpha_i; any integer index is read mod p."""
        return self.signs[(i - 1) % self.p]

    def vertex(self, i: int) -> int:
        return (i - 1) % self.p + 1

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class Quiver:
    """Type Ã quiver: ``arrows[i-1] = (source, target)`` of alpha_i."""

    orientation: Orientation
    arrows: tuple[tuple[int, int], ...]

    @property
    def p(self) -> int:
        return self.orientation.p


def quiver_from_orientation(eps: Orientation | str) -> Quiver:
    o = Orientation.parse(eps)
    arrows = []
    for i in range(1, o.p + 1):
        j = o.vertex(i + 1)
        arrows.append((i, j) if o.eps(i) > 0 else (j, i))
    return Quiver(o, tuple(arrows))


def annulus_signature(eps: Orientation | str) -> tuple[int, int]:
    """(n, m): the number of + signs and - signs."""
    o = Orientation.parse(eps)
    return o.signs.count(1), o.signs.count(-1)


@dataclass(frozen=True)
class Letter:
    arrow: int
    inverse: bool


@dataclass(frozen=True)
class StringWord:
    """The string with ``length`` vertices starting at ``start`` and walking upward.

    ``cyclic`` marks a band: the closed word going once around the quiver.
    """

    orientation: Orientation
    start: int
    length: int
    cyclic: bool = False

    def __post_init__(self):
        if not 1 <= self.start <= self.orientation.p:
            raise DomainError(f"start vertex {self.start} out of range")
        if self.length < 1:
            raise DomainError("a string has at least one vertex")
        if self.cyclic and self.length != self.orientation.p + 1:
            raise DomainError("a band goes exactly once around the quiver")

    @classmethod
    def window(cls, eps: Orientation | str, start: int, length: int) -> "StringWord":
        o = Orientation.parse(eps)
        return cls(o, o.vertex(start), length)

    @classmethod
    def named(cls, eps: Orientation | str, name: str) -> "StringWord":
        """Parse ``'ij_k'`` or ``'i,j,k'`` (vertices ``i``, ``j`` and ``k`` vertices)."""
        o = Orientation.parse(eps)
        text = name.strip().replace(" ", "")
        try:
            if "_" in text:
                head, k = text.split("_")
                if "," in head:
                    i, j = head.split(",")
                else:
                    if len(head) != 2:
                        raise ValueError
                    i, j = head[0], head[1]
            else:
                i, j, k = text.split(",")
            i, j, k = int(i), int(j), int(k)
        except ValueError:
            raise DomainError(f"cannot read string name {name!r}") from None
        s = cls.window(o, i, k)
        if s.end != o.vertex(j):
            raise DomainError(f"a string of length {k} from {i} ends at {s.end}, not {j}")
        return s

    @classmethod
    def from_letters(cls, eps: Orientation | str, start: int,
                     letters: Iterable[Letter]) -> "StringWord":
        """Build a string from a walk, checking composability and no backtracking."""
        o = Orientation.parse(eps)
        here = o.vertex(start)
        steps = []
        for let in letters:
            if not 1 <= let.arrow <= o.p:
                raise DomainError(f"no arrow alpha_{let.arrow}")
            if let.arrow == here:
                step, direct = 1, o.eps(let.arrow) > 0
            elif o.vertex(let.arrow + 1) == here:
                step, direct = -1, o.eps(let.arrow) < 0
            else:
                raise DomainError("letters do not compose")
            if direct == let.inverse:
                raise DomainError(f"alpha_{let.arrow} cannot be read that way from vertex {here}")
            if steps and steps[-1] != step:
                raise DomainError("a string may not turn back on itself")
            steps.append(step)
            here = o.vertex(here + step)
        if steps and steps[0] < 0:
            return cls.window(o, here, len(steps) + 1)
        return cls.window(o, start, len(steps) + 1)

    @property
    def p(self) -> int:
        return self.orientation.p

    @property
    def end(self) -> int:
        return self.orientation.vertex(self.start + self.length - 1)

    @property
    def signs(self) -> list[int]:
        return [self.orientation.eps(self.start + t) for t in range(self.length - 1)]

    @property
    def letters(self) -> list[Letter]:
        return [Letter(self.orientation.vertex(self.start + t), self.orientation.eps(self.start + t) < 0)
                for t in range(self.length - 1)]

    @property
    def vertices(self) -> list[int]:
        return [self.orientation.vertex(self.start + t) for t in range(self.length)]

    @property
    def name(self) -> str:
        sep = "," if self.p > 9 else ""
        return f"{self.start}{sep}{self.end}_{self.length}"

    def _with(self, start: int, length: int) -> "StringWord":
        return StringWord(self.orientation, self.orientation.vertex(start), length)

    def __str__(self):
        return ("band@" if self.cyclic else "") + self.name


def _require_string(s: StringWord) -> None:
    if s.cyclic:
        raise DomainError("bands are outside the string calculus")


def _extend_end(s: StringWord, first: int) -> StringWord | None:
    o = s.orientation
    edge = s.start + s.length - 1
    if o.eps(edge) != first:
        return None
    k = s.length + 1
    while o.eps(s.start + k - 1) == -first:
        k += 1
    return s._with(s.start, k)


def _extend_start(s: StringWord, first: int) -> StringWord | None:
    o = s.orientation
    i = s.start - 1
    if o.eps(i) != first:
        return None
    k = s.length + 1
    while o.eps(i - 1) == -first:
        i -= 1
        k += 1
    return s._with(i, k)


def _cut_end(s: StringWord, sign: int) -> StringWord | None:
    signs = s.signs
    for r in range(len(signs) - 1, -1, -1):
        if signs[r] == sign:
            return s._with(s.start, r + 1)
    return None


def _cut_start(s: StringWord, sign: int) -> StringWord | None:
    for r, e in enumerate(s.signs):
        if e == sign:
            return s._with(s.start + r + 1, s.length - r - 1)
    return None


def hook_op(s: StringWord, which: Hook, where: End, action: Action) -> StringWord | None:
    """Add or delete a hook or cohook at one end; None when undefined.

    A cohook at the end is one direct arrow followed by as many inverse
    arrows as possible; a hook is the dual.  At the start, the roles of direct
    and inverse letters swap because the word is read backwards there.
    """
    _require_string(s)
    which, where, action = Hook(which), End(where), Action(action)
    lead = 1 if which is Hook.COHOOK else -1
    if where is End.START:
        lead = -lead
    if action is Action.ADD:
        return (_extend_end if where is End.END else _extend_start)(s, lead)
    return (_cut_end if where is End.END else _cut_start)(s, lead)


def add_cohook_end(s):
    return hook_op(s, Hook.COHOOK, End.END, Action.ADD)


def add_cohook_start(s):
    return hook_op(s, Hook.COHOOK, End.START, Action.ADD)


def add_hook_end(s):
    return hook_op(s, Hook.HOOK, End.END, Action.ADD)


def add_hook_start(s):
    return hook_op(s, Hook.HOOK, End.START, Action.ADD)


def delete_cohook_end(s):
    return hook_op(s, Hook.COHOOK, End.END, Action.DELETE)


def delete_cohook_start(s):
    return hook_op(s, Hook.COHOOK, End.START, Action.DELETE)


def delete_hook_end(s):
    return hook_op(s, Hook.HOOK, End.END, Action.DELETE)


def delete_hook_start(s):
    return hook_op(s, Hook.HOOK, End.START, Action.DELETE)


def _translate(s: StringWord, grow: Hook, shrink: Hook) -> StringWord | None:
    _require_string(s)
    cur = s
    missing = []
    for where in (End.END, End.START):
        nxt = hook_op(cur, grow, where, Action.ADD)
        if nxt is None:
            missing.append(where)
        else:
            cur = nxt
    for where in missing:
        cur = hook_op(cur, shrink, where, Action.DELETE)
        if cur is None:
            return None
    return cur


def tau(s: StringWord, inverse: bool = False) -> StringWord | None:
    """Auslander-Reiten translate of a string; None on projectives (injectives for the inverse).

    tau adds a cohook at every end where that is possible and deletes a hook
    at the remaining ends; the inverse adds hooks and deletes cohooks.
    """
    if inverse:
        return _translate(s, Hook.HOOK, Hook.COHOOK)
    return _translate(s, Hook.COHOOK, Hook.HOOK)


def tau_inverse(s: StringWord) -> StringWord | None:
    return tau(s, inverse=True)


def is_projective(s: StringWord) -> bool:
    return tau(s) is None


def is_injective(s: StringWord) -> bool:
    return tau(s, inverse=True) is None


def projective(eps: Orientation | str, j: int) -> StringWord:
    """P(j): the string of all direct paths leaving j."""
    o = Orientation.parse(eps)
    hi = j
    while o.eps(hi) > 0:
        hi += 1
    lo = j
    while o.eps(lo - 1) < 0:
        lo -= 1
    return StringWord.window(o, lo, hi - lo + 1)


def injective(eps: Orientation | str, j: int) -> StringWord:
    """I(j): the string of all direct paths arriving at j."""
    o = Orientation.parse(eps)
    hi = j
    while o.eps(hi) < 0:
        hi += 1
    lo = j
    while o.eps(lo - 1) > 0:
        lo -= 1
    return StringWord.window(o, lo, hi - lo + 1)


def band(eps: Orientation | str, start: int = 1) -> StringWord:
    o = Orientation.parse(eps)
    return StringWord(o, o.vertex(start), o.p + 1, cyclic=True)


def classify(s: StringWord) -> Component:
    """Component of the module by the arrows at the two ends of the string.

    Arrows into both ends: preprojective.  Out of both: preinjective.  Into
    the start and out of the end: left regular.  The reverse: right regular.
    """
    if s.cyclic:
        return Component.BAND
    o = s.orientation
    into_start = o.eps(s.start - 1) > 0
    into_end = o.eps(s.start + s.length - 1) < 0
    if into_start and into_end:
        return Component.PREPROJECTIVE
    if not into_start and not into_end:
        return Component.PREINJECTIVE
    return Component.LEFT_REGULAR if into_start else Component.RIGHT_REGULAR


@dataclass(frozen=True)
class Representation:
    """Dimension vector plus one 0/1 matrix (rows: target basis) per arrow."""

    dims: tuple[int, ...]
    maps: tuple[tuple[tuple[int, ...], ...], ...]


def to_representation(s: StringWord) -> Representation:
    """The string module as a quiver representation.

    Each vertex gets one basis vector per visit, ordered from the last visit
    to the first; every letter sends its source vector to its target vector.
    """
    _require_string(s)
    o = s.orientation
    q = quiver_from_orientation(o)
    verts = s.vertices
    dims = [0] * o.p
    for v in verts:
        dims[v - 1] += 1
    seen = [0] * o.p
    basis = []
    for v in verts:
        seen[v - 1] += 1
        basis.append(dims[v - 1] - seen[v - 1])
    mats = []
    for a, (src, tgt) in enumerate(q.arrows, start=1):
        mats.append([[0] * dims[src - 1] for _ in range(dims[tgt - 1])])
    for t, let in enumerate(s.letters):
        src, tgt = q.arrows[let.arrow - 1]
        here, there = (t, t + 1) if not let.inverse else (t + 1, t)
        mats[let.arrow - 1][basis[there]][basis[here]] = 1
    return Representation(tuple(dims), tuple(tuple(tuple(r) for r in m) for m in mats))


def dimension_vector(s: StringWord) -> tuple[int, ...]:
    dims = [0] * s.p
    for v in s.vertices:
        dims[v - 1] += 1
    return tuple(dims)


def render_text(s: StringWord) -> str:
    """Name plus a tent drawing: each arrow's head sits on the lower row."""
    _require_string(s)
    verts = s.vertices
    signs = s.signs
    level = [0]
    for e in signs:
        level.append(level[-1] - 1 if e > 0 else level[-1] + 1)
    top = max(level)
    rows = [[" "] * (4 * len(verts)) for _ in range(top - min(level) + 1)]
    for t, v in enumerate(verts):
        rows[top - level[t]][4 * t] = str(v)[-1]
    for t, e in enumerate(signs):
        r = top - max(level[t], level[t + 1])
        rows[r][4 * t + 2] = "\\" if level[t + 1] < level[t] else "/"
    lines = ["".join(r).rstrip() for r in rows]
    return "\n".join([s.name] + lines)
