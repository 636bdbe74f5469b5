"""Quiver mutation, exchange matrices and exact seed mutation.

Cluster variables are Laurent polynomials with integer coefficients, stored
sparsely as ``{exponent tuple: coefficient}``.  Exponents may be negative, so
a Laurent polynomial is already in monomial-denominator normal form.
Division is exact: the divisor's monomial content is stripped and the
remaining polynomial quotient is found by long division, so a non-Laurent
result raises :class:`IntegrityError` instead of being silently rounded.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .annulus import DomainError


class IntegrityError(ArithmeticError):
    """An exchange relation failed to divide exactly."""


@dataclass(frozen=True)
class MultiQuiver:
    """Quiver on vertices ``1..size``; ``arrows[i][j]`` counts arrows i -> j (0-based storage)."""

    arrows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        size = len(self.arrows)
        for i, row in enumerate(self.arrows):
            if len(row) != size:
                raise DomainError("the multiplicity matrix must be square")
            if row[i]:
                raise DomainError(f"loop at vertex {i + 1}")
            for j, a in enumerate(row):
                if a < 0:
                    raise DomainError("negative arrow multiplicity")
                if a and self.arrows[j][i]:
                    raise DomainError(f"2-cycle between {i + 1} and {j + 1}")

    @classmethod
    def from_arrows(cls, size: int, arrows: Iterable[Sequence[int]]) -> "MultiQuiver":
        """Build from ``(i, j)`` or ``(i, j, multiplicity)`` triples with 1-based vertices."""
        mat = [[0] * size for _ in range(size)]
        for arrow in arrows:
            i, j, mult = (tuple(arrow) + (1,))[:3]
            if not (1 <= i <= size and 1 <= j <= size):
                raise DomainError(f"arrow {i}->{j} leaves the vertex set")
            mat[i - 1][j - 1] += mult
        return cls(tuple(map(tuple, mat)))

    @property
    def size(self) -> int:
        return len(self.arrows)

    def arrow_list(self) -> list[tuple[int, int, int]]:
        return [(i + 1, j + 1, a) for i, row in enumerate(self.arrows) for j, a in enumerate(row) if a]

    def __str__(self):
        return ", ".join(f"{i}->{j}" + (f" x{a}" if a > 1 else "") for i, j, a in self.arrow_list())


def quiver_of_orientation(eps) -> MultiQuiver:
    """The type Ã quiver of an orientation vector as a multi-quiver."""
    from .strings import quiver_from_orientation

    q = quiver_from_orientation(eps)
    return MultiQuiver.from_arrows(q.p, q.arrows)


def exchange_matrix(q: MultiQuiver) -> tuple[tuple[int, ...], ...]:
    a = q.arrows
    return tuple(tuple(a[i][j] - a[j][i] for j in range(q.size)) for i in range(q.size))


def _check_vertex(q: MultiQuiver, k: int) -> int:
    if not 1 <= k <= q.size:
        raise DomainError(f"vertex {k} out of range 1..{q.size}")
    return k - 1


def mutate_quiver(q: MultiQuiver, k: int) -> MultiQuiver:
    """Mutation at ``k``: compose paths through k, reverse arrows at k, cancel 2-cycles."""
    k = _check_vertex(q, k)
    size = q.size
    a = [list(row) for row in q.arrows]
    for i in range(size):
        for j in range(size):
            if i != k and j != k and i != j:
                a[i][j] += q.arrows[i][k] * q.arrows[k][j]
    for x in range(size):
        a[x][k], a[k][x] = q.arrows[k][x], q.arrows[x][k]
    for i in range(size):
        for j in range(i + 1, size):
            c = min(a[i][j], a[j][i])
            a[i][j] -= c
            a[j][i] -= c
    return MultiQuiver(tuple(map(tuple, a)))


def mutate_matrix(b: Sequence[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    """Matrix mutation of a skew-symmetric ``b`` at 1-based ``k``."""
    k -= 1
    size = len(b)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        out.append(tuple(row))
    return tuple(out)


Monomial = tuple[int, ...]


class Laurent:
    """Sparse Laurent polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError("monomial has the wrong number of exponents")
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), 0) + c
        self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Laurent":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "Laurent":
        mono = [0] * nvars
        mono[i - 1] = power
        return cls(nvars, {tuple(mono): 1})

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "Laurent") -> "Laurent":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Laurent(self.nvars, terms)

    def __neg__(self):
        return Laurent(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Laurent(self.nvars, terms)

    def __pow__(self, e: int) -> "Laurent":
        if e < 0:
            raise ValueError("negative powers need exact division")
        out = Laurent.constant(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def shifted(self, mono: Monomial) -> "Laurent":
        return Laurent(self.nvars, {tuple(a + b for a, b in zip(m, mono)): c
                                    for m, c in self.terms.items()})

    def content(self) -> Monomial:
        """Componentwise minimum exponent (the largest monomial dividing every term)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(m[i] for m in self.terms) for i in range(self.nvars))

    def denominator(self) -> Monomial:
        """Exponents of the reduced monomial denominator."""
        return tuple(max(0, -e) for e in self.content())

    def __truediv__(self, other: "Laurent") -> "Laurent":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        cn, cd = self.content(), other.content()
        num = self.shifted(tuple(-e for e in cn))
        den = other.shifted(tuple(-e for e in cd))
        quotient = _poly_divide(num, den)
        return quotient.shifted(tuple(a - b for a, b in zip(cn, cd)))

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"Laurent({format_laurent(self)!r})"


def _leading(p: Laurent) -> Monomial:
    return max(p.terms)


def _poly_divide(num: Laurent, den: Laurent) -> Laurent:
    """Exact division of polynomials with nonnegative exponents (lex order)."""
    quotient: dict[Monomial, int] = {}
    rem = num
    lead = _leading(den)
    lc = den.terms[lead]
    while not rem.is_zero():
        lm = _leading(rem)
        step = tuple(a - b for a, b in zip(lm, lead))
        coeff, r = divmod(rem.terms[lm], lc)
        if r or any(e < 0 for e in step):
            raise IntegrityError("exchange polynomial is not divisible by the old variable")
        quotient[step] = quotient.get(step, 0) + coeff
        rem = rem - Laurent(den.nvars, {step: coeff}) * den
    return Laurent(num.nvars, quotient)


def format_laurent(p: Laurent) -> str:
    """Canonical text: terms sorted by exponent vector, descending; explicit exponents."""
    if p.is_zero():
        return "0"
    parts = []
    for mono in sorted(p.terms, reverse=True):
        c = p.terms[mono]
        factors = [f"x{i + 1}^{e}" for i, e in enumerate(mono) if e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(r"^(\d+)?((?:\*?x\d+\^-?\d+)*)$")
_FACTOR = re.compile(r"x(\d+)\^(-?\d+)")


def parse_laurent(text: str, nvars: int) -> Laurent:
    """Inverse of :func:`format_laurent` (binary operators must be space separated)."""
    tokens = text.split()
    if tokens == ["0"]:
        return Laurent(nvars)
    if not tokens or len(tokens) % 2 == 0:
        raise DomainError(f"cannot read Laurent polynomial {text!r}")
    head = tokens[0]
    signed = [("-", head[1:]) if head.startswith("-") else ("+", head)]
    for op, body in zip(tokens[1::2], tokens[2::2]):
        if op not in "+-":
            raise DomainError(f"expected + or - in {text!r}")
        signed.append((op, body))
    terms: dict[Monomial, int] = {}
    for sign, body in signed:
        m = _TERM.match(body)
        if not m or not body:
            raise DomainError(f"cannot read Laurent term {body!r}")
        c = int(m.group(1)) if m.group(1) else 1
        mono = [0] * nvars
        for idx, e in _FACTOR.findall(m.group(2)):
            idx = int(idx)
            if not 1 <= idx <= nvars:
                raise DomainError(f"variable x{idx} out of range")
            mono[idx - 1] += int(e)
        key = tuple(mono)
        terms[key] = terms.get(key, 0) + (c if sign == "+" else -c)
    return Laurent(nvars, terms)


@dataclass(frozen=True)
class LaurentSeed:
    quiver: MultiQuiver
    variables: tuple[Laurent, ...]

    @classmethod
    def initial(cls, q: MultiQuiver) -> "LaurentSeed":
        return cls(q, tuple(Laurent.variable(q.size, i) for i in range(1, q.size + 1)))

    def is_laurent(self) -> bool:
        """Every variable is a Laurent polynomial; true by construction, kept as an explicit check."""
        return all(isinstance(v, Laurent) and not v.is_zero() for v in self.variables)


def mutate_seed(seed: LaurentSeed, k: int) -> LaurentSeed:
    """Exchange the k-th variable: x_k' = (prod_{i->k} x_i^b_ik + prod_{k->j} x_j^b_kj) / x_k."""
    q = seed.quiver
    kk = _check_vertex(q, k)
    b = exchange_matrix(q)
    nvars = seed.variables[0].nvars
    incoming = Laurent.constant(nvars, 1)
    outgoing = Laurent.constant(nvars, 1)
    for i in range(q.size):
        if b[i][kk] > 0:
            incoming = incoming * seed.variables[i] ** b[i][kk]
        if b[kk][i] > 0:
            outgoing = outgoing * seed.variables[i] ** b[kk][i]
    new = (incoming + outgoing) / seed.variables[kk]
    variables = list(seed.variables)
    variables[kk] = new
    return LaurentSeed(mutate_quiver(q, k), tuple(variables))


def mutate_sequence(seed: LaurentSeed, ks: Iterable[int]) -> LaurentSeed:
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed
