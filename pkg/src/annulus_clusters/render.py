"""Static SVG figures of triangulations: the annulus itself or a strip of its cover.

Each document carries the triangulation's JSON in its ``<metadata>`` element,
so a rendered figure can be fed back to the command line.
"""
from __future__ import annotations

import json
import math
import re
from html import escape, unescape

from .annulus import Arc, MarkedAnnulus, Side, Triangulation, lift_arc
from .cluster import SteepFrame

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2")
_SAMPLES = 96


def _fmt(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _path(points) -> str:
    head, *rest = points
    return f"M {_fmt(head[0])} {_fmt(head[1])} " + " ".join(f"L {_fmt(x)} {_fmt(y)}" for x, y in rest)


def _height(x0: int, x1: int, x: float, L: int) -> float:
    """Depth of an exterior arc into the interior at abscissa x (0 at its ends)."""
    span = x1 - x0
    s = (x - x0) / span if span else 0.0
    return (0.25 + 0.45 * span / L) * math.sin(math.pi * s)


def _curve(arc: Arc, ann: MarkedAnnulus, dx: int = 0):
    """Sample points (x, y) of the lift of ``arc`` in cover coordinates, y = 0 outer."""
    s0, x0, s1, x1 = lift_arc(arc, ann).raw()
    x0, x1 = x0 + dx, x1 + dx
    pts = []
    for t in range(_SAMPLES + 1):
        u = t / _SAMPLES
        x = x0 + u * (x1 - x0)
        if s0 != s1:
            y = s0 + u * (s1 - s0)
        else:
            h = _height(min(x0, x1), max(x0, x1), x, ann.scale)
            y = h if s0 == 0 else 1 - h
        pts.append((x, y))
    return pts


def _document(width: int, height: int, t: Triangulation, body: list[str], title: str) -> str:
    from .io import dumps, triangulation_to_json

    meta = escape(dumps(triangulation_to_json(t)), quote=False)
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        f"<metadata>{meta}</metadata>",
        '<rect width="100%" height="100%" fill="white"/>',
        *body,
        "</svg>",
        "",
    ])


def render_annulus(t: Triangulation) -> str:
    """Two concentric circles with marked points and arcs winding as they should."""
    ann = t.annulus
    size, c = 520, 260
    r_out, r_in = 220.0, 90.0
    L = ann.scale

    def place(x: float, y: float):
        theta = 2 * math.pi * x / L
        r = r_out - y * (r_out - r_in)
        return c + r * math.sin(theta), c - r * math.cos(theta)

    body = [
        f'<circle cx="{c}" cy="{c}" r="{_fmt(r_out)}" fill="none" stroke="black" stroke-width="2"/>',
        f'<circle cx="{c}" cy="{c}" r="{_fmt(r_in)}" fill="#eeeeee" stroke="black" stroke-width="2"/>',
    ]
    for idx, arc in enumerate(t.arcs):
        pts = [place(x, y) for x, y in _curve(arc, ann)]
        colour = _PALETTE[idx % len(_PALETTE)]
        body.append(f'<path d="{_path(pts)}" fill="none" stroke="{colour}" stroke-width="1.8">'
                    f"<title>{escape(str(arc))}</title></path>")
    for side, y, label in ((Side.OUTER, 0.0, "a"), (Side.INNER, 1.0, "b")):
        for p in ann.points(side):
            px, py = place(ann.base(p), y)
            lx, ly = place(ann.base(p), y - 0.12 if side is Side.OUTER else y + 0.18)
            body.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="black"/>')
            body.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="13" text-anchor="middle" '
                        f'dominant-baseline="middle">{label}{p.index}</text>')
    return _document(size, size, t, body, f"triangulation of A({ann.n},{ann.m})")


def render_cover(t: Triangulation, frame: SteepFrame | None = None, periods: int = 3) -> str:
    """A strip of the universal cover: grid lifts, steep chords and the lifted arcs."""
    ann = t.annulus
    L = ann.scale
    width, height, pad = 900, 320, 40
    top, bottom = pad, height - pad
    lo, hi = -L // 2, -L // 2 + periods * L
    unit = (width - 2 * pad) / (hi - lo)

    def place(x: float, y: float):
        return pad + (x - lo) * unit, bottom - y * (bottom - top)

    body = [
        f'<line x1="{pad}" y1="{bottom}" x2="{width - pad}" y2="{bottom}" stroke="black" stroke-width="2"/>',
        f'<line x1="{pad}" y1="{top}" x2="{width - pad}" y2="{top}" stroke="black" stroke-width="2"/>',
        f'<clipPath id="strip"><rect x="{pad}" y="{top - 2}" width="{width - 2 * pad}" '
        f'height="{bottom - top + 4}"/></clipPath>',
        '<g clip-path="url(#strip)">',
    ]
    shifts = range(-2 * L, periods * L + 2 * L, L)
    if frame is not None:
        p = frame.p
        for g in range(-2 * p, (periods + 2) * p):
            _, xo, _, xi = frame.chord(g)
            (ax, ay), (bx, by) = place(xo, 0), place(xi, 1)
            body.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
                        f'stroke="#999999" stroke-dasharray="4 3"/>')
    for idx, arc in enumerate(t.arcs):
        colour = _PALETTE[idx % len(_PALETTE)]
        for dx in shifts:
            pts = [place(x, y) for x, y in _curve(arc, ann, dx)]
            body.append(f'<path d="{_path(pts)}" fill="none" stroke="{colour}" stroke-width="1.6">'
                        f"<title>{escape(str(arc))}</title></path>")
    body.append("</g>")
    for side, y, label in ((Side.OUTER, 0.0, "a"), (Side.INNER, 1.0, "b")):
        step = ann.step(side)
        base = 0 if side is Side.OUTER else 2
        first = base + ((lo - base) // step) * step
        for x in range(first, hi + 1, step):
            if x < lo:
                continue
            px, py = place(x, y)
            q = ann.point_at(side, x)
            ty = py + 16 if side is Side.OUTER else py - 10
            body.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3.5" fill="black"/>')
            body.append(f'<text x="{_fmt(px)}" y="{_fmt(ty)}" font-size="12" '
                        f'text-anchor="middle">{label}{q.index}</text>')
    return _document(width, height, t, body, f"cover of A({ann.n},{ann.m})")


def render(t: Triangulation, cover: bool = False, frame: SteepFrame | None = None) -> str:
    return render_cover(t, frame) if cover else render_annulus(t)


_META = re.compile(r"<metadata>(.*?)</metadata>", re.S)


def metadata_json(svg: str) -> str:
    """The JSON text embedded by :func:`render`."""
    m = _META.search(svg)
    if not m:
        raise ValueError("no triangulation metadata in this SVG")
    text = unescape(m.group(1))
    json.loads(text)
    return text
