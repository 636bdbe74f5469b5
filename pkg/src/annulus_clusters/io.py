"""JSON interchange formats for every value the command line reads or writes."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .annulus import Arc, BoundaryPoint, MarkedAnnulus, Side, Triangulation
from .cluster import ZERO, ClusterObject, FamilyReport, Indecomposable, ShiftedProjective
from .families import CellId
from .mutation import LaurentSeed, MultiQuiver, format_laurent, parse_laurent
from .strings import Letter, Orientation, StringWord, band


class FormatError(ValueError):
    """Input is not well-formed for the expected schema."""


def _need(obj: Any, key: str, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field {key!r}")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise FormatError(f"field {key!r} must be an integer")
    if not isinstance(value, kind):
        raise FormatError(f"field {key!r} has the wrong type")
    return value


def point_to_json(p: BoundaryPoint) -> dict:
    return {"side": p.side.value, "index": p.index}


def point_from_json(obj: Any) -> BoundaryPoint:
    side = _need(obj, "side", str)
    if side not in ("outer", "inner"):
        raise FormatError(f"unknown side {side!r}")
    return BoundaryPoint(Side(side), _need(obj, "index", int))


def arc_to_json(a: Arc) -> dict:
    return {"start": point_to_json(a.start), "end": point_to_json(a.end), "winding": a.winding}


def arc_from_json(obj: Any) -> Arc:
    return Arc(point_from_json(_need(obj, "start", dict)), point_from_json(_need(obj, "end", dict)),
               _need(obj, "winding", int))


def triangulation_to_json(t: Triangulation, cell: CellId | None = None) -> dict:
    out = {"n": t.annulus.n, "m": t.annulus.m, "arcs": [arc_to_json(a) for a in t.arcs]}
    if cell is not None:
        out["cell"] = cell_to_json(cell)
    return out


def triangulation_from_json(obj: Any, validate: bool = True) -> Triangulation:
    """Read a triangulation; with ``validate`` every invariant is checked."""
    from .annulus import validate_triangulation

    ann = MarkedAnnulus(_need(obj, "n", int), _need(obj, "m", int))
    arcs = [arc_from_json(a) for a in _need(obj, "arcs", list)]
    if validate:
        return validate_triangulation(arcs, ann)
    return Triangulation.of(ann, arcs)


def cell_to_json(c: CellId) -> dict:
    return {"k": c.k, "i": c.i, "j": c.j}


def cell_from_json(obj: Any) -> CellId:
    return CellId(_need(obj, "k", int), _need(obj, "i", int), _need(obj, "j", int))


def string_to_json(s: StringWord) -> dict:
    out = {"quiver": {"eps": str(s.orientation)}, "start": s.start,
           "letters": [{"arrow": let.arrow, "inverse": let.inverse} for let in s.letters]}
    if s.cyclic:
        out["band"] = True
    return out


def string_from_json(obj: Any) -> StringWord:
    eps = Orientation.parse(_need(_need(obj, "quiver", dict), "eps", str))
    start = _need(obj, "start", int)
    letters = [Letter(_need(x, "arrow", int), _need(x, "inverse", bool))
               for x in _need(obj, "letters", list)]
    if obj.get("band"):
        b = band(eps, start)
        if letters != b.letters:
            raise FormatError("band letters must go once around the quiver from its start")
        return b
    return StringWord.from_letters(eps, start, letters)


def indecomposable_to_json(x: Indecomposable) -> dict:
    if isinstance(x, StringWord):
        return {"string": string_to_json(x), "name": x.name}
    if isinstance(x, ShiftedProjective):
        return {"shiftedProjective": x.vertex}
    return {"zero": True}


def indecomposable_from_json(obj: Any) -> Indecomposable:
    if isinstance(obj, dict) and "string" in obj:
        return string_from_json(obj["string"])
    if isinstance(obj, dict) and "shiftedProjective" in obj:
        return ShiftedProjective(_need(obj, "shiftedProjective", int))
    if isinstance(obj, dict) and obj.get("zero") is True:
        return ZERO
    raise FormatError("unknown indecomposable")


def cluster_to_json(c: ClusterObject) -> dict:
    return {"summands": [indecomposable_to_json(s) for s in c.summands], "text": str(c)}


def cluster_from_json(obj: Any) -> ClusterObject:
    return ClusterObject.of(indecomposable_from_json(s) for s in _need(obj, "summands", list))


def quiver_to_json(q: MultiQuiver) -> dict:
    return {"vertices": q.size, "arrows": [list(a) for a in q.arrow_list()]}


def quiver_from_json(obj: Any) -> MultiQuiver:
    size = _need(obj, "vertices", int)
    arrows = _need(obj, "arrows", list)
    for a in arrows:
        if not (isinstance(a, list) and len(a) in (2, 3) and all(isinstance(v, int) for v in a)):
            raise FormatError("arrows are [source, target] or [source, target, multiplicity]")
    return MultiQuiver.from_arrows(size, arrows)


def seed_to_json(s: LaurentSeed) -> dict:
    return {"quiver": quiver_to_json(s.quiver), "variables": [format_laurent(v) for v in s.variables]}


def seed_from_json(obj: Any) -> LaurentSeed:
    q = quiver_from_json(_need(obj, "quiver", dict))
    texts = _need(obj, "variables", list)
    if len(texts) != q.size:
        raise FormatError("one variable per vertex is required")
    return LaurentSeed(q, tuple(parse_laurent(_str(t), q.size) for t in texts))


def _str(x):
    if not isinstance(x, str):
        raise FormatError("variables are Laurent strings")
    return x


def report_to_json(r: FamilyReport) -> dict:
    return {
        "z": r.z,
        "positions": r.positions,
        "pass": r.passed,
        "summands": [{
            "arc": arc_to_json(s.arc),
            "regular": s.regular,
            "before": indecomposable_to_json(s.before),
            "after": indecomposable_to_json(s.after),
            "expected": indecomposable_to_json(s.expected),
            "pass": s.passed,
        } for s in r.summands],
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def load_json(path: str | Path) -> Any:
    """Read JSON from a file (or an SVG written by this package)."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("<"):
        from .render import metadata_json

        try:
            text = metadata_json(text)
        except ValueError as exc:
            raise FormatError(f"{path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
