from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from annulus_clusters import io
from annulus_clusters.annulus import InvalidTriangulation, MarkedAnnulus
from annulus_clusters.cluster import ZERO, ShiftedProjective, cluster_of, steep_frame, verify_family_theorem
from annulus_clusters.families import CellId, enumerate_representatives
from annulus_clusters.mutation import LaurentSeed, MultiQuiver, mutate_sequence
from annulus_clusters.render import metadata_json, render, render_annulus, render_cover
from annulus_clusters.strings import StringWord, band

REPS = list(enumerate_representatives(2, 2))


def test_triangulation_round_trip_with_cell():
    for cell, t in REPS:
        data = io.triangulation_to_json(t, cell)
        back = json.loads(io.dumps(data))
        assert io.triangulation_from_json(back) == t
        assert io.cell_from_json(back["cell"]) == cell


def test_triangulation_json_rejects_bad_input():
    with pytest.raises(io.FormatError):
        io.triangulation_from_json({"n": 2, "arcs": []})
    with pytest.raises(io.FormatError):
        io.triangulation_from_json({"n": 2, "m": 2, "arcs": [{"start": {"side": "middle", "index": 1}}]})
    with pytest.raises(io.FormatError):
        io.triangulation_from_json({"n": True, "m": 2, "arcs": []})
    data = io.triangulation_to_json(REPS[0][1])
    data["arcs"] = data["arcs"][:-1]
    with pytest.raises(InvalidTriangulation):
        io.triangulation_from_json(data)
    assert len(io.triangulation_from_json(data, validate=False)) == 3


def test_string_round_trip_and_band():
    for name in ["33_1", "24_3", "44_5"]:
        s = StringWord.named("+-+-", name)
        assert io.string_from_json(json.loads(io.dumps(io.string_to_json(s)))) == s
    b = band("+-+-")
    assert io.string_from_json(io.string_to_json(b)) == b
    bad = io.string_to_json(b)
    bad["letters"] = bad["letters"][:-1]
    with pytest.raises(io.FormatError):
        io.string_from_json(bad)


def test_cluster_and_indecomposables_round_trip():
    frame = steep_frame("+-+-")
    for _, t in REPS:
        c = cluster_of(t, frame)
        assert io.cluster_from_json(io.cluster_to_json(c)) == c
    for x in (ZERO, ShiftedProjective(2)):
        assert io.indecomposable_from_json(io.indecomposable_to_json(x)) == x
    with pytest.raises(io.FormatError):
        io.indecomposable_from_json({"what": 1})


def test_seed_round_trip():
    q = MultiQuiver.from_arrows(3, [(1, 2), (2, 3), (3, 1, 2)])
    s = mutate_sequence(LaurentSeed.initial(q), [2, 1, 3])
    assert io.seed_from_json(json.loads(io.dumps(io.seed_to_json(s)))) == s
    assert io.quiver_from_json(io.quiver_to_json(q)) == q
    with pytest.raises(io.FormatError):
        io.quiver_from_json({"vertices": 2, "arrows": [[1]]})
    with pytest.raises(io.FormatError):
        io.seed_from_json({"quiver": io.quiver_to_json(q), "variables": ["x1^1"]})


def test_report_json_is_serialisable():
    cell, t = REPS[0]
    report = verify_family_theorem(t, 1, steep_frame("++--"))
    data = json.loads(io.dumps(io.report_to_json(report)))
    assert data["pass"] is True
    assert len(data["summands"]) == 4


def test_dumps_is_canonical():
    assert io.dumps({"b": 1, "a": "ΣP"}) == '{\n  "a": "ΣP",\n  "b": 1\n}'


def test_load_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope", encoding="utf-8")
    with pytest.raises(io.FormatError):
        io.load_json(bad)
    svg = tmp_path / "empty.svg"
    svg.write_text("<svg></svg>", encoding="utf-8")
    with pytest.raises(io.FormatError):
        io.load_json(svg)


@pytest.mark.parametrize("cover", [False, True])
def test_svg_is_deterministic_well_formed_and_carries_metadata(tmp_path, cover):
    for cell, t in REPS:
        frame = steep_frame("++--") if cover else None
        a = render(t, cover=cover, frame=frame)
        assert a == render(t, cover=cover, frame=frame)
        root = ET.fromstring(a.split("\n", 1)[1])
        assert root.tag.endswith("svg")
        assert io.triangulation_from_json(json.loads(metadata_json(a))) == t
        path = tmp_path / "t.svg"
        path.write_text(a, encoding="utf-8")
        assert io.triangulation_from_json(io.load_json(path)) == t


def test_cover_shows_steep_chords_dashed():
    t = REPS[0][1]
    svg = render_cover(t, steep_frame("++--"))
    assert "stroke-dasharray" in svg
    assert "ΣP" not in render_annulus(t)


def test_one_one_annulus_renders():
    t = next(iter(enumerate_representatives(1, 1)))[1]
    frame = steep_frame("+-")
    assert frame.annulus == MarkedAnnulus(1, 1)
    assert "<svg" in render_cover(t, frame)
    assert "<svg" in render_annulus(t)


def test_cell_json_checks_types():
    assert io.cell_to_json(CellId(1, 0, 1)) == {"k": 1, "i": 0, "j": 1}
    with pytest.raises(io.FormatError):
        io.cell_from_json({"k": "1", "i": 0, "j": 0})
