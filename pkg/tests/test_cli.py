from __future__ import annotations

import json

import pytest

from annulus_clusters import io
from annulus_clusters.cli import main
from annulus_clusters.cluster import ShiftedProjective, steep_frame, triangulation_of
from annulus_clusters.families import enumerate_representatives
from annulus_clusters.strings import StringWord


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def worked_example(tmp_path):
    frame = steep_frame("+-+-")
    t = triangulation_of([StringWord.named("+-+-", "33_1"), ShiftedProjective(1),
                          ShiftedProjective(2), ShiftedProjective(4)], frame)
    path = tmp_path / "worked.json"
    path.write_text(io.dumps(io.triangulation_to_json(t)), encoding="utf-8")
    return path, t


def test_count(capsys):
    assert run(capsys, "count", "2", "2")[:2] == (0, "18\n")
    assert run(capsys, "count", "6", "6")[1] == "1280664\n"


def test_count_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "two", "2"])
    assert info.value.code == 1
    assert run(capsys, "count", "0", "2")[0] == 2


def test_missing_subcommand_is_malformed():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 1


def test_enumerate_json_and_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "2", "2", "--json", "--svg", str(tmp_path / "figs"))
    assert code == 0
    data = json.loads(out)
    assert len(data) == 18
    assert all("cell" in d for d in data)
    assert len(list((tmp_path / "figs").glob("*.svg"))) == 18


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "1", "2")
    assert code == 0 and len(out.splitlines()) == 4


def test_brute_reports_every_small_triangulation(capsys):
    code, out, _ = run(capsys, "brute", "2", "2", "--json")
    assert code == 0 and len(json.loads(out)) == 19
    assert run(capsys, "brute", "6", "6")[0] == 2


def test_canonical_and_twist(capsys, tmp_path):
    cell, rep = next(iter(enumerate_representatives(2, 2)))
    path = tmp_path / "rep.json"
    path.write_text(io.dumps(io.triangulation_to_json(rep)), encoding="utf-8")
    code, out, _ = run(capsys, "twist", str(path), "--boundary", "inner", "--dir", "cw", "--full", "2")
    assert code == 0
    twisted = tmp_path / "twisted.json"
    twisted.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "canonical", str(twisted))
    data = json.loads(out)
    assert code == 0 and data["z"] == -2
    assert io.cell_from_json(data["cell"]) == cell
    assert io.triangulation_from_json(data["representative"]) == rep


def test_elementary_twist_default(capsys, worked_example):
    path, t = worked_example
    code, out, _ = run(capsys, "twist", str(path), "--boundary", "outer", "--dir", "ccw")
    assert code == 0
    assert io.triangulation_from_json(json.loads(out)) == t.twisted("outer", "ccw")


def test_phi_worked_example(capsys, worked_example):
    path, _ = worked_example
    code, out, _ = run(capsys, "phi", str(path), "--eps", "+-+-")
    assert code == 0
    assert json.loads(out)["text"] == "33_1 ⊕ ΣP(1) ⊕ ΣP(2) ⊕ ΣP(4)"


def test_phi_rejects_wrong_orientation(capsys, worked_example):
    path, _ = worked_example
    assert run(capsys, "phi", str(path), "--eps", "+++-")[0] == 2
    assert run(capsys, "phi", str(path), "--eps", "+x")[0] == 1


def test_tau(capsys, tmp_path):
    assert run(capsys, "tau", "22_1", "--eps", "+-+-", "--inverse")[1] == "44_5\n"
    assert run(capsys, "tau", "22_1", "--eps", "+-+-")[1] == "undefined\n"
    path = tmp_path / "s.json"
    path.write_text(io.dumps(io.string_to_json(StringWord.named("+-+-", "23_2"))), encoding="utf-8")
    assert run(capsys, "tau", str(path))[1] == "41_2\n"
    assert run(capsys, "tau", "22_1")[0] == 1
    assert run(capsys, "tau", "2x_1", "--eps", "+-+-")[0] == 1
    assert run(capsys, "tau", "23_3", "--eps", "+-+-")[0] == 2


def test_mutate(capsys, tmp_path):
    path = tmp_path / "q.json"
    path.write_text(json.dumps({"vertices": 3, "arrows": [[1, 2], [2, 3], [3, 1, 2]]}), encoding="utf-8")
    code, out, _ = run(capsys, "mutate", str(path), "--at", "2")
    data = json.loads(out)
    assert code == 0
    assert data["quiver"]["arrows"] == [[2, 1, 1], [3, 1, 1], [3, 2, 1]]
    assert data["variables"][1] == "x1^1*x2^-1 + x2^-1*x3^1"
    seed = tmp_path / "seed.json"
    seed.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "mutate", str(seed), "--at", "2")
    assert json.loads(out)["variables"] == ["x1^1", "x2^1", "x3^1"]
    assert run(capsys, "mutate", str(path), "--at", "a")[0] == 1
    assert run(capsys, "mutate", str(path), "--at", "5")[0] == 2


def test_verify_family(capsys, worked_example):
    path, _ = worked_example
    code, out, _ = run(capsys, "verify-family", str(path), "--z", "1", "--eps", "+-+-")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["positions"] == 2


def test_check_quick(capsys):
    code, out, _ = run(capsys, "check", "--level", "quick")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_render(capsys, tmp_path, worked_example):
    path, t = worked_example
    out = tmp_path / "w.svg"
    assert run(capsys, "render", str(path), "--out", str(out), "--cover", "--eps", "+-+-")[0] == 0
    assert io.triangulation_from_json(io.load_json(out)) == t
    assert run(capsys, "phi", str(out), "--eps", "+-+-")[0] == 0


def test_missing_file_and_bad_json(capsys, tmp_path):
    assert run(capsys, "phi", str(tmp_path / "nope.json"))[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    assert run(capsys, "canonical", str(bad))[0] == 1


def test_invalid_triangulation_is_a_domain_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "m": 2, "arcs": []}), encoding="utf-8")
    code, _, err = run(capsys, "canonical", str(bad))
    assert code == 2 and "domain error" in err
