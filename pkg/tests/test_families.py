from __future__ import annotations

import pytest

from annulus_clusters.annulus import DomainError, MarkedAnnulus, validate_triangulation
from annulus_clusters.families import (
    CellId,
    brute_force_small_triangulations,
    canonicalize,
    catalan,
    cell_size,
    cells,
    count_families,
    double_sum,
    enumerate_cell,
    enumerate_representatives,
    polygon_triangulations,
    same_family,
    single_sum,
)

TABLE = {
    1: [1, 4, 15, 56, 210, 792],
    2: [4, 18, 72, 280, 1080, 4158],
    3: [15, 72, 300, 1200, 4725, 18480],
    4: [56, 280, 1200, 4900, 19600, 77616],
    5: [210, 1080, 4725, 19600, 79380, 317520],
    6: [792, 4158, 18480, 77616, 317520, 1280664],
}


@pytest.mark.parametrize("k,value", [(0, 1), (1, 1), (3, 5), (6, 132), (10, 16796)])
def test_catalan(k, value):
    assert catalan(k) == value


def test_catalan_recurrence():
    for k in range(15):
        assert catalan(k + 1) == sum(catalan(i) * catalan(k - i) for i in range(k + 1))


def test_count_table():
    for m, row in TABLE.items():
        for n, value in enumerate(row, start=1):
            assert count_families(n, m) == value


def test_count_examples():
    assert count_families(1, 1) == 1
    assert count_families(2, 2) == 18
    assert count_families(3, 1) == 15 == 3 * catalan(3)


def test_count_is_symmetric():
    for n in range(1, 9):
        for m in range(1, 9):
            assert count_families(n, m) == count_families(m, n)


def test_single_sum_identity():
    for n in range(1, 13):
        for m in range(1, 13):
            assert double_sum(n, m) == single_sum(n, m)


def test_one_inner_point():
    for n in range(1, 13):
        assert count_families(n, 1) == n * catalan(n)


@pytest.mark.parametrize("p,count", [(2, 1), (3, 1), (4, 2), (5, 5), (6, 14), (8, 132)])
def test_polygon_triangulation_counts(p, count):
    tris = polygon_triangulations(p)
    assert len(tris) == count
    assert len(set(map(tuple, tris))) == count
    for diagonals in tris:
        assert len(diagonals) == max(p - 3, 0)
        for a, b in diagonals:
            assert 1 < b - a < p - 1
        for a, b in diagonals:
            for c, d in diagonals:
                assert not (a < c < b < d)


def test_polygon_triangulations_use_labels():
    tris = polygon_triangulations(4, ["w", "x", "y", "z"])
    assert sorted(map(tuple, tris)) == [(("w", "y"),), (("x", "z"),)]


def test_cell_example_sizes():
    ann = MarkedAnnulus(2, 2)
    assert len(enumerate_cell(CellId(1, 0, 0), ann)) == 5
    assert sum(len(enumerate_cell(c, ann)) for c in cells(ann)) == 18
    assert len(list(cells(ann))) == 6
    assert len(enumerate_cell(CellId(1, 0, 0), MarkedAnnulus(1, 1))) == 1


def test_invalid_cell():
    with pytest.raises(DomainError):
        enumerate_cell(CellId(1, 1, 1), MarkedAnnulus(2, 2))


@pytest.mark.parametrize("n,m,total", [(2, 2, 18), (2, 3, 72), (1, 2, 4)])
def test_enumerate_examples(n, m, total):
    reps = list(enumerate_representatives(n, m))
    assert len(reps) == total
    assert len({t for _, t in reps}) == total


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("m", range(1, 4))
def test_cells_are_disjoint_valid_and_sized(n, m):
    ann = MarkedAnnulus(n, m)
    seen = {}
    for cell in cells(ann):
        members = enumerate_cell(cell, ann)
        assert len(members) == cell_size(cell, ann) == catalan(cell.i + cell.j) * catalan(n + m - cell.i - cell.j - 1)
        for t in members:
            assert validate_triangulation(t.arcs, ann) == t
            assert t not in seen
            seen[t] = cell


def test_enumeration_is_deterministic():
    assert list(enumerate_representatives(2, 3)) == list(enumerate_representatives(2, 3))


def test_brute_force_guard():
    with pytest.raises(DomainError):
        brute_force_small_triangulations(6, 5)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)])
def test_brute_force_matches_count_when_no_family_repeats(n, m):
    assert len(brute_force_small_triangulations(n, m)) == count_families(n, m)


def test_brute_force_finds_family_with_two_small_members():
    small = brute_force_small_triangulations(2, 2)
    assert len(small) == 19
    doubled = [(s, t) for i, s in enumerate(small) for t in small[i + 1:] if same_family(s, t)]
    assert len(doubled) == 1
    s, t = doubled[0]
    assert all(a.outer_winding == 0 for a in s.bridging) or all(a.outer_winding == 0 for a in t.bridging)
    assert {s.full_twist(-1), s.full_twist(1)} & {t}


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_brute_force_reaches_every_family(n, m):
    reps = {(c, r) for c, r in enumerate_representatives(n, m)}
    reached = set()
    for t in brute_force_small_triangulations(n, m):
        c, r, _ = canonicalize(t)
        reached.add((c, r))
    assert reached == reps


@pytest.mark.parametrize("shape", [(2, 2), (3, 2), (2, 3), (1, 3), (3, 1)])
def test_canonicalize_fixed_point_and_twists(shape):
    for cell, r in enumerate_representatives(*shape):
        assert canonicalize(r) == (cell, r, 0)
        for k in (-3, -1, 1, 3):
            assert canonicalize(r.full_twist(k)) == (cell, r, -k)


def test_same_family():
    reps = [t for _, t in enumerate_representatives(2, 2)]
    assert same_family(reps[0], reps[0])
    assert same_family(reps[0], reps[0].full_twist(2))
    assert not same_family(reps[0], reps[1])
    with pytest.raises(DomainError):
        same_family(reps[0], next(iter(enumerate_representatives(1, 1)))[1])
