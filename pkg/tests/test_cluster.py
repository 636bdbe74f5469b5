from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annulus_clusters.annulus import (
    Arc,
    Direction,
    DomainError,
    MarkedAnnulus,
    Side,
    dehn_twist_arc,
    inner,
    outer,
    validate_triangulation,
)
from annulus_clusters.checks import arcs_with_windings
from annulus_clusters.cluster import (
    ZERO,
    ClusterObject,
    RayKind,
    ShiftedProjective,
    Step,
    cluster_of,
    object_of,
    phi,
    phi_inverse,
    ray_step,
    steep_frame,
    triangulation_of,
    twist_object,
    verify_family_theorem,
)
from annulus_clusters.families import enumerate_representatives
from annulus_clusters.strings import StringWord, band, classify, Component

E = "+-+-"
F = steep_frame(E)


def S(name, eps=E):
    return StringWord.named(eps, name)


def test_steep_frame_labels_and_orientation():
    assert [F.steep_label(a) for a in F.steep_arcs] == [1, 2, 3, 4]
    assert F.orientation_from_chords() == F.orientation
    for eps in ["++-", "+-+-", "+++-", "+--", "+-++-", "++--"]:
        frame = steep_frame(eps)
        assert str(frame.orientation_from_chords()) == eps
        validate_triangulation(frame.steep_arcs, frame.annulus)


def test_steep_arcs_map_to_shifted_projectives():
    for j, arc in enumerate(F.steep_arcs, start=1):
        assert phi(arc, F) is ZERO
        assert object_of(arc, F) == ShiftedProjective(j)
        assert phi_inverse(ShiftedProjective(j), F) == arc


def test_simple_and_exterior_examples():
    crosses_third_only = next(a for a in arcs_with_windings(F.annulus, 1) if F.crossed(a) == [3])
    assert phi(crosses_third_only, F) == S("33_1")
    ext = next(a for a in arcs_with_windings(F.annulus, 1) if a.is_exterior and F.crossed(a) == [3, 4])
    assert phi(ext, F) == S("34_2")


def test_shifted_projective_text():
    assert str(ShiftedProjective(3)) == "ΣP(3)"
    assert str(ClusterObject.of([ShiftedProjective(2), S("33_1")])) == "33_1 ⊕ ΣP(2)"


@pytest.mark.parametrize("eps", ["+-+-", "++-", "+--", "+++-", "++--", "+-++-"])
def test_phi_inverse_round_trip(eps):
    frame = steep_frame(eps)
    for arc in arcs_with_windings(frame.annulus, 2):
        obj = object_of(arc, frame)
        assert obj is not ZERO
        assert phi_inverse(obj, frame) == arc


def test_phi_inverse_rejects_bands_and_zero():
    with pytest.raises(DomainError):
        phi_inverse(band(E), F)
    with pytest.raises(DomainError):
        phi_inverse(ZERO, F)
    with pytest.raises(DomainError):
        phi_inverse(ShiftedProjective(9), F)


def test_worked_example_triangulation():
    cluster = [S("33_1"), ShiftedProjective(1), ShiftedProjective(2), ShiftedProjective(4)]
    t = triangulation_of(cluster, F)
    assert set(t.arcs) == {
        Arc(outer(1), inner(1), 0), Arc(inner(1), outer(1), 0),
        Arc(inner(1), outer(2), 0), Arc(inner(2), outer(1), 0),
    }
    assert cluster_of(t, F) == ClusterObject.of(cluster)
    twisted = cluster_of(t.full_twist(1), F)
    assert str(twisted) == "22_1 ⊕ 24_3 ⊕ 44_1 ⊕ ΣP(1)"
    for z in range(-2, 3):
        assert verify_family_theorem(t, z, F).passed


def test_regular_exterior_triangulation_is_valid():
    cluster = [S("33_1"), S("34_2"), ShiftedProjective(1), ShiftedProjective(2)]
    t = triangulation_of(cluster, F)
    assert cluster_of(t, F) == ClusterObject.of(cluster)


def test_ray_and_coray_examples():
    ray = [ray_step(S("33_1"), Step.FORWARD, RayKind.RAY, k, F) for k in range(5)]
    assert [str(x) for x in ray] == ["33_1", "ΣP(4)", "ΣP(1)", "22_1", "24_3"]
    coray = [ray_step(S("11_1"), Step.FORWARD, RayKind.CORAY, k, F) for k in range(5)]
    assert [str(x) for x in coray] == ["11_1", "ΣP(4)", "ΣP(3)", "22_1", "42_3"]
    assert ray_step(S("24_3"), Step.BACKWARD, RayKind.RAY, 4, F) == S("33_1")
    assert ray_step(S("24_3"), Step.FORWARD, RayKind.RAY, -4, F) == S("33_1")


def test_regulars_lie_on_no_ray():
    with pytest.raises(DomainError):
        ray_step(S("34_2"), Step.FORWARD, RayKind.RAY, 1, F)
    with pytest.raises(DomainError):
        twist_object(band(E), Side.INNER, Direction.CW, F)


def test_regular_strings_fixed_by_other_boundary():
    right = S("34_2")
    assert classify(right) is Component.RIGHT_REGULAR
    assert twist_object(right, Side.OUTER, Direction.CW, F) == right
    left = S("23_2")
    assert twist_object(left, Side.INNER, Direction.CCW, F) == left


@pytest.mark.parametrize("eps", ["+-+-", "++-", "+--", "+-", "++--", "+-++-", "+++-"])
def test_twist_commutes_with_phi(eps):
    frame = steep_frame(eps)
    ann = frame.annulus
    for arc in arcs_with_windings(ann, 2):
        obj = object_of(arc, frame)
        for boundary in Side:
            for direction in Direction:
                moved = dehn_twist_arc(arc, ann, boundary, direction)
                assert twist_object(obj, boundary, direction, frame) == object_of(moved, frame), \
                    (arc, boundary, direction)


@pytest.mark.parametrize("shape", [(2, 2), (2, 1), (1, 2), (3, 1)])
def test_family_theorem_on_representatives(shape):
    n, m = shape
    frame = steep_frame("+" * n + "-" * m)
    for _, t in enumerate_representatives(n, m):
        for z in range(-2, 3):
            report = verify_family_theorem(t, z, frame)
            assert report.passed, report
            assert report.positions == z * m


def test_family_theorem_rejects_foreign_triangulation():
    t = next(iter(enumerate_representatives(1, 1)))[1]
    with pytest.raises(DomainError):
        verify_family_theorem(t, 1, F)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(arcs_with_windings(MarkedAnnulus(2, 2), 3)),
       st.sampled_from([RayKind.RAY, RayKind.CORAY]), st.integers(0, 6))
def test_ray_steps_are_invertible(arc, kind, k):
    obj = object_of(arc, F)
    try:
        there = ray_step(obj, Step.FORWARD, kind, k, F)
    except DomainError:
        assert isinstance(obj, StringWord)
        assert classify(obj) in (Component.LEFT_REGULAR, Component.RIGHT_REGULAR)
        return
    assert ray_step(there, Step.BACKWARD, kind, k, F) == obj
