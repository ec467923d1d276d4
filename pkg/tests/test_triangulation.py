import random

import pytest
from hypothesis import given, settings, strategies as st

from surfembed.homology import homology
from surfembed.perm import Perm4
from surfembed.triangulation import (Triangulation, TriangulationFormatError,
                                     check_closed_3_manifold, compute_skeleton,
                                     disjoint_union, double, is_orientable,
                                     parse_triangulation, serialize_triangulation,
                                     tetrahedron_orientation, vertex_link)

from census import CENSUS
from helpers import census, random_triangulation, relabel
from oracles import naive_classes

BALL = Triangulation(1, [[None] * 4])


def test_single_boundary_tetrahedron():
    sk = BALL.skeleton
    assert (len(sk.vertex_classes), len(sk.edge_classes), len(sk.face_classes)) == (4, 6, 4)
    assert BALL.boundary_faces() == [(0, 0), (0, 1), (0, 2), (0, 3)]
    assert not check_closed_3_manifold(BALL).is_closed


def test_parse_all_boundary():
    tri = parse_triangulation("tri 1\n- - - -\n")
    assert tri.tet_count == 1 and len(tri.boundary_faces()) == 4


def test_parse_reports_involution_error_with_line():
    with pytest.raises(TriangulationFormatError) as err:
        parse_triangulation("tri 1\n0:1023 - - -\n")
    assert err.value.line == 2


@pytest.mark.parametrize("text", [
    "tri 1\n0:0123 - -\n",          # too few entries
    "tri 1\n5:0123 - - -\n",        # target out of range
    "tri 1\n0:0124 - - -\n",        # not a permutation
    "tet 1\n- - - -\n",             # bad header
    "tri 2\n- - - -\n",             # missing row
])
def test_parse_errors(text):
    with pytest.raises(TriangulationFormatError):
        parse_triangulation(text)


def test_face_glued_to_itself_rejected():
    with pytest.raises(ValueError):
        Triangulation(1, [[(0, Perm4.from_string("0213")), None, None, None]])


def test_one_tet_closed_has_two_face_classes():
    tri = parse_triangulation(CENSUS["t1_S3_o_v1"][0])
    assert len(tri.skeleton.face_classes) == 2


@pytest.mark.parametrize("name", sorted(CENSUS))
def test_census_entries(name):
    text, h1, orientable, vertices = CENSUS[name]
    tri = parse_triangulation(text)
    rep = check_closed_3_manifold(tri)
    assert rep.is_closed and rep.is_manifold
    assert is_orientable(tri) == orientable
    assert len(tri.skeleton.vertex_classes) == vertices
    assert str(homology(tri, 1)) == h1
    assert 2 * len(tri.skeleton.face_classes) == 4 * tri.tet_count


def test_reversed_edge_detected():
    # tetrahedron with face 3 glued to face 2 so that edge 01 maps to 10
    p = Perm4.from_string("1032")
    tri = Triangulation(1, [[None, None, (0, p), (0, p.inverse())]])
    rep = check_closed_3_manifold(tri)
    assert rep.reversed_edges
    assert not rep.is_manifold


def test_non_manifold_vertex_detected():
    rng = random.Random(5)
    found = False
    for _ in range(200):
        tri = random_triangulation(2, rng)
        rep = check_closed_3_manifold(tri)
        if rep.bad_vertices and not rep.reversed_edges:
            found = True
            assert not rep.is_manifold
            break
    assert found


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_skeleton_matches_fixed_point_oracle(t, seed):
    tri = random_triangulation(t, random.Random(seed), closed=seed % 2 == 0)
    sk = compute_skeleton(tri)
    assert (len(sk.vertex_classes), len(sk.edge_classes), len(sk.face_classes)) == naive_classes(tri)
    # every corner, edge and face in exactly one class
    corners = [c for cl in sk.vertex_classes for c in cl]
    assert sorted(corners) == sorted((i, v) for i in range(t) for v in range(4))
    edges = [e for cl in sk.edge_classes for e in cl]
    assert len(edges) == len(set(edges)) == 6 * t


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_vertex_link_euler_two_ways(t, seed):
    tri = random_triangulation(t, random.Random(seed))
    for k, corners in enumerate(tri.skeleton.vertex_classes):
        link = vertex_link(tri, k)
        assert link.triangle_count == len(corners)
        # edges of the link: corners times 3 sides, glued in pairs
        e = 3 * len(corners) // 2
        v = len(link.vertex_classes)
        assert link.euler_characteristic() == v - e + len(corners)


def test_double_of_ball_is_sphere():
    m = double(BALL)
    assert m.tet_count == 2 and m.is_closed
    rep = check_closed_3_manifold(m)
    assert rep.is_manifold
    assert [str(homology(m, k)) for k in range(4)] == ["Z", "0", "0", "Z"]


def test_double_rejects_closed():
    with pytest.raises(ValueError):
        double(parse_triangulation(CENSUS["t1_S3_o_v1"][0]))


def test_orientability_of_disjoint_union():
    a = double(BALL)
    assert is_orientable(disjoint_union(a, a))


def test_orientation_reversing_cycle_is_non_orientable():
    tri = parse_triangulation(CENSUS["t2_Z_n_v1"][0])
    assert not is_orientable(tri)
    # flipping by an odd relabelling of one tetrahedron keeps the verdict
    signs, ok = tetrahedron_orientation(tri)
    assert not ok


def test_is_orientable_requires_closed():
    with pytest.raises(ValueError):
        is_orientable(BALL)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(CENSUS)), st.integers(0, 10**6))
def test_invariants_stable_under_relabelling(name, seed):
    tri = parse_triangulation(CENSUS[name][0])
    other = relabel(tri, random.Random(seed))
    assert is_orientable(other) == is_orientable(tri)
    assert check_closed_3_manifold(other).is_manifold
    assert str(homology(other, 1)) == str(homology(tri, 1))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6), st.booleans())
def test_serialize_round_trip(t, seed, closed):
    tri = random_triangulation(t, random.Random(seed), closed=closed)
    text = serialize_triangulation(tri)
    assert parse_triangulation(text) == tri
    assert serialize_triangulation(parse_triangulation(text.encode())) == text


OCTAHEDRON = [(a, b, c) for a in ("x", "X") for b in ("y", "Y") for c in ("z", "Z")]


def test_doubled_thickened_sphere_is_closed_manifold():
    from surfembed.gadget import standalone_complex, thicken
    n = thicken(standalone_complex(OCTAHEDRON)).triangulation
    assert n.tet_count == 3 * len(OCTAHEDRON)
    m = double(n)
    rep = check_closed_3_manifold(m)
    assert rep.is_closed and rep.is_manifold
