from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from icosilab.golden import ONE, PHI, ZERO, GoldenNum, phi
from icosilab.geometry import (
    apply_matrix, dot, edges, face_census, golden_boxes, hull_faces, icosahedron,
    midpoint_icosidodecahedron, norm_sq, octahedron, pentagons, scale_points,
    similarity_ratio, slice_600cell, to_off,
)
from icosilab.quaternion import binary_icosahedral_group, rotation_of

half = GoldenNum(Fraction(1, 2))


@pytest.fixture(scope="module")
def group():
    return binary_icosahedral_group()


@pytest.fixture(scope="module")
def sl(group):
    return slice_600cell(group)


def as_float(points):
    return np.array([[float(c) for c in p] for p in points])


def hull_face_count(points):
    """Float oracle: facets of scipy's hull, merging coplanar simplices."""
    hull = ConvexHull(as_float(points))
    planes = {tuple(np.round(eq, 9)) for eq in hull.equations}
    return len(planes), len(hull.simplices)


def float_edge_census(points):
    x = as_float(points)
    d = ((x[:, None, :] - x[None, :, :]) ** 2).sum(-1)
    iu = np.triu_indices(len(x), 1)
    m = d[iu].min()
    return int(np.isclose(d[iu], m).sum()), m


def test_icosahedron():
    ico = icosahedron()
    assert len(ico) == 12
    assert (PHI, ZERO, GoldenNum(-1)) in ico
    assert all(norm_sq(p) == 2 + PHI for p in ico)
    dots = {dot(p, q) for p in ico for q in ico if p != q}
    assert dots == {PHI, -PHI, -(2 + PHI)}
    g = edges(ico)
    assert len(g.edges) == 30 and set(g.degrees()) == {5}
    assert all(dot(g.points[i], g.points[j]) == PHI for i, j in g.edges)
    assert float_edge_census(ico)[0] == 30


def test_octahedron():
    octa = octahedron()
    assert len(octa) == 6
    assert len(edges(octa).edges) == 12
    assert face_census(edges(octa))["triangles"] == 8


def test_600cell_edges_and_cells(group):
    pts = [q.coeffs for q in group]
    g = edges(pts)
    assert len(g.edges) == 720
    assert set(g.degrees()) == {12}
    assert g.min_dist_sq == 2 - PHI
    n, m = float_edge_census(pts)
    assert n == 720 and np.isclose(m, 2 - float(PHI))
    census = face_census(g)
    assert census["triangles"] == 1200
    assert census["tetrahedra"] == 600
    # the hull of the 600-cell is simplicial, so scipy's facet count is the cell count
    assert len(ConvexHull(as_float(pts)).simplices) == 600


def test_slice(sl):
    assert len(sl) == 30
    assert (ONE, ZERO, ZERO) in sl
    assert (half, phi * half, PHI * half) in sl
    boxes = golden_boxes()
    assert sum(len(b) for b in boxes) == 24
    assert set(sl) == set(octahedron()).union(*map(set, boxes))
    assert all(norm_sq(p) == 1 for p in sl)


def test_golden_box_proportions():
    for box in golden_boxes():
        g = edges(box)
        assert g.min_dist_sq == phi * phi
        sides = sorted({norm_sq(tuple(a - b for a, b in zip(p, q)))
                        for p in box for q in box
                        if sum(1 for a, b in zip(p, q) if a != b) == 1})
        assert sides == [phi * phi, ONE, PHI * PHI]


def test_icosidodecahedron_census(sl):
    g = edges(sl)
    assert len(g.edges) == 60
    census = face_census(g)
    assert (census["triangles"], census["pentagons"]) == (20, 12)
    assert hull_face_count(sl)[0] == 32
    assert hull_face_count(sl)[1] == 20 + 12 * 3


def test_icosahedron_census():
    assert face_census(edges(icosahedron())) == {"triangles": 20, "pentagons": 0, "tetrahedra": 0}


def test_pentagons_are_planar_and_chordless(sl):
    g = edges(sl)
    nb = g.neighbors()
    for cyc in pentagons(g):
        for a in range(5):
            for b in range(a + 2, 5):
                if (a, b) != (0, 4):
                    assert cyc[b] not in nb[cyc[a]]


def test_midpoint_icosidodecahedron(sl):
    mid = midpoint_icosidodecahedron(icosahedron())
    assert len(mid) == 30
    assert (PHI, ZERO, ZERO) in mid
    assert all(norm_sq(p) == PHI * PHI for p in mid)
    assert similarity_ratio(mid, sl) == PHI
    assert set(mid) == set(scale_points(PHI, sl))


def test_midpoint_rejects_non_icosahedron():
    with pytest.raises(ValueError):
        midpoint_icosidodecahedron(octahedron())


def test_similarity_ratio():
    ico = icosahedron()
    assert similarity_ratio(ico, ico) == 1
    assert similarity_ratio(octahedron(), ico) is None
    assert similarity_ratio(scale_points(3, ico), ico) == 3
    assert similarity_ratio(golden_boxes()[0], golden_boxes()[1]) is None


def test_rotations_preserve_slice_and_icosahedron(group, sl):
    s, ico = set(sl), set(icosahedron())
    for g in group:
        m = rotation_of(g)
        assert {apply_matrix(m, p) for p in s} == s
        assert {apply_matrix(m, p) for p in ico} == ico


def test_edges_requires_two_points():
    with pytest.raises(ValueError):
        edges([(ONE, ZERO, ZERO), (ONE, ZERO, ZERO)])


def test_hull_faces_outward(sl):
    faces = hull_faces(sl)
    assert sorted(len(f) for f in faces) == [3] * 20 + [5] * 12
    x = as_float(sl)
    for f in faces:
        a, b, c = x[f[0]], x[f[1]], x[f[2]]
        n = np.cross(b - a, c - a)
        assert n @ x[list(f)].mean(axis=0) > 0


def test_off_export(sl):
    text = to_off([sl], precision=17)
    lines = text.splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == "30 32 60"
    verts = np.array([[float(t) for t in ln.split()] for ln in lines[2:32]])
    assert np.allclose(verts, as_float(sl), atol=1e-15)
    assert len(lines) == 2 + 30 + 32
    short = to_off([icosahedron()], precision=4).splitlines()
    assert short[1] == "12 20 30"
    assert "1.618" in " ".join(short[2:14])


def test_off_rejects_4d(group):
    with pytest.raises(ValueError):
        to_off([[q.coeffs for q in group]])
