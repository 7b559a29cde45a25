"""Exact polyhedra over Q(sqrt 5): construction, skeleta, face counts, OFF export."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .golden import ONE, PHI, ZERO, GoldenNum, as_golden, phi
from .quaternion import QuatSet, format_float

__all__ = [
    "Point",
    "EdgeGraph",
    "icosahedron",
    "octahedron",
    "golden_boxes",
    "slice_600cell",
    "midpoint_icosidodecahedron",
    "edges",
    "triangles",
    "tetrahedra",
    "pentagons",
    "face_census",
    "similarity_ratio",
    "scale_points",
    "apply_matrix",
    "dist_sq",
    "norm_sq",
    "hull_faces",
    "to_off",
]

Point = tuple  # tuple of GoldenNum


def _pt(coords) -> Point:
    return tuple(as_golden(c) for c in coords)


def dot(u, v) -> GoldenNum:
    s = ZERO
    for a, b in zip(u, v):
        s = s + a * b
    return s


def norm_sq(p) -> GoldenNum:
    return dot(p, p)


def sub(u, v) -> Point:
    return tuple(a - b for a, b in zip(u, v))


def add(u, v) -> Point:
    return tuple(a + b for a, b in zip(u, v))


def dist_sq(u, v) -> GoldenNum:
    return norm_sq(sub(u, v))


def cross(u, v) -> Point:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def scale_points(s, points) -> list[Point]:
    s = as_golden(s)
    return sorted(tuple(s * c for c in p) for p in points)


def apply_matrix(m, p) -> Point:
    return tuple(dot(row, p) for row in m)


# --------------------------------------------------------------------------
# constructions


def _cyclic(p):
    return [p, (p[2], p[0], p[1]), (p[1], p[2], p[0])]


def icosahedron() -> list[Point]:
    """All cyclic permutations of ``(0, ±1, ±PHI)``."""
    pts = set()
    for s1, s2 in itertools.product((1, -1), repeat=2):
        for p in _cyclic((ZERO, GoldenNum(s1), PHI * s2)):
            pts.add(p)
    return sorted(pts)


def octahedron() -> list[Point]:
    pts = []
    for axis in range(3):
        for s in (1, -1):
            p = [ZERO] * 3
            p[axis] = GoldenNum(s)
            pts.append(tuple(p))
    return sorted(pts)


def golden_boxes() -> list[list[Point]]:
    """Three boxes with half-sides ``(1, phi, PHI)/2`` in cyclically shifted axes.

    They are the imaginary parts of ``(±i ± phi j ± PHI k)/2``,
    ``(±j ± phi k ± PHI i)/2`` and ``(±k ± phi i ± PHI j)/2``.
    """
    half = GoldenNum(Fraction(1, 2))
    base = (half, phi * half, PHI * half)
    boxes = []
    for shifted in _cyclic(base):
        box = set()
        for signs in itertools.product((1, -1), repeat=3):
            box.add(tuple(s * c for s, c in zip(signs, shifted)))
        boxes.append(sorted(box))
    return boxes


def slice_600cell(group: QuatSet) -> list[Point]:
    """Imaginary parts of the group elements with zero real part."""
    return sorted(q.imag for q in group if not q.a)


def midpoint_icosidodecahedron(icosa) -> list[Point]:
    """Midpoints of the 30 icosahedron edges."""
    g = edges(icosa)
    if len(g.points) != 12 or len(g.edges) != 30 or any(d != 5 for d in g.degrees()):
        raise ValueError("input is not an icosahedron")
    half = GoldenNum(Fraction(1, 2))
    mids = {tuple(half * (a + b) for a, b in zip(g.points[i], g.points[j])) for i, j in g.edges}
    return sorted(mids)


# --------------------------------------------------------------------------
# skeleta


@dataclass(frozen=True)
class EdgeGraph:
    """Points joined whenever their distance is the minimum nonzero distance."""

    points: tuple
    min_dist_sq: GoldenNum
    edges: tuple

    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in self.points]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb

    def degrees(self) -> list[int]:
        return [len(s) for s in self.neighbors()]


def edges(points) -> EdgeGraph:
    pts = tuple(sorted(set(_pt(p) for p in points)))
    if len(pts) < 2:
        raise ValueError("need at least two distinct points")
    best = None
    found = []
    for i, j in itertools.combinations(range(len(pts)), 2):
        d = dist_sq(pts[i], pts[j])
        if best is None or d < best:
            best, found = d, [(i, j)]
        elif d == best:
            found.append((i, j))
    return EdgeGraph(pts, best, tuple(found))


def triangles(g: EdgeGraph) -> list[tuple[int, int, int]]:
    nb = g.neighbors()
    out = []
    for i, j in g.edges:
        for k in nb[i] & nb[j]:
            if k > j:
                out.append((i, j, k))
    return sorted(out)


def tetrahedra(g: EdgeGraph) -> list[tuple[int, int, int, int]]:
    """4-cliques; every pair is at the common edge length, so each is regular."""
    nb = g.neighbors()
    out = []
    for i, j, k in triangles(g):
        for m in nb[i] & nb[j] & nb[k]:
            if m > k:
                out.append((i, j, k, m))
    return sorted(out)


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c].inverse()
        for r in range(rank + 1, len(rows)):
            f = rows[r][c] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _exposed(pts, cyc) -> bool:
    # the centroid direction must expose exactly the cycle's vertices
    c = pts[cyc[0]]
    for v in cyc[1:]:
        c = add(c, pts[v])
    level = dot(pts[cyc[0]], c)
    if any(dot(pts[v], c) != level for v in cyc):
        return False
    members = set(cyc)
    return all(dot(p, c) < level for i, p in enumerate(pts) if i not in members)


def pentagons(g: EdgeGraph) -> list[tuple[int, ...]]:
    """Pentagonal faces: chordless, planar 5-cycles that a hyperplane exposes.

    Each is listed once, smallest vertex first.  The exposure test rules out
    vertex links such as the five neighbours of an icosahedron vertex.
    """
    nb = g.neighbors()
    pts = g.points
    out = []
    for v0 in range(len(pts)):
        for v1 in nb[v0]:
            if v1 < v0:
                continue
            for v2 in nb[v1]:
                if v2 <= v0 or v2 in nb[v0]:
                    continue
                for v3 in nb[v2]:
                    if v3 <= v0 or v3 in (v1,) or v3 in nb[v0] or v3 in nb[v1]:
                        continue
                    for v4 in nb[v3] & nb[v0]:
                        if v4 <= v0 or v4 in (v1, v2) or v4 in nb[v1] or v4 in nb[v2]:
                            continue
                        # each cycle is met in both directions; keep one
                        if v1 > v4:
                            continue
                        cyc = (v0, v1, v2, v3, v4)
                        disp = [sub(pts[v], pts[v0]) for v in cyc[1:]]
                        if _rank(disp) <= 2 and _exposed(pts, cyc):
                            out.append(cyc)
    return sorted(out)


def face_census(g: EdgeGraph) -> dict:
    return {
        "triangles": len(triangles(g)),
        "pentagons": len(pentagons(g)),
        "tetrahedra": len(tetrahedra(g)),
    }


def similarity_ratio(A, B):
    """Positive ``lam`` with ``A == lam * B`` as point sets, else ``None``."""
    A = set(_pt(p) for p in A)
    B = set(_pt(p) for p in B)
    if len(A) != len(B):
        return None
    if A == B:
        return ONE
    nonzero = sorted(p for p in B if any(p))
    if not nonzero:
        return None
    b0 = nonzero[0]
    k = next(i for i, c in enumerate(b0) if c)
    for a in A:
        lam = a[k] / b0[k]
        if lam.sign() <= 0:
            continue
        if tuple(lam * c for c in b0) != a:
            continue
        if {tuple(lam * c for c in p) for p in B} == A:
            return lam
    return None


# --------------------------------------------------------------------------
# hulls and OFF


def hull_faces(points) -> list[tuple[int, ...]]:
    """Facets of the convex hull of a small 3d point set, exactly.

    Each facet is a cyclically ordered index tuple whose normal, by the
    right-hand rule, points away from the hull.  Brute force over triples,
    meant for a few dozen points.
    """
    pts = [_pt(p) for p in points]
    n = len(pts)
    if n < 4:
        raise ValueError("need at least four points")
    faces: dict[frozenset, GoldenNum] = {}
    covered: list[frozenset] = []
    for i, j, k in itertools.combinations(range(n), 3):
        if any(i in f and j in f and k in f for f in covered):
            continue
        normal = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]))
        if not any(normal):
            continue
        pos = neg = False
        on = []
        for m in range(n):
            s = dot(normal, sub(pts[m], pts[i])).sign()
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            else:
                on.append(m)
            if pos and neg:
                break
        if pos and neg:
            continue
        face = frozenset(on)
        if pos:
            normal = tuple(-c for c in normal)
        faces[face] = normal
        covered.append(face)
    out = []
    for face, normal in faces.items():
        out.append(_order_face(pts, sorted(face), normal))
    return sorted(out, key=lambda f: (len(f), f))


def _order_face(pts, idx, normal):
    """Counter-clockwise order around ``normal`` by exact gift wrapping."""
    start = idx[0]
    order = [start]
    cur = start
    while True:
        nxt = None
        for cand in idx:
            if cand == cur:
                continue
            e = sub(pts[cand], pts[cur])
            ok = True
            for q in idx:
                if q in (cur, cand):
                    continue
                if dot(cross(e, sub(pts[q], pts[cur])), normal).sign() < 0:
                    ok = False
                    break
            if ok:
                nxt = cand
                break
        if nxt is None or nxt == start:
            break
        order.append(nxt)
        cur = nxt
        if len(order) > len(idx):
            raise RuntimeError("face ordering did not close")
    # rotate so the smallest index leads
    r = order.index(min(order))
    return tuple(order[r:] + order[:r])


def to_off(components, precision: int = 17) -> str:
    """OFF text for one or more 3d point groups, each hulled separately.

    ``components`` is a list of point lists; vertex indices run across all of
    them in order.
    """
    verts = []
    faces = []
    nedges = 0
    for comp in components:
        comp = [_pt(p) for p in comp]
        if any(len(p) != 3 for p in comp):
            raise ValueError("OFF export needs 3d points")
        base = len(verts)
        fs = hull_faces(comp)
        verts.extend(comp)
        faces.extend(tuple(base + i for i in f) for f in fs)
        nedges += sum(len(f) for f in fs) // 2
    lines = ["OFF", f"{len(verts)} {len(faces)} {nedges}"]
    for p in verts:
        lines.append(" ".join(format_float(c, precision) for c in p))
    for f in faces:
        lines.append(" ".join([str(len(f))] + [str(i) for i in f]))
    return "\n".join(lines) + "\n"
