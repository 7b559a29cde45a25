"""Catalog of exact verification checks.

Each check computes an ``expected`` and an ``actual`` value from exact
arithmetic; it passes iff the two are equal.  Checks are addressed by stable
string identifiers listed in :data:`CATALOG`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import geometry as geo
from .golden import ONE, PHI, ZERO, GoldenNum, phi
from .lattice import (
    d6_roots,
    e8_roots,
    icosian_module,
    lattice_invariants,
    membership,
    pure_imaginary_submodule,
    short_vectors,
    standard_d6,
    standard_e8,
    icosian_contains,
)
from .projection import (
    _convention,
    column_structure_check,
    e8_root_image,
    project,
    project_d6_roots,
    project_e8_roots,
    s_matrix,
    t_matrix,
)
from .quaternion import (
    GQuat,
    binary_icosahedral_group,
    group_axioms_check,
    qnorm_sq,
    rotation_of,
)

__all__ = ["VerificationReport", "CATALOG", "run_check", "run_all", "render"]


@dataclass
class VerificationReport:
    check_name: str
    status: str
    expected: str
    actual: str
    elapsed_ms: int = 0
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check_name": self.check_name,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
        }
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        if self.detail:
            d["detail"] = self.detail
        return d


def render(v) -> str:
    """Deterministic exact text for nested check values."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (GoldenNum, Fraction, int)):
        return str(v)
    if v is None:
        return "null"
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {render(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(render(x) for x in v) + "]"
    return repr(v)


# -- shared objects ---------------------------------------------------------


@lru_cache(maxsize=None)
def _group():
    return binary_icosahedral_group()


@lru_cache(maxsize=None)
def _slice():
    return tuple(geo.slice_600cell(_group()))


@lru_cache(maxsize=None)
def _icosahedron():
    return tuple(geo.icosahedron())


@lru_cache(maxsize=None)
def _invariants(which: str):
    modules = {
        "icosians": icosian_module,
        "imaginary": pure_imaginary_submodule,
        "E8": standard_e8,
        "D6": standard_d6,
    }
    return lattice_invariants(modules[which]())


def _theta(inv):
    return [(n, c) for n, c in inv["theta"]]


# -- checks -----------------------------------------------------------------


def check_group_order(_conv):
    rep = group_axioms_check(_group())
    expected = {"order": 120, "closure": True, "identity": True, "inverses": True}
    actual = {k: rep[k] for k in expected}
    return expected, actual, {}


def _is_rotation(m):
    n = len(m)
    for i in range(n):
        for j in range(n):
            s = sum((m[i][k] * m[j][k] for k in range(n)), ZERO)
            if s != (ONE if i == j else ZERO):
                return False
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return det == ONE


def check_rotation_image(_conv):
    ico = set(_icosahedron())
    mats = {rotation_of(g) for g in _group()}
    expected = {"distinct_rotations": 60, "all_special_orthogonal": True,
                "all_permute_icosahedron": True}
    actual = {
        "distinct_rotations": len(mats),
        "all_special_orthogonal": all(_is_rotation(m) for m in mats),
        "all_permute_icosahedron": all({geo.apply_matrix(m, p) for p in ico} == ico for m in mats),
    }
    return expected, actual, {}


def _box_sides(box):
    # the boxes are axis aligned, so each side is twice a half-extent
    return tuple(sorted(2 * max(abs(p[k]) for p in box) for k in range(3)))


def check_slice_30(_conv):
    zero_real = [g for g in _group() if not g.a]
    sl = set(_slice())
    target = set(geo.octahedron())
    for box in geo.golden_boxes():
        target |= set(box)
    ratios = []
    for box in geo.golden_boxes():
        sides = _box_sides(box)
        ratios.append(tuple(s / sides[1] for s in sides))
    expected = {"zero_real_count": 30, "equals_octahedron_and_boxes": True,
                "box_proportions": [(phi, ONE, PHI)] * 3, "all_unit_norm": True}
    actual = {
        "zero_real_count": len(zero_real),
        "equals_octahedron_and_boxes": sl == target,
        "box_proportions": ratios,
        "all_unit_norm": all(geo.norm_sq(p) == ONE for p in sl),
    }
    return expected, actual, {}


def check_icosidodeca_f_vector(_conv):
    g = geo.edges(_slice())
    census = geo.face_census(g)
    v, e = len(g.points), len(g.edges)
    f = census["triangles"] + census["pentagons"]
    expected = {"f_vector": (30, 60, 32), "triangles": 20, "pentagons": 12, "euler": 2}
    actual = {"f_vector": (v, e, f), "triangles": census["triangles"],
              "pentagons": census["pentagons"], "euler": v - e + f}
    return expected, actual, {}


def check_midpoint_similarity(_conv):
    mid = geo.midpoint_icosidodecahedron(_icosahedron())
    return {"ratio": PHI}, {"ratio": geo.similarity_ratio(mid, _slice())}, {}


def check_600cell_f_vector(_conv):
    t0 = time.perf_counter()
    g = geo.edges([q.coeffs for q in _group()])
    tri = len(geo.triangles(g))
    tet = len(geo.tetrahedra(g))
    f = (len(g.points), len(g.edges), tri, tet)
    elapsed = time.perf_counter() - t0
    expected = {"f_vector": (120, 720, 1200, 600), "edge_length_sq": 2 - PHI,
                "degree": 12, "euler": 0, "within_30s": True}
    actual = {"f_vector": f, "edge_length_sq": g.min_dist_sq,
              "degree": sorted(set(g.degrees()))[0] if len(set(g.degrees())) == 1 else None,
              "euler": f[0] - f[1] + f[2] - f[3], "within_30s": elapsed < 30}
    return expected, actual, {}


def check_root_counts(_conv):
    d6, e8 = d6_roots(), e8_roots()
    two = Fraction(2)
    expected = {"d6": 60, "e8": 240, "e8_integer": 112, "e8_half_integer": 128,
                "all_norm_2": True, "all_members": True}
    actual = {
        "d6": len(set(d6)),
        "e8": len(set(e8)),
        "e8_integer": sum(1 for v in e8 if all(x.denominator == 1 for x in v)),
        "e8_half_integer": sum(1 for v in e8 if all(x.denominator == 2 for x in v)),
        "all_norm_2": all(sum(x * x for x in v) == two for v in d6 + e8),
        "all_members": all(membership("D6", v) for v in d6) and all(membership("E8", v) for v in e8),
    }
    return expected, actual, {}


def _row_gram_is_scalar(m, scalar):
    g = m.gram_rows()
    return all(g[i][j] == (scalar if i == j else ZERO) for i in range(len(g)) for j in range(len(g)))


def check_t_matrix(_conv):
    t = t_matrix()
    cs = column_structure_check(t, _icosahedron())
    expected = {"rows_orthogonal_common_norm": True, "row_norm_sq": 4 + 2 * PHI,
                "columns_are_vertices": True, "no_antipodal_pair": True, "neighbor_dots": True}
    actual = {
        "rows_orthogonal_common_norm": _row_gram_is_scalar(t, 4 + 2 * PHI),
        "row_norm_sq": t.gram_rows()[0][0],
        "columns_are_vertices": cs["columns_are_vertices"],
        "no_antipodal_pair": cs["no_antipodal_pair"],
        "neighbor_dots": cs["neighbor_dots"],
    }
    return expected, actual, {}


def check_d6_projection_shells(_conv):
    sh = project_d6_roots()
    sl = _slice()
    small, large = GoldenNum(4), 4 * PHI * PHI
    expected = {"shells": [(small, 30), (large, 30)], "distinct_images": 60,
                "large_is_2PHI_slice": True, "small_is_2_slice": True}
    actual = {
        "shells": list(zip(sh.radii_sq(), sh.sizes())),
        "distinct_images": len(sh.points()),
        "large_is_2PHI_slice": large in sh.shells and set(sh[large]) == set(geo.scale_points(2 * PHI, sl)),
        "small_is_2_slice": small in sh.shells and set(sh[small]) == set(geo.scale_points(2, sl)),
    }
    return expected, actual, {}


def _lattice_claim(which, reference, rank, det, kissing):
    inv = _invariants(which)
    ref = _invariants(reference)
    expected = {"rank": rank, "determinant": Fraction(det), "even": True,
                "min_norm": Fraction(2), "kissing": kissing, "theta": _theta(ref)}
    actual = {k: inv[k] for k in ("rank", "determinant", "even", "min_norm", "kissing")}
    actual["theta"] = _theta(inv)
    return expected, actual


def check_icosian_e8_invariants(_conv):
    e, a = _lattice_claim("icosians", "E8", 8, 1, 240)
    return e, a, {}


def _as_quats(vectors):
    return {GQuat.from_rational_coords(v) for v in vectors}


def check_minimal_icosians_240(_conv):
    mins = _as_quats(short_vectors(icosian_module(), 2))
    g = _group()
    target = g.as_set() | g.scaled(phi).as_set()
    return {"count": 240, "equals_G_and_phiG": True}, \
        {"count": len(mins), "equals_G_and_phiG": mins == target}, {}


def check_imaginary_d6_invariants(_conv):
    e, a = _lattice_claim("imaginary", "D6", 6, 4, 60)
    mins = {q.imag for q in _as_quats(short_vectors(pure_imaginary_submodule(), 2))}
    sl = _slice()
    e["minimal_equals_slice_and_phi_slice"] = True
    a["minimal_equals_slice_and_phi_slice"] = mins == set(sl) | set(geo.scale_points(phi, sl))
    return e, a, {}


def check_s_matrix(_conv):
    s = s_matrix()
    expected = {"rows_orthogonal_common_norm": True, "row_norm_sq": 4 + 2 * PHI}
    actual = {"rows_orthogonal_common_norm": _row_gram_is_scalar(s, 4 + 2 * PHI),
              "row_norm_sq": s.gram_rows()[0][0]}
    return expected, actual, {}


def check_e8_projection_shells(conv):
    conv = _convention(conv)
    sh = project_e8_roots(conv)
    g = _group()
    expected = {"shells": [(ONE, 120), (PHI * PHI, 120)], "unit_shell_is_G": True,
                "outer_shell_is_PHI_G": True, "all_icosians": True}
    actual = {
        "shells": list(zip(sh.radii_sq(), sh.sizes())),
        "unit_shell_is_G": ONE in sh.shells and set(sh[ONE]) == g.as_set(),
        "outer_shell_is_PHI_G": PHI * PHI in sh.shells and set(sh[PHI * PHI]) == g.scaled(PHI).as_set(),
        "all_icosians": all(icosian_contains(q) for q in sh.points()),
    }
    detail = {"convention": conv.name}
    if actual != expected:
        # first root (canonical order) whose image misses both 600-cells
        for r in e8_roots():
            q = e8_root_image(r, conv)
            n = qnorm_sq(q)
            if n not in (ONE, PHI * PHI):
                unscaled = project(s_matrix(), conv.apply(r))
                detail["witness"] = {
                    "root": [str(x) for x in r],
                    "image": [str(c) for c in q.coeffs],
                    "image_norm_sq": str(n),
                    "unscaled_norm_sq": str(geo.norm_sq(unscaled)),
                    "is_icosian": icosian_contains(q),
                }
                break
    return expected, actual, detail


CATALOG = {
    "group-order": check_group_order,
    "rotation-image": check_rotation_image,
    "slice-30": check_slice_30,
    "icosidodeca-f-vector": check_icosidodeca_f_vector,
    "midpoint-similarity": check_midpoint_similarity,
    "600cell-f-vector": check_600cell_f_vector,
    "root-counts": check_root_counts,
    "t-matrix": check_t_matrix,
    "d6-projection-shells": check_d6_projection_shells,
    "icosian-e8-invariants": check_icosian_e8_invariants,
    "minimal-icosians-240": check_minimal_icosians_240,
    "imaginary-d6-invariants": check_imaginary_d6_invariants,
    "s-matrix": check_s_matrix,
    "e8-projection-shells": check_e8_projection_shells,
}


def run_check(name: str, convention: str = "default") -> VerificationReport:
    if name not in CATALOG:
        raise KeyError(name)
    t0 = time.perf_counter()
    expected, actual, detail = CATALOG[name](convention)
    ms = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(
        check_name=name,
        status="pass" if expected == actual else "fail",
        expected=render(expected),
        actual=render(actual),
        elapsed_ms=ms,
        detail=detail,
    )


def run_all(convention: str = "default") -> list[VerificationReport]:
    return [run_check(name, convention) for name in CATALOG]
