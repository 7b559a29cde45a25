"""The 3x6 and 4x8 golden projection matrices and what they do to root systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .golden import PHI, as_golden
from .geometry import dot, norm_sq
from .lattice import ShellDecomposition, d6_roots, e8_roots
from .quaternion import GQuat, qnorm_sq

__all__ = [
    "GoldenMatrix",
    "t_matrix",
    "s_matrix",
    "column_structure_check",
    "project",
    "project_d6_roots",
    "project_e8_roots",
    "E8Convention",
    "CONVENTIONS",
]


@dataclass(frozen=True)
class GoldenMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_golden(x) for x in r) for r in self.entries)
        if len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def rows(self):
        return self.entries

    @property
    def columns(self):
        return tuple(zip(*self.entries))

    def gram_rows(self):
        """``M M^T``."""
        return tuple(tuple(dot(r, s) for s in self.entries) for r in self.entries)

    def with_columns(self, cols) -> "GoldenMatrix":
        return GoldenMatrix(tuple(zip(*cols)))


def t_matrix() -> GoldenMatrix:
    """3x6 matrix whose columns are six icosahedron vertices, no two antipodal."""
    P = PHI
    return GoldenMatrix((
        (P, P, -1, -1, 0, 0),
        (0, 0, P, -P, -1, 1),
        (-1, 1, 0, 0, P, P),
    ))


def s_matrix() -> GoldenMatrix:
    """4x8 matrix taking E8 roots onto two concentric 600-cells."""
    P = PHI
    return GoldenMatrix((
        (P + 1, P - 1, 0, 0, 0, 0, 0, 0),
        (0, 0, P, P, -1, -1, 0, 0),
        (0, 0, 0, 0, P, -P, -1, 1),
        (0, 0, -1, 1, 0, 0, P, P),
    ))


def column_structure_check(m: GoldenMatrix, icosa) -> dict:
    """Columns are icosahedron vertices, never antipodal, pairwise dot ±PHI."""
    cols = m.columns
    vertex_set = set(icosa)
    antipodal = [(i, j) for i in range(len(cols)) for j in range(i + 1, len(cols))
                 if tuple(-c for c in cols[i]) == cols[j]]
    allowed = {PHI, -PHI}
    bad_dots = [(i, j, dot(cols[i], cols[j])) for i in range(len(cols))
                for j in range(i + 1, len(cols)) if dot(cols[i], cols[j]) not in allowed]
    not_vertices = [i for i, c in enumerate(cols) if c not in vertex_set]
    return {
        "columns_are_vertices": not not_vertices,
        "no_antipodal_pair": not antipodal,
        "neighbor_dots": not bad_dots,
        "antipodal_pairs": antipodal,
        "bad_dots": bad_dots,
        "all_pass": not not_vertices and not antipodal and not bad_dots,
    }


def project(m: GoldenMatrix, v) -> tuple:
    """Exact ``M v``."""
    rows, cols = m.shape
    if len(v) != cols:
        raise ValueError(f"vector of length {len(v)} does not match {rows}x{cols} matrix")
    v = [as_golden(Fraction(x)) for x in v]
    return tuple(dot(r, v) for r in m.rows)


def project_d6_roots() -> ShellDecomposition:
    """Images of the 60 D6 roots under T, grouped by squared radius."""
    t = t_matrix()
    return ShellDecomposition((project(t, r) for r in d6_roots()), norm_sq)


@dataclass(frozen=True)
class E8Convention:
    """Coordinate sign flips applied before S, and the overall scale."""

    name: str
    negate: tuple = ()
    scale: Fraction = Fraction(1, 2)

    def apply(self, v):
        return tuple(-x if i in self.negate else x for i, x in enumerate(v))


CONVENTIONS = {
    "default": E8Convention("default", negate=(7,)),
    "verbatim": E8Convention("verbatim", negate=()),
}


def _convention(c) -> E8Convention:
    if isinstance(c, E8Convention):
        return c
    try:
        return CONVENTIONS[c]
    except KeyError:
        raise ValueError(f"unknown convention {c!r}; choose from {sorted(CONVENTIONS)}") from None


def e8_root_image(v, convention="default") -> GQuat:
    conv = _convention(convention)
    img = project(s_matrix(), conv.apply(v))
    return GQuat(*(conv.scale * c for c in img))


def project_e8_roots(convention="default") -> ShellDecomposition:
    """Images of the 240 E8 roots (even half-integer coset) as quaternions.

    Under the default convention the last coordinate is negated before S is
    applied, which makes the images split into the unit 600-cell and its
    PHI-scaled copy.
    """
    images = [e8_root_image(r, convention) for r in e8_roots("even")]
    return ShellDecomposition(images, qnorm_sq)
