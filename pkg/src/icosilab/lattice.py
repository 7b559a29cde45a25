"""Integer lattices in rational coordinates.

Hermite normal form bases, exact membership, exact Fincke-Pohst short
vector enumeration, and the concrete D6, E8, icosian and pure imaginary
icosian lattices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

from .golden import GoldenNum, floor_sqrt
from .quaternion import GQuat, binary_icosahedral_group, new_inner

__all__ = [
    "LatticeModule",
    "ShellDecomposition",
    "d6_roots",
    "e8_roots",
    "membership",
    "hermite_basis",
    "module_from_generators",
    "standard_d6",
    "standard_e8",
    "icosian_module",
    "icosian_contains",
    "pure_imaginary_submodule",
    "short_vectors",
    "lattice_invariants",
    "theta_counts",
    "determinant",
    "is_positive_definite",
    "doubled_new_inner",
]

Vector = tuple  # tuple of Fraction


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


# --------------------------------------------------------------------------
# root systems


def d6_roots() -> list[Vector]:
    """The 60 vectors ``(±1, ±1, 0, 0, 0, 0)`` and their coordinate permutations."""
    roots = []
    for i, j in itertools.combinations(range(6), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 6
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    return sorted(roots)


def e8_roots(coset: str = "even") -> list[Vector]:
    """The 240 norm-2 vectors of E8.

    ``coset="even"`` uses the half-integer vectors with an even number of
    minus signs (coordinate sum even); ``coset="odd"`` the other half.
    """
    if coset not in ("even", "odd"):
        raise ValueError("coset must be 'even' or 'odd'")
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    half = Fraction(1, 2)
    want = 0 if coset == "even" else 1
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == want:
            roots.append(tuple(s * half for s in signs))
    return sorted(roots)


def membership(lattice: str, v, coset: str = "even") -> bool:
    """Exact congruence test for the standard ``"D6"`` or ``"E8"`` lattice."""
    v = _vec(v)
    if lattice == "D6":
        if len(v) != 6:
            raise ValueError("D6 vectors have 6 coordinates")
        return all(x.denominator == 1 for x in v) and sum(v) % 2 == 0
    if lattice == "E8":
        if len(v) != 8:
            raise ValueError("E8 vectors have 8 coordinates")
        if all(x.denominator == 1 for x in v):
            return sum(v) % 2 == 0
        if all(x.denominator == 2 for x in v):
            s = sum(v)
            # (sum) is an integer here since there are 8 halves
            return s % 2 == (0 if coset == "even" else 1)
        return False
    raise ValueError(f"unknown lattice {lattice!r}")


# --------------------------------------------------------------------------
# Hermite normal form


def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    pivots: list[int] = []
    work = rows
    for col in range(ncols):
        with_entry = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not with_entry:
            continue
        # gcd-combine everything with a nonzero entry in this column
        piv = with_entry[0]
        for r in with_entry[1:]:
            a, b = piv[col], r[col]
            g, s, t = _xgcd(a, b)
            new_piv = [s * x + t * y for x, y in zip(piv, r)]
            reduced = [(b // g) * x - (a // g) * y for x, y in zip(piv, r)]
            piv = new_piv
            if any(reduced):
                rest.append(reduced)
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        pivots.append(col)
        work = [r for r in rest if any(r)]
    # reduce entries above each pivot into [0, pivot)
    for i in range(len(basis)):
        col, p = pivots[i], basis[i][pivots[i]]
        for k in range(i):
            q = basis[k][col] // p
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return basis


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_basis(vectors) -> tuple[tuple[Vector, ...], int]:
    """HNF basis of the integer span of rational vectors.

    Returns ``(basis, scale)`` where ``scale`` is the common denominator used
    to move into integer arithmetic.
    """
    vectors = [_vec(v) for v in vectors]
    scale = 1
    for v in vectors:
        for x in v:
            scale = lcm(scale, x.denominator)
    rows = [[int(x * scale) for x in v] for v in vectors]
    basis = _hnf_rows(rows)
    return tuple(tuple(Fraction(x, scale) for x in r) for r in basis), scale


# --------------------------------------------------------------------------
# modules


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def is_positive_definite(gram) -> bool:
    """Sylvester's criterion on the leading principal minors."""
    n = len(gram)
    return all(determinant([row[:k] for row in gram[:k]]) > 0 for k in range(1, n + 1))


@dataclass(frozen=True)
class LatticeModule:
    """Finitely generated free Z-module in rational ambient coordinates.

    ``gram[i][j]`` is the chosen bilinear form on ``basis[i], basis[j]``.
    """

    name: str
    basis: tuple
    gram: tuple
    form: Callable | None = field(default=None, compare=False, repr=False)
    _scale: int = field(default=1, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def coefficients(self, v):
        """Integer coordinates of ``v`` in the HNF basis, or ``None``."""
        v = _vec(v)
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        rest = [x * self._scale for x in v]
        if any(x.denominator != 1 for x in rest):
            return None
        rest = [int(x) for x in rest]
        basis = [[int(x * self._scale) for x in b] for b in self.basis]
        coeffs = []
        col = 0
        for row in basis:
            pcol = next(i for i, x in enumerate(row) if x)
            # anything left of this pivot must already be cleared
            if any(rest[col:pcol]):
                return None
            if rest[pcol] % row[pcol]:
                return None
            k = rest[pcol] // row[pcol]
            coeffs.append(k)
            if k:
                rest = [x - k * y for x, y in zip(rest, row)]
            col = pcol + 1
        if any(rest):
            return None
        return tuple(coeffs)

    def __contains__(self, v) -> bool:
        return self.coefficients(v) is not None

    def to_ambient(self, coeffs) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, b in zip(coeffs, self.basis):
            if k:
                for i, x in enumerate(b):
                    out[i] += k * x
        return tuple(out)

    def norm(self, v) -> Fraction:
        if self.form is not None:
            return self.form(_vec(v), _vec(v))
        c = self.coefficients(v)
        if c is None:
            raise ValueError("vector is not in the module")
        return _quad(self.gram, c)

    def with_basis(self, new_basis, name=None) -> "LatticeModule":
        """Same form on a different basis (used to test basis independence).

        The returned module keeps the HNF basis for membership tests but
        enumerates over ``new_basis``.
        """
        if self.form is None:
            raise ValueError("module has no ambient form")
        new_basis = tuple(_vec(b) for b in new_basis)
        gram = tuple(tuple(self.form(u, v) for v in new_basis) for u in new_basis)
        return _Rebased(name or self.name, self.basis, self.gram, self.form,
                        self._scale, new_basis, gram)

    def enumeration_basis(self):
        return self.basis, self.gram

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "rank": self.rank,
            "basis": [[_frac_json(x) for x in b] for b in self.basis],
            "gram": [[_frac_json(x) for x in row] for row in self.gram],
        })


@dataclass(frozen=True)
class _Rebased(LatticeModule):
    alt_basis: tuple = ()
    alt_gram: tuple = ()

    def enumeration_basis(self):
        return self.alt_basis, self.alt_gram


def _frac_json(x: Fraction):
    return [x.numerator, x.denominator]


def _quad(gram, c) -> Fraction:
    n = len(c)
    s = Fraction(0)
    for i in range(n):
        if c[i]:
            row = gram[i]
            s += c[i] * sum((row[j] * c[j] for j in range(n) if c[j]), Fraction(0))
    return s


def module_from_generators(name: str, generators, form) -> LatticeModule:
    """Integer span of ``generators`` with Gram matrix of ``form`` on its HNF basis."""
    basis, scale = hermite_basis(generators)
    gram = tuple(tuple(form(u, v) for v in basis) for u in basis)
    return LatticeModule(name, basis, gram, form, scale)


def euclidean(u, v) -> Fraction:
    return dot(u, v)


def standard_d6() -> LatticeModule:
    return module_from_generators("D6", d6_roots(), euclidean)


def standard_e8(coset: str = "even") -> LatticeModule:
    return module_from_generators("E8", e8_roots(coset), euclidean)


def doubled_new_inner(u, v) -> Fraction:
    """``2 * new_inner`` on rational 8-tuples (or 6-tuples for pure imaginaries)."""
    return 2 * new_inner(GQuat.from_rational_coords(u), GQuat.from_rational_coords(v))


def icosian_module() -> LatticeModule:
    """The icosian ring as a rank-8 Z-module with the doubled new-norm form."""
    gens = [g.rational_coords() for g in binary_icosahedral_group()]
    m = module_from_generators("icosians", gens, doubled_new_inner)
    if m.rank != 8:
        raise RuntimeError(f"icosian module has rank {m.rank}, expected 8")
    return m


def icosian_contains(q: GQuat) -> bool:
    return q.rational_coords() in _icosians()


_CACHE: dict = {}


def _icosians() -> LatticeModule:
    if "icosians" not in _CACHE:
        _CACHE["icosians"] = icosian_module()
    return _CACHE["icosians"]


def pure_imaginary_submodule() -> LatticeModule:
    """Icosians with zero real part, in 6-tuple coordinates ``(x_b, y_b, ..., y_d)``.

    The HNF basis is in echelon form with the real-part coordinates first, so
    the rows whose pivot lies beyond them span exactly this submodule.
    """
    ico = _icosians()
    rows = [b[2:] for b in ico.basis if b[0] == 0 and b[1] == 0]
    m = module_from_generators("pure imaginary icosians", rows, doubled_new_inner)
    if m.rank != 6:
        raise RuntimeError(f"pure imaginary submodule has rank {m.rank}, expected 6")
    return m


# --------------------------------------------------------------------------
# enumeration


def _ldl(gram):
    """``gram = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`` exactly."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= mu[i][j] * mu[i][k] * d[i]
                a[k][j] = a[j][k]
    return d, mu


def _size_reduce(basis, gram, form):
    """Greedy pairwise reduction ``b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j``.

    Keeps the enumeration tree small on skewed HNF bases; any unimodular
    change of basis leaves the enumerated set unchanged.
    """
    basis = [list(b) for b in basis]
    g = [list(r) for r in gram]
    n = len(basis)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                r = round(g[i][j] / g[j][j])
                if r == 0:
                    continue
                new_norm = g[i][i] - 2 * r * g[i][j] + r * r * g[j][j]
                if new_norm >= g[i][i]:
                    continue
                basis[i] = [x - r * y for x, y in zip(basis[i], basis[j])]
                for k in range(n):
                    g[i][k] = g[i][k] - r * g[j][k]
                for k in range(n):
                    g[k][i] = g[i][k]
                g[i][i] = new_norm
                changed = True
    basis.sort(key=lambda b: form(b, b) if form else 0)
    if form is not None:
        g = [[form(u, v) for v in basis] for u in basis]
    return [tuple(b) for b in basis], g


def _candidates(center: Fraction, budget: Fraction, di: Fraction):
    """Integers x with di*(x - center)^2 <= budget."""
    t = budget / di
    s = floor_sqrt(t)
    lo = (center.numerator // center.denominator) - s - 1
    hi = -((-center.numerator) // center.denominator) + s + 1
    for x in range(lo, hi + 1):
        e = x - center
        if e * e <= t:
            yield x


def _enumerate(basis, gram, bound: Fraction):
    """Yield ``(norm, coeffs)`` for all nonzero coefficient vectors of norm <= bound."""
    n = len(gram)
    d, mu = _ldl(gram)
    coeffs = [0] * n

    def rec(i, budget):
        center = -sum((mu[i][j] * coeffs[j] for j in range(i + 1, n) if coeffs[j]), Fraction(0))
        for x in _candidates(center, budget, d[i]):
            e = x - center
            rem = budget - d[i] * e * e
            coeffs[i] = x
            if i == 0:
                yield bound - rem, tuple(coeffs)
            else:
                yield from rec(i - 1, rem)
        coeffs[i] = 0

    for norm, c in rec(n - 1, Fraction(bound)):
        if any(c):
            yield norm, c


def _short(m: LatticeModule, bound) -> list[tuple[Fraction, Vector]]:
    bound = Fraction(bound)
    basis, gram = m.enumeration_basis()
    if not is_positive_definite(gram):
        raise ValueError("Gram matrix is not positive definite")
    basis, gram = _size_reduce(basis, gram, m.form)
    scale = lcm(*(x.denominator for b in basis for x in b))
    ibasis = [[int(x * scale) for x in b] for b in basis]
    dim = len(basis[0])
    out = set()
    for norm, c in _enumerate(basis, gram, bound):
        v = [0] * dim
        for k, b in zip(c, ibasis):
            if k:
                for i in range(dim):
                    v[i] += k * b[i]
        out.add((norm, tuple(v)))
    return sorted((norm, tuple(Fraction(x, scale) for x in v)) for norm, v in out)


def short_vectors(m: LatticeModule, bound) -> list[Vector]:
    """All nonzero module vectors with form value ``<= bound``.

    Sorted by (form value, coordinates).  Exact rational arithmetic only.
    """
    return [v for _, v in _short(m, bound)]


def theta_counts(m: LatticeModule, max_norm=8) -> list[tuple[Fraction, int]]:
    """``[(norm, count), ...]`` for every norm value up to ``max_norm``, including 0."""
    counts: dict = {Fraction(0): 1}
    for norm, _ in _short(m, max_norm):
        counts[norm] = counts.get(norm, 0) + 1
    return sorted(counts.items())


def lattice_invariants(m: LatticeModule, theta_bound=8) -> dict:
    if not is_positive_definite(m.gram):
        raise ValueError("Gram matrix is not positive definite")
    gram = m.gram
    integral = all(x.denominator == 1 for row in gram for x in row)
    even = integral and all(gram[i][i] % 2 == 0 for i in range(m.rank))
    theta = theta_counts(m, theta_bound)
    nonzero = [(n, c) for n, c in theta if n != 0]
    min_norm, kissing = nonzero[0] if nonzero else (None, 0)
    return {
        "rank": m.rank,
        "determinant": determinant(gram),
        "integral": integral,
        "even": even,
        "min_norm": min_norm,
        "kissing": kissing,
        "theta": theta,
    }


# --------------------------------------------------------------------------
# shells


class ShellDecomposition:
    """Points grouped by exact squared radius, in increasing radius order."""

    def __init__(self, points, norm_sq: Callable):
        shells: dict = {}
        for p in points:
            shells.setdefault(norm_sq(p), set()).add(p)
        self._shells = {k: tuple(sorted(shells[k])) for k in sorted(shells)}

    @property
    def shells(self) -> dict:
        return dict(self._shells)

    def radii_sq(self) -> list:
        return list(self._shells)

    def sizes(self) -> list[int]:
        return [len(v) for v in self._shells.values()]

    def __len__(self):
        return len(self._shells)

    def __getitem__(self, key):
        return self._shells[key]

    def points(self) -> list:
        return [p for pts in self._shells.values() for p in pts]

    def to_json(self, render_point: Callable, render_key: Callable = None) -> str:
        if render_key is None:
            render_key = _render_key
        return json.dumps({
            "shells": [
                {"radius_sq": render_key(k), "count": len(pts),
                 "points": [render_point(p) for p in pts]}
                for k, pts in self._shells.items()
            ]
        })


def _render_key(k):
    if isinstance(k, GoldenNum):
        return list(k.to_tuple())
    return _frac_json(Fraction(k))
