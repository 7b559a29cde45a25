"""Quaternions over Q(sqrt 5) and the binary icosahedral group."""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .golden import ONE, PHI, ZERO, GoldenNum, as_golden, phi, tau

__all__ = [
    "GQuat",
    "QuatSet",
    "qmul",
    "qconj",
    "qscale",
    "qnorm_sq",
    "re_inner",
    "new_norm",
    "new_inner",
    "binary_icosahedral_group",
    "quaternion_group",
    "group_axioms_check",
    "rotation_of",
    "EVEN_PERMUTATIONS",
]


@dataclass(frozen=True, slots=True)
class GQuat:
    """``a + b i + c j + d k`` with golden-field coefficients."""

    a: GoldenNum = ZERO
    b: GoldenNum = ZERO
    c: GoldenNum = ZERO
    d: GoldenNum = ZERO

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, GoldenNum):
                g = as_golden(v)
                if g is None:
                    raise TypeError(f"quaternion coefficient {name}={v!r} is not exact")
                object.__setattr__(self, name, g)

    @classmethod
    def of(cls, coeffs) -> "GQuat":
        return cls(*coeffs)

    @property
    def coeffs(self) -> tuple[GoldenNum, GoldenNum, GoldenNum, GoldenNum]:
        return (self.a, self.b, self.c, self.d)

    @property
    def imag(self) -> tuple[GoldenNum, GoldenNum, GoldenNum]:
        return (self.b, self.c, self.d)

    def rational_coords(self) -> tuple[Fraction, ...]:
        """The 8-tuple ``(x_a, y_a, x_b, y_b, x_c, y_c, x_d, y_d)``."""
        out = []
        for g in self.coeffs:
            out.append(g.x)
            out.append(g.y)
        return tuple(out)

    @classmethod
    def from_rational_coords(cls, v) -> "GQuat":
        if len(v) == 8:
            return cls(*(GoldenNum(v[2 * i], v[2 * i + 1]) for i in range(4)))
        if len(v) == 6:
            return cls(ZERO, *(GoldenNum(v[2 * i], v[2 * i + 1]) for i in range(3)))
        raise ValueError("expected 6 or 8 rational coordinates")

    def __add__(self, o):
        return GQuat(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return GQuat(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return GQuat(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if isinstance(o, GQuat):
            return qmul(self, o)
        return qscale(o, self)

    def __rmul__(self, s):
        return qscale(s, self)

    def sort_key(self):
        return self.coeffs

    def __lt__(self, o):
        return self.coeffs < o.coeffs

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.coeffs) + ")"


def qmul(p: GQuat, q: GQuat) -> GQuat:
    """Hamilton product."""
    a1, b1, c1, d1 = p.a, p.b, p.c, p.d
    a2, b2, c2, d2 = q.a, q.b, q.c, q.d
    return GQuat(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qconj(q: GQuat) -> GQuat:
    return GQuat(q.a, -q.b, -q.c, -q.d)


def qscale(s, q: GQuat) -> GQuat:
    s = as_golden(s)
    return GQuat(s * q.a, s * q.b, s * q.c, s * q.d)


def qnorm_sq(q: GQuat) -> GoldenNum:
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d


def re_inner(p: GQuat, q: GQuat) -> GoldenNum:
    """Real part of ``p * conj(q)``, i.e. the Euclidean dot product in R^4."""
    return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d


def new_norm(q: GQuat) -> Fraction:
    """Conway-Sloane norm: ``x + y`` where ``|q|^2 = x + y sqrt5``."""
    return tau(qnorm_sq(q))


def new_inner(p: GQuat, q: GQuat) -> Fraction:
    return tau(re_inner(p, q))


class QuatSet:
    """Immutable deduplicated quaternion set in canonical lexicographic order."""

    __slots__ = ("_elements", "_index")

    def __init__(self, elements):
        uniq = set(elements)
        self._elements = tuple(sorted(uniq, key=GQuat.sort_key))
        self._index = frozenset(self._elements)

    @property
    def elements(self) -> tuple[GQuat, ...]:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, q):
        return q in self._index

    def __getitem__(self, i):
        return self._elements[i]

    def __eq__(self, other):
        if isinstance(other, QuatSet):
            return self._index == other._index
        return NotImplemented

    def __hash__(self):
        return hash(self._index)

    def as_set(self) -> frozenset:
        return self._index

    def scaled(self, s) -> "QuatSet":
        return QuatSet(qscale(s, q) for q in self._elements)

    def to_json(self) -> str:
        rows = [[list(g.to_tuple()) for g in q.coeffs] for q in self._elements]
        return json.dumps({"count": len(rows), "quaternions": rows})

    def to_csv(self, precision: int = 17) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "c", "d"])
        for q in self._elements:
            w.writerow([format_float(g, precision) for g in q.coeffs])
        return buf.getvalue()


def format_float(g: GoldenNum, precision: int = 17) -> str:
    return f"{float(g.to_decimal(precision + 5)):.{precision}g}"


def _is_even(perm) -> bool:
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return inv % 2 == 0


EVEN_PERMUTATIONS = tuple(p for p in itertools.permutations(range(4)) if _is_even(p))


def _permute(coeffs, perm):
    # value at slot i moves to slot perm[i]
    out = [None] * 4
    for i, v in enumerate(coeffs):
        out[perm[i]] = v
    return tuple(out)


def _signed(pattern):
    """All sign choices on the nonzero entries of ``pattern``."""
    nz = [i for i, v in enumerate(pattern) if v]
    for signs in itertools.product((1, -1), repeat=len(nz)):
        out = list(pattern)
        for i, s in zip(nz, signs):
            out[i] = out[i] * s
        yield tuple(out)


def binary_icosahedral_group() -> QuatSet:
    """The 120 unit icosians.

    Built from the three coordinate families ``±1``, ``(±1±i±j±k)/2`` and
    ``(±i ± phi j ± PHI k)/2``, each closed under the 12 even permutations of
    the coordinate positions ``(1, i, j, k)``.
    """
    half = GoldenNum(Fraction(1, 2))
    patterns = [
        (ONE, ZERO, ZERO, ZERO),
        (half, half, half, half),
        (ZERO, half, phi * half, PHI * half),
    ]
    found = set()
    for pat in patterns:
        for signed in _signed(pat):
            for perm in EVEN_PERMUTATIONS:
                found.add(GQuat(*_permute(signed, perm)))
    group = QuatSet(found)
    if len(group) != 120:
        raise RuntimeError(f"binary icosahedral group has {len(group)} elements, expected 120")
    return group


def quaternion_group() -> QuatSet:
    """``{±1, ±i, ±j, ±k}``."""
    units = []
    for slot in range(4):
        for s in (1, -1):
            c = [ZERO] * 4
            c[slot] = GoldenNum(s)
            units.append(GQuat(*c))
    return QuatSet(units)


def group_axioms_check(s: QuatSet) -> dict:
    """Check closure, identity and inverses; returns a per-axiom report."""
    elems = s.elements
    bad_products = []
    for p in elems:
        for q in elems:
            r = qmul(p, q)
            if r not in s:
                bad_products.append((p, q))
    identity = GQuat(ONE)
    missing_inverses = [q for q in elems if qmul(q, qconj(q)) != identity or qconj(q) not in s]
    return {
        "order": len(elems),
        "closure": not bad_products,
        "closure_failures": len(bad_products),
        "identity": identity in s,
        "inverses": not missing_inverses,
        "inverse_failures": len(missing_inverses),
        "all_pass": not bad_products and identity in s and not missing_inverses,
    }


def rotation_of(q: GQuat) -> tuple[tuple[GoldenNum, ...], ...]:
    """Matrix of ``v -> q v conj(q)`` on pure imaginary quaternions.

    Columns are the images of ``i``, ``j``, ``k``.  Rejects non-unit input.
    """
    if qnorm_sq(q) != ONE:
        raise ValueError("rotation_of requires a unit quaternion")
    qc = qconj(q)
    cols = []
    for e in ((ZERO, ONE, ZERO, ZERO), (ZERO, ZERO, ONE, ZERO), (ZERO, ZERO, ZERO, ONE)):
        img = qmul(qmul(q, GQuat(*e)), qc)
        cols.append(img.imag)
    return tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))
