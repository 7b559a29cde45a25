import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from icosilab.golden import PHI, phi
from icosilab.lattice import (
    LatticeModule, ShellDecomposition, d6_roots, determinant, e8_roots, hermite_basis,
    icosian_contains, icosian_module, is_positive_definite, lattice_invariants, membership,
    pure_imaginary_submodule, short_vectors, standard_d6, standard_e8,
    theta_counts,
)
from icosilab.geometry import scale_points, slice_600cell
from icosilab.quaternion import GQuat, binary_icosahedral_group, qscale

F = Fraction
half = F(1, 2)

# Frozen from the brute-force numpy oracles below (norms 0, 2, 4, 6, 8).
D6_THETA = [1, 60, 252, 544, 1020]
E8_THETA = [1, 240, 2160, 6720, 17520]


def brute_theta_d6(max_norm=8):
    r = np.arange(-2, 3, dtype=np.int64)
    pts = np.array(list(itertools.product(r, repeat=6)))
    pts = pts[pts.sum(axis=1) % 2 == 0]
    n = (pts ** 2).sum(axis=1)
    return [int((n == k).sum()) for k in range(0, max_norm + 1, 2)]


def brute_theta_e8(max_norm=8):
    # doubled coordinates: integer part even entries, half-integer part odd entries
    out = np.zeros(max_norm // 2 + 1, dtype=np.int64)
    for vals in (np.array([-4, -2, 0, 2, 4]), np.array([-5, -3, -1, 1, 3, 5])):
        grid = np.array(np.meshgrid(*([vals] * 8), indexing="ij"), dtype=np.int8).reshape(8, -1).T
        s = grid.astype(np.int64).sum(axis=1)
        grid = grid[(s // 2) % 2 == 0]
        n = (grid.astype(np.int64) ** 2).sum(axis=1)  # 4 * norm
        for k in range(0, max_norm + 1, 2):
            out[k // 2] += int((n == 4 * k).sum())
    return out.tolist()


def test_oracles_reproduce_frozen_theta():
    assert brute_theta_d6() == D6_THETA
    assert brute_theta_e8() == E8_THETA


@pytest.fixture(scope="module")
def group():
    return binary_icosahedral_group()


@pytest.fixture(scope="module")
def ico():
    return icosian_module()


@pytest.fixture(scope="module")
def imag():
    return pure_imaginary_submodule()


def test_d6_roots():
    roots = d6_roots()
    assert len(roots) == len(set(roots)) == 60 == 4 * 15
    assert all(sum(x * x for x in v) == 2 for v in roots)
    assert all(membership("D6", v) for v in roots)


def test_e8_roots():
    roots = e8_roots()
    assert len(set(roots)) == 240
    assert sum(all(x.denominator == 1 for x in v) for v in roots) == 112
    assert sum(all(x.denominator == 2 for x in v) for v in roots) == 128
    assert all(sum(x * x for x in v) == 2 for v in roots)
    assert all(membership("E8", v) for v in roots)
    odd = e8_roots("odd")
    assert len(set(odd)) == 240 and set(odd) != set(roots)
    assert all(membership("E8", v, coset="odd") for v in odd)


def test_e8_roots_match_brute_force():
    cands = set()
    for v in itertools.product((-1, 0, 1), repeat=8):
        if sum(x * x for x in v) == 2 and sum(v) % 2 == 0:
            cands.add(tuple(F(x) for x in v))
    for signs in itertools.product((1, -1), repeat=8):
        v = tuple(s * half for s in signs)
        if sum(v) % 2 == 0:
            cands.add(v)
    assert cands == set(e8_roots())


def test_membership():
    assert membership("D6", (1, 1, 0, 0, 0, 0))
    assert not membership("D6", (1, 0, 0, 0, 0, 0))
    assert membership("E8", (half,) * 8)
    assert not membership("E8", (half,) * 7 + (-half,))
    assert not membership("E8", (half,) * 4 + (0,) * 4)
    with pytest.raises(ValueError):
        membership("D6", (1, 1))
    with pytest.raises(ValueError):
        membership("E8", (1, 1, 0, 0, 0, 0))


def test_hermite_basis_is_echelon():
    basis, scale = hermite_basis([(2, 4, 0), (0, 6, 3), (2, 10, 3)])
    assert scale == 1
    assert len(basis) == 2
    assert basis[0][0] > 0 and basis[1][0] == 0 and basis[1][1] > 0


def test_icosian_module(ico, group):
    assert ico.rank == 8
    assert all(icosian_contains(g) for g in group)
    assert icosian_contains(GQuat(PHI))
    assert all(icosian_contains(qscale(phi, g)) for g in group)
    assert not icosian_contains(GQuat(half, half))
    assert not icosian_contains(GQuat(0, half, half))
    assert all(x.denominator in (1, 2, 4) for b in ico.basis for x in b)


def test_icosian_ring_closure_on_basis(ico):
    from icosilab.quaternion import qmul
    qs = [GQuat.from_rational_coords(b) for b in ico.basis]
    for p in qs:
        for q in qs:
            assert icosian_contains(qmul(p, q))


def test_pure_imaginary_submodule(imag):
    assert imag.rank == 6
    assert (phi.x, phi.y, 0, 0, 0, 0) in imag
    assert (half, 0, half, 0, half, 0) not in imag


def test_doubled_form_is_even_integral(ico, group):
    assert all(x.denominator == 1 for row in ico.gram for x in row)
    assert all(ico.gram[i][i] % 2 == 0 for i in range(8))
    rng = random.Random(5)
    for _ in range(100):
        c = [rng.randint(-4, 4) for _ in range(8)]
        n = ico.norm(ico.to_ambient(c))
        assert n.denominator == 1 and n % 2 == 0


def test_invariants_d6_e8():
    d6 = lattice_invariants(standard_d6())
    assert (d6["rank"], d6["determinant"], d6["even"], d6["min_norm"], d6["kissing"]) == (6, 4, True, 2, 60)
    assert [c for _, c in d6["theta"]] == D6_THETA
    e8 = lattice_invariants(standard_e8())
    assert (e8["rank"], e8["determinant"], e8["even"], e8["kissing"]) == (8, 1, True, 240)
    assert [c for _, c in e8["theta"]] == E8_THETA


def test_short_vectors_standard():
    assert len(short_vectors(standard_d6(), 2)) == 60
    assert set(short_vectors(standard_d6(), 2)) == set(d6_roots())
    assert set(short_vectors(standard_e8(), 2)) == set(e8_roots())


def test_minimal_icosians(ico, group):
    mins = {GQuat.from_rational_coords(v) for v in short_vectors(ico, 2)}
    assert len(mins) == 240
    assert mins == group.as_set() | group.scaled(phi).as_set()
    # G is exactly the norm-1 part of the minimal icosians
    from icosilab.quaternion import qnorm_sq
    assert {q for q in mins if qnorm_sq(q) == 1} == group.as_set()


def test_minimal_pure_imaginary(imag, group):
    sl = slice_600cell(group)
    mins = {GQuat.from_rational_coords(v).imag for v in short_vectors(imag, 2)}
    assert mins == set(sl) | set(scale_points(phi, sl))


def test_imaginary_theta_matches_d6(imag):
    assert [c for _, c in theta_counts(imag, 8)] == D6_THETA


def test_basis_independence(imag):
    rng = random.Random(1)
    n = imag.rank
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(12):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-2, -1, 1, 2))
        u[i] = [a + k * b for a, b in zip(u[i], u[j])]
    new_basis = [tuple(sum((c * b[t] for c, b in zip(row, imag.basis)), F(0)) for t in range(6))
                 for row in u]
    assert determinant(u) in (1, -1)
    rebased = imag.with_basis(new_basis)
    assert short_vectors(rebased, 4) == short_vectors(imag, 4)


def test_positive_definite_required():
    bad = LatticeModule("bad", ((F(1), F(0)), (F(0), F(1))), ((F(1), F(2)), (F(2), F(1))))
    assert not is_positive_definite(bad.gram)
    with pytest.raises(ValueError):
        short_vectors(bad, 2)


def test_determinant():
    assert determinant([[2, 1], [1, 2]]) == 3
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_module_json(imag):
    import json
    d = json.loads(imag.to_json())
    assert d["rank"] == 6 and len(d["gram"]) == 6


def test_shell_decomposition():
    sh = ShellDecomposition([(1, 0), (0, 1), (2, 0), (0, -2), (1, 0)], lambda p: p[0] ** 2 + p[1] ** 2)
    assert sh.radii_sq() == [1, 4]
    assert sh.sizes() == [2, 2]
    assert sorted(sh.points()) == sorted([(1, 0), (0, 1), (2, 0), (0, -2)])
