"""
Icosians are a copy of E8
=========================

Integer combinations of the 120 group elements form a ring.  Reading each
golden coefficient as a pair of rationals gives a rank-8 lattice; with the
norm x + y (doubled) it is even, unimodular and has minimum 2.  That is E8.
"""

from fractions import Fraction

from icosilab.geometry import scale_points, slice_600cell
from icosilab.golden import PHI, phi
from icosilab.lattice import (
    icosian_contains,
    icosian_module,
    lattice_invariants,
    pure_imaginary_submodule,
    short_vectors,
    standard_e8,
)
from icosilab.quaternion import GQuat, binary_icosahedral_group

ico = icosian_module()
print("icosian basis (Hermite normal form, 8-tuples):")
for b in ico.basis:
    print("  ", [str(x) for x in b])

print("PHI is an icosian:", icosian_contains(GQuat(PHI)))
half = Fraction(1, 2)
print("(1+i)/2 is an icosian:", icosian_contains(GQuat(half, half)))

inv = lattice_invariants(ico)
print("invariants:", {k: v for k, v in inv.items() if k != "theta"})
print("theta series:", [(int(n), c) for n, c in inv["theta"]])
print("standard E8: ", [(int(n), c) for n, c in lattice_invariants(standard_e8())["theta"]])

# The 240 minimal icosians are the group G together with phi*G.
G = binary_icosahedral_group()
mins = {GQuat.from_rational_coords(v) for v in short_vectors(ico, 2)}
print("minimal = G u phi G:", mins == G.as_set() | G.scaled(phi).as_set())

# The pure imaginary icosians form D6, whose 60 roots are two icosidodecahedra.
imag = pure_imaginary_submodule()
inv6 = lattice_invariants(imag)
print("pure imaginary:", {k: v for k, v in inv6.items() if k != "theta"})
sl = slice_600cell(G)
roots6 = {GQuat.from_rational_coords(v).imag for v in short_vectors(imag, 2)}
print("roots = slice u phi*slice:", roots6 == set(sl) | set(scale_points(phi, sl)))
