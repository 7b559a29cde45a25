"""
The binary icosahedral group and the 600-cell
=============================================

120 unit quaternions, closed under multiplication.  As points of R^4 they are
the vertices of the 600-cell; the ones with zero real part are an
icosidodecahedron.
"""

from icosilab import geometry as geo
from icosilab.quaternion import binary_icosahedral_group, group_axioms_check, rotation_of

G = binary_icosahedral_group()
print("order:", len(G))
print("axioms:", group_axioms_check(G))

# Each unit quaternion rotates 3-space by v -> q v q*.  q and -q give the
# same rotation, so 120 quaternions give 60 rotations.
rotations = {rotation_of(g) for g in G}
print("distinct rotations:", len(rotations))

# The 600-cell skeleton: edges join vertices at minimal distance.
cell = geo.edges([g.coeffs for g in G])
print("600-cell edges:", len(cell.edges), " edge length^2:", cell.min_dist_sq)
print("triangles:", len(geo.triangles(cell)), " tetrahedra:", len(geo.tetrahedra(cell)))

# Slicing by the pure imaginary quaternions leaves 30 points: an octahedron
# plus three golden boxes.
sl = geo.slice_600cell(G)
print("slice size:", len(sl))
print("slice census:", geo.face_census(geo.edges(sl)))

# The same shape built from the icosahedron's edge midpoints is PHI times bigger.
mid = geo.midpoint_icosidodecahedron(geo.icosahedron())
print("midpoint / slice ratio:", geo.similarity_ratio(mid, sl))

print()
print(geo.to_off([sl], precision=6)[:200], "...")
