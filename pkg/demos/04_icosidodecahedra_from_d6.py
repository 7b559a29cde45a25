"""
Two icosidodecahedra as a shadow of D6
======================================

The 3x6 golden matrix T has orthogonal rows of equal length, and its columns
are six icosahedron vertices.  It sends the 60 roots of D6 to sums and
differences of neighbouring icosahedron vertices: two icosidodecahedra whose
sizes differ by a factor PHI.
"""

from icosilab.geometry import icosahedron, scale_points, similarity_ratio, slice_600cell, to_off
from icosilab.golden import PHI
from icosilab.projection import column_structure_check, project, project_d6_roots, t_matrix
from icosilab.quaternion import binary_icosahedral_group

T = t_matrix()
for row in T.rows:
    print("  ", [str(x) for x in row])
print("T T^t diagonal:", [str(T.gram_rows()[i][i]) for i in range(3)])
print("column structure:", {k: v for k, v in column_structure_check(T, icosahedron()).items()
                            if isinstance(v, bool)})

print("T(1,1,0,0,0,0) =", [str(c) for c in project(T, (1, 1, 0, 0, 0, 0))])
print("T(1,-1,0,0,0,0) =", [str(c) for c in project(T, (1, -1, 0, 0, 0, 0))])

shells = project_d6_roots()
for r2, pts in shells.shells.items():
    print(f"shell |v|^2 = {r2}: {len(pts)} points")

small, large = (list(v) for v in shells.shells.values())
print("large / small:", similarity_ratio(large, small), "(PHI =", PHI, ")")

sl = slice_600cell(binary_icosahedral_group())
print("small shell is 2 * slice:", set(small) == set(scale_points(2, sl)))

with open("d6_projection.off", "w") as f:
    f.write(to_off([small, large]))
print("wrote d6_projection.off")
