"""
Two 600-cells as a shadow of E8
===============================

The 4x8 golden matrix S, scaled by 1/2, sends the 240 E8 roots to
quaternions.  With the last coordinate negated first (equivalently, using the
odd half-integer coset), the images are exactly the 600-cell G and its copy
PHI*G.  Applied verbatim to the even coset, the all-halves root lands on
neither shell.
"""

from fractions import Fraction

from icosilab.geometry import norm_sq
from icosilab.golden import ONE, PHI
from icosilab.projection import e8_root_image, project, project_e8_roots, s_matrix
from icosilab.quaternion import binary_icosahedral_group, qnorm_sq

S = s_matrix()
print("S S^t diagonal:", [str(S.gram_rows()[i][i]) for i in range(4)])

print("(1,-1,0,...) ->", e8_root_image((1, -1, 0, 0, 0, 0, 0, 0)))
print("(1, 1,0,...) ->", e8_root_image((1, 1, 0, 0, 0, 0, 0, 0)))

G = binary_icosahedral_group()
shells = project_e8_roots()
for r2, pts in shells.shells.items():
    print(f"shell |q|^2 = {r2}: {len(pts)} quaternions")
print("inner shell == G:", set(shells[ONE]) == G.as_set())
print("outer shell == PHI*G:", set(shells[PHI * PHI]) == G.scaled(PHI).as_set())

halves = (Fraction(1, 2),) * 8
print()
print("verbatim convention:", project_e8_roots("verbatim").sizes())
print("|S (1/2,...,1/2)|^2 =", norm_sq(project(S, halves)), "= PHI + 4 =", PHI + 4)
print("scaled image norm:", qnorm_sq(e8_root_image(halves, "verbatim")))
