"""
Exact arithmetic with the golden ratio
======================================

Numbers of the form x + y*sqrt(5) with rational x, y form a field.  Every
computation in icosilab happens there, so nothing is ever rounded.
"""

from icosilab.golden import PHI, GoldenNum, galois_conj, gsign, phi, tau

# The two golden ratios.  `phi` is the small one, 0.618...
print("PHI =", PHI, "~", float(PHI))
print("phi =", phi, "~", float(phi))

# They are reciprocal, and PHI^2 = PHI + 1.
print("PHI * phi =", PHI * phi)
print("PHI^2 - PHI - 1 =", PHI ** 2 - PHI - 1)

# Signs are decided exactly: 2 - sqrt5 is negative because 4 < 5.
print("sign(2 - sqrt5) =", gsign(GoldenNum(2, -1)))

# Swapping sqrt5 -> -sqrt5 takes PHI to -phi.
print("conj(PHI) =", galois_conj(PHI))

# The rational trace x + y is what turns quaternion norms into lattice norms.
print("tau(PHI^2) =", tau(PHI ** 2), "  tau(phi^2) =", tau(phi ** 2))

# Lossless serialization used in the JSON outputs.
print("PHI as (x_num, x_den, y_num, y_den):", PHI.to_tuple())
