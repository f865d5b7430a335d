"""Reflections, rotors, and the double cover of the rotation group.

Run:  python demos/03_rotors_and_groups.py
"""

import math

import numpy as np

from spinorlab import (
    Signature,
    basis_blade,
    apply_versor,
    geometric_product,
    membership,
    reflect,
    rotor_exp,
    versor_to_matrix,
)

sig = Signature(3, 0)
e1, e2, e3 = (basis_blade(sig, [i]) for i in (1, 2, 3))

# a reflection flips the normal and fixes the orthogonal complement
print("reflect e1 across plane normal to e1:", reflect(e1, e1))
print("reflect e2 across plane normal to e1:", reflect(e1, e2))

# rotors: exp of a bivector, acting by conjugation
theta = math.pi / 2
R = rotor_exp(basis_blade(sig, [1, 2]) * (theta / 2))
print(f"\nrotor for a {math.degrees(theta):.0f} degree rotation in the 12-plane:", R)
print("R e1 R^-1 =", apply_versor(R, e1))
print("as a matrix:\n", np.round(versor_to_matrix(R), 12))

# the famous 4 pi periodicity: a full turn lands on -1, not +1
print("\nrotor at theta = 2 pi:", rotor_exp(basis_blade(sig, [1, 2]) * math.pi))
print("+-R induce the same rotation:",
      np.array_equal(versor_to_matrix(R), versor_to_matrix(R * -1.0)))

# membership: rotors sit in Spin+, unit vectors in Pin, junk nowhere
print("\nmembership of the rotor:     ", membership(R).verdict)
print("membership of e1:            ", membership(e1).verdict)
print("membership of 1 + e1:        ", membership(basis_blade(sig, []) + e1).verdict)

# boosts in Cl(1,3): a timelike bivector exponentiates to a hyperbolic rotation
sig13 = Signature(1, 3)
phi = 0.8
boost = rotor_exp(basis_blade(sig13, [1, 4]) * (phi / 2))
M = versor_to_matrix(boost)
print(f"\nboost with rapidity {phi}:")
print(np.round(M, 12))
print("cosh(phi) =", math.cosh(phi))
