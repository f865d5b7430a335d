"""Dirac spinor bilinears, their quadratic constraints, the six-class
zero-pattern classification, and recovery of a spinor from its bilinears.

Run:  python demos/05_lounesto_classification.py
"""

import numpy as np

from spinorlab import (
    DiracSpinor,
    bilinears,
    change_representation,
    classify_lounesto,
    fierz_aggregate,
    fpk_residuals,
    reconstruct,
)

CLASS_NAMES = {
    1: "regular (sigma, omega both nonzero)",
    2: "regular (omega = 0)",
    3: "regular (sigma = 0)",
    4: "flag-dipole",
    5: "flag-pole (Majorana/Elko live here)",
    6: "dipole (Weyl spinors live here)",
}

examples = [
    ("generic electron-like", DiracSpinor("weyl", (1, 0, 1 + 1j, 0))),
    ("omega = 0           ", DiracSpinor("weyl", (1, 0, 1, 0))),
    ("sigma = 0           ", DiracSpinor("weyl", (1, 0, 1j, 0))),
    ("Majorana-type       ", DiracSpinor("weyl", (-1j, 1j, 1, 1))),
    ("Weyl                ", DiracSpinor("weyl", (1, 0, 0, 0))),
]

for name, psi in examples:
    B = bilinears(psi)
    label = classify_lounesto(psi)
    print(f"{name}: class {label} -- {CLASS_NAMES[label]}")
    print(f"    sigma = {B.sigma:+.3f}, omega = {B.omega:+.3f}, "
          f"|S| = {max(abs(x) for x in B.S):.3f}, |K| = {max(abs(x) for x in B.K):.3f}")

# the sixteen bilinears of any spinor satisfy quadratic constraints
rng = np.random.default_rng(0)
psi = DiracSpinor("weyl", tuple(rng.normal(size=4) + 1j * rng.normal(size=4)))
B = bilinears(psi)
rep = fpk_residuals(B)
print("\nrandom spinor constraint residuals:",
      f"J^2: {rep.j_squared:.1e}, K^2+J^2: {rep.k_plus_j:.1e}, J.K: {rep.j_dot_k:.1e}")

# the aggregate packages them into one multivector whose square closes on itself
agg = fierz_aggregate(B)
print("aggregate is a boomerang:", agg.is_boomerang)
print("aggregate grades:", sorted(agg.Z.grades()))

# class does not depend on the representation
print("\nsame class in the Dirac representation:",
      classify_lounesto(psi) == classify_lounesto(change_representation(psi)))

# the inversion theorem recovers the spinor (up to a phase) from its bilinears
psi2, N = reconstruct(B)
overlap = abs(np.vdot(psi2.vector, psi.vector))
print(f"\nreconstructed spinor overlap |<psi', psi>| / (|psi'||psi|): "
      f"{overlap / (np.linalg.norm(psi2.vector) * np.linalg.norm(psi.vector)):.15f}")
