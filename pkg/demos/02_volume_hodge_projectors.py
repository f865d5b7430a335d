"""The volume form, Hodge duality, and the idempotent pair it generates.

Run:  python demos/02_volume_hodge_projectors.py
"""

import numpy as np

from spinorlab import (
    Multivector,
    Signature,
    basis_blade,
    geometric_product,
    hodge,
    projector_pm,
    rho,
    truncate,
    truncated_product,
    volume_form,
)

# the square of the top blade follows p - q mod 8
print("sign of tau<>tau by signature:")
for p in range(5):
    row = []
    for q in range(5):
        row.append(f"({p},{q}):{volume_form(Signature(p, q)).square_sign:+d}")
    print("  " + "  ".join(row))

# Hodge duality on Cl(1,2): star maps grade k to grade 3-k
sig = Signature(1, 2)
alpha = basis_blade(sig, [1, 2]) * 2 + basis_blade(sig, [2, 3])
print("\nCl(1,2): alpha =", alpha)
print("star alpha =", hodge(alpha))
print("star 1     =", hodge(Multivector.scalar(sig, 1.0)))
print("star tau   =", hodge(volume_form(sig).tau))

# on Cl(8,0) the elements (1 +- tau)/2 are genuine idempotents
sig8 = Signature(8, 0)
rng = np.random.default_rng(0)
a = Multivector(sig8, {int(rng.integers(0, 256)): rng.normal() for _ in range(10)})
plus = projector_pm(a, +1)
print("\nCl(8,0): P+ is idempotent:", (projector_pm(plus, +1) - plus).norm_inf() < 1e-12)
print("P+ then P- annihilates:", projector_pm(plus, -1).norm_inf() < 1e-12)
print("rho_+ + rho_- = 1:", (rho(sig8, 1) + rho(sig8, -1)))

# the truncated algebra keeps only the lower half of the grades
sig5 = Signature(5, 0)
x = Multivector(sig5, {int(rng.integers(0, 32)): rng.normal() for _ in range(8)})
y = Multivector(sig5, {int(rng.integers(0, 32)): rng.normal() for _ in range(8)})
xl, yl = truncate(x, "lower"), truncate(y, "lower")
prod = truncated_product(xl, yl, +1)
print("\nCl(5,0) truncated product keeps grades", sorted(prod.grades()), "<= 2")
lhs = projector_pm(prod, +1)
rhs = geometric_product(projector_pm(xl, +1), projector_pm(yl, +1))
print("P+ turns it back into the geometric product:", (lhs - rhs).norm_inf() < 1e-12)
