"""Classification tables and matrix representations grown from idempotents.

Run:  python demos/04_matrix_representations.py
"""

import numpy as np

from spinorlab import (
    Multivector,
    Signature,
    basis_blade,
    builtin_gammas,
    check_clifford_relations,
    classify_real,
    dirac_weyl_similarity,
    rep_from_idempotent,
    spinor_space,
)

# every real Clifford algebra is a matrix algebra (or two) over R, C, or H
print("algebra classification for small signatures:")
for p in range(4):
    print("  " + "  ".join(f"Cl({p},{q}) = {classify_real(p, q)!s:<14}" for q in range(4)))

print("\nspinor spaces of Cl(1,3):")
for kind in ("algebraic", "classical", "even_subalgebra"):
    print(f"  {kind:16s} -> {spinor_space(1, 3, kind)}")

# the built-in gamma bundles satisfy the anticommutation relations exactly
for name in ("pauli", "dirac", "weyl", "cl8"):
    rep = builtin_gammas(name)
    print(f"\n{name}: {rep.dim}x{rep.dim} {rep.field_tag}, relation residual",
          check_clifford_relations(rep).max_residual)

S, resid = dirac_weyl_similarity()
print("\nDirac = S Weyl S^-1 with S self-inverse; residual:", resid)

# grow Mat(2,R) inside Cl(2,0) from the idempotent (1 + e1)/2
sig = Signature(2, 0)
f1 = (Multivector.scalar(sig, 1.0) + basis_blade(sig, [1])) * 0.5
idem = rep_from_idempotent(sig, f1)
print("\nideal basis for Cl(2,0) f1:", idem.Ecol)
for name, x in [("1", Multivector.scalar(sig, 1.0)), ("e1", basis_blade(sig, [1])),
                ("e2", basis_blade(sig, [2])), ("e1e2", basis_blade(sig, [1, 2]))]:
    print(f"  rho({name:4s}) =", idem.matrix_of(x).tolist())

# the same algorithm handles bigger ideals, e.g. Mat(4,R) inside Cl(3,1)
from spinorlab import geometric_product

sig31 = Signature(3, 1)
one = Multivector.scalar(sig31, 1.0)
f = geometric_product(
    (one + basis_blade(sig31, [1])) * 0.5, (one + basis_blade(sig31, [2, 4])) * 0.5
)
idem31 = rep_from_idempotent(sig31, f)
gammas = idem31.gamma_matrices()
print("\nCl(3,1) representation size:", idem31.size)
print("extracted gamma_1 @ gamma_1:", np.round(gammas[0] @ gammas[0], 12).tolist())
