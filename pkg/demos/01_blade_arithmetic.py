"""Blade arithmetic in an arbitrary signature.

Build multivectors over Cl(4,2), multiply them, and watch the grade structure.
Run:  python demos/01_blade_arithmetic.py
"""

from spinorlab import (
    Signature,
    basis_blade,
    contracted_wedge,
    geometric_product,
    geometric_product_contracted,
    left_contraction,
    norms,
    wedge,
)

sig = Signature(4, 2)  # metric diag(+,+,+,+,-,-)
print(f"working in {sig} with metric {sig.metric_tuple()}")

# two polyforms
a = basis_blade(sig, [1]) + basis_blade(sig, [3, 6])
b = basis_blade(sig, [1]) + basis_blade(sig, [2]) + basis_blade(sig, [1, 4]) + basis_blade(sig, [2, 5])
print("a =", a)
print("b =", b)

# the geometric product mixes grades; the wedge keeps only the top route
prod = geometric_product(a, b)
print("a <> b =", prod)
print("grades present:", sorted(prod.grades()))
print("a ^ b  =", wedge(a, b))

# the same product computed through the contracted-wedge expansion
oracle = geometric_product_contracted(a, b)
print("contracted-wedge route agrees:", prod == oracle)

# contractions lower the grade one index at a time
e1 = basis_blade(sig, [1])
e14 = basis_blade(sig, [1, 4])
print("e1 .| e14 =", left_contraction(e1, e14))
print("e1 ^1 e2  =", contracted_wedge(e1, basis_blade(sig, [2]), 1), "(disjoint indices contract to zero)")

# generator squares read off the metric
for i in (1, 6):
    e = basis_blade(sig, [i])
    print(f"e{i} <> e{i} =", geometric_product(e, e))

# reversion norms
e12 = basis_blade(sig, [1, 2])
print("norms of e12:", norms(e12))
