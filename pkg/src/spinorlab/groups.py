"""Versor operations: reflections, the twisted adjoint action, rotor
exponentials, Pin/Spin membership, and extraction of the orthogonal matrix a
versor induces on the frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, Signature, basis_blade, geometric_product, norms
from .errors import ConvergenceError, InvalidInput, NonInvertible

_SERIES_CAP = 64


def versor_inverse(a: Multivector, tol: float = 1e-10) -> Multivector:
    """rev(a) / N(a), valid when rev(a) <> a is a nonzero scalar."""
    rev = a.reverse()
    check = geometric_product(rev, a)
    n = check.scalar_part()
    scale = max(1.0, a.norm_inf() ** 2)
    if abs(n) <= tol * scale:
        raise NonInvertible("norm N(a) vanishes")
    if (check - n).norm_inf() > tol * scale:
        raise NonInvertible("rev(a) <> a is not scalar: not a versor")
    return rev * (1.0 / n)


def reflect(u: Multivector, v: Multivector, tol: float = 1e-10) -> Multivector:
    """Reflection of the vector v across the hyperplane orthogonal to u."""
    for name, x in (("u", u), ("v", v)):
        if not x.is_zero() and x.grades() != {1}:
            raise InvalidInput(f"{name} must be grade 1")
    out = -geometric_product(geometric_product(u, v), versor_inverse(u, tol))
    dust = (out - out.grade(1)).norm_inf()
    if dust > tol * max(1.0, out.norm_inf()):
        raise NonInvertible(f"reflection left grade residue {dust:.2e}")
    return out.grade(1)


def twisted_adjoint(a: Multivector, x: Multivector, tol: float = 1e-10) -> Multivector:
    """hat(a) <> x <> a^-1."""
    return geometric_product(
        geometric_product(a.grade_involution(), x), versor_inverse(a, tol)
    )


def apply_versor(a: Multivector, x: Multivector, tol: float = 1e-10) -> Multivector:
    """a <> x <> a^-1 (untwisted; equals the twisted action for even a)."""
    return geometric_product(geometric_product(a, x), versor_inverse(a, tol))


def rotor_exp(B: Multivector, tol: float = 1e-12) -> Multivector:
    """Exponential of a bivector.

    When B <> B is scalar the closed cos/cosh/linear branch applies; otherwise
    a truncated series runs until the term drops below tol, capped at 64 terms.
    """
    if not B.is_zero() and B.grades() != {2}:
        raise InvalidInput("rotor_exp expects a bivector")
    sig = B.sig
    one = Multivector.scalar(sig, 1.0)
    square = geometric_product(B, B)
    lam = square.scalar_part()
    scale = max(1.0, B.norm_inf() ** 2)
    if (square - lam).norm_inf() <= tol * scale:
        if abs(lam) <= tol * scale:
            return one + B
        if lam < 0:
            m = math.sqrt(-lam)
            return one * math.cos(m) + B * (math.sin(m) / m)
        m = math.sqrt(lam)
        return one * math.cosh(m) + B * (math.sinh(m) / m)
    term, acc = one, one
    for k in range(1, _SERIES_CAP + 1):
        term = geometric_product(term, B) * (1.0 / k)
        acc = acc + term
        if term.norm_inf() <= tol * (1.0 + acc.norm_inf()):
            return acc
    raise ConvergenceError(f"rotor series did not converge in {_SERIES_CAP} terms")


def versor_to_matrix(a: Multivector, tol: float = 1e-10) -> np.ndarray:
    """Orthogonal matrix of the twisted adjoint action on the frame.

    Column j holds the frame components of hat(a) <> e^j <> a^-1; the action
    must preserve grade 1 or the input is rejected.
    """
    sig = a.sig
    inv = versor_inverse(a, tol)
    hat = a.grade_involution()
    M = np.zeros((sig.n, sig.n))
    for j in range(1, sig.n + 1):
        image = geometric_product(geometric_product(hat, basis_blade(sig, [j])), inv)
        scale = max(1.0, image.norm_inf())
        if (image - image.grade(1)).norm_inf() > tol * scale:
            raise NonInvertible("twisted adjoint does not preserve grade 1: not a versor")
        for mask, c in image.grade(1).terms.items():
            M[mask.bit_length() - 1, j - 1] = np.real(c)
    return M


@dataclass(frozen=True)
class MembershipReport:
    is_even: bool
    norm_N: float
    preserves_vectors: bool
    verdict: str


def membership(a: Multivector, tol: float = 1e-9) -> MembershipReport:
    """Pin/Spin/Spin+ verdict from evenness, |N(a)| = 1, and vector preservation."""
    n_val, _ = norms(a)
    n_val = float(np.real(n_val))
    is_even = all(k % 2 == 0 for k in a.grades())
    try:
        versor_to_matrix(a, tol)
        preserves = True
    except NonInvertible:
        preserves = False
    unit_norm = abs(abs(n_val) - 1.0) <= tol
    verdict = "none"
    if preserves and unit_norm:
        if is_even:
            verdict = "spin_plus" if abs(n_val - 1.0) <= tol else "spin"
        else:
            verdict = "pin"
    return MembershipReport(is_even, n_val, preserves, verdict)


def metric_matrix(sig: Signature) -> np.ndarray:
    return np.diag(np.array(sig.metric_tuple(), dtype=float))
