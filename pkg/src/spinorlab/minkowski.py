"""Dirac-spinor bilinear covariants in the complexified Cl(1,3), the quadratic
constraints they satisfy, the Fierz aggregate, the six-class zero-pattern
classification, and spinor reconstruction from the bilinear data.

Internal generator indices 1..4 display as the Minkowski labels 0..3.  The
Weyl-representation closed forms of the 16 covariants serve as the golden
oracle; the Dirac representation is tied to it by an exact self-inverse change
of basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, Signature, basis_blade, geometric_product, wedge
from .errors import InconsistentBilinears, InvalidInput, ReconstructionFailed
from .matrices import DIRAC_GAMMAS, WEYL_GAMMAS, similarity_matrix

SIG13 = Signature(1, 3)
S_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_RAISE = (1.0, -1.0, -1.0, -1.0)
_TAU = basis_blade(SIG13, [1, 2, 3, 4])
_ONE = Multivector.scalar(SIG13, 1.0)

_BUNDLES = {"weyl": WEYL_GAMMAS, "dirac": DIRAC_GAMMAS}


def _gammas(rep: str) -> list:
    try:
        return _BUNDLES[rep]
    except KeyError:
        raise InvalidInput(f"unknown representation {rep!r}") from None


@dataclass(frozen=True)
class DiracSpinor:
    rep: str
    components: tuple

    def __post_init__(self):
        if self.rep not in _BUNDLES:
            raise InvalidInput(f"unknown representation {self.rep!r}")
        comps = tuple(complex(c) for c in self.components)
        if len(comps) != 4:
            raise InvalidInput("a Dirac spinor has 4 components")
        if not all(np.isfinite([c.real, c.imag]).all() for c in comps):
            raise InvalidInput("non-finite spinor component")
        object.__setattr__(self, "components", comps)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.components, dtype=complex)

    def norm_squared(self) -> float:
        return float(np.vdot(self.vector, self.vector).real)


@dataclass(frozen=True)
class BilinearSet:
    """The 16 covariants: sigma, J_mu, S_mu_nu (pairs 01,02,03,12,13,23), K_mu, omega."""

    sigma: float
    J: tuple
    S: tuple
    K: tuple
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "sigma", float(self.sigma))
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "J", tuple(float(x) for x in self.J))
        object.__setattr__(self, "S", tuple(float(x) for x in self.S))
        object.__setattr__(self, "K", tuple(float(x) for x in self.K))
        if len(self.J) != 4 or len(self.K) != 4 or len(self.S) != 6:
            raise InvalidInput("bilinear blocks must have sizes 4/6/4")

    def scale(self) -> float:
        return (
            self.sigma**2
            + self.omega**2
            + sum(x * x for x in self.J)
            + sum(x * x for x in self.S)
            + sum(x * x for x in self.K)
        )


def bilinears(psi: DiracSpinor, tol: float = 1e-9) -> BilinearSet:
    """The 16 covariants of Eq-style sesquilinear forms, in psi's own representation."""
    G = _gammas(psi.rep)
    v = psi.vector
    g0123 = G[0] @ G[1] @ G[2] @ G[3]
    bar = v.conj() @ G[0]
    raw = [bar @ v]
    raw += [bar @ G[m] @ v for m in range(4)]
    raw += [0.5j * (bar @ G[m] @ G[n] @ v) for m, n in S_PAIRS]
    raw += [1j * (bar @ g0123 @ G[m] @ v) for m in range(4)]
    raw.append(bar @ g0123 @ v)
    scale = 1.0 + psi.norm_squared()
    worst_imag = max(abs(complex(x).imag) for x in raw)
    if worst_imag > tol * scale:
        raise InvalidInput(f"bilinears not real (imag {worst_imag:.2e}); broken gamma set?")
    vals = [float(complex(x).real) for x in raw]
    return BilinearSet(vals[0], tuple(vals[1:5]), tuple(vals[5:11]), tuple(vals[11:15]), vals[15])


def bilinears_closed_form(psi: DiracSpinor) -> BilinearSet:
    """Closed forms of the covariants for Weyl components (a, b, c, d).

    Independent of the matrix route; the two must agree and are tested against
    each other.
    """
    if psi.rep != "weyl":
        raise InvalidInput("closed forms are stated for the Weyl representation")
    a, b, c, d = psi.components
    ac, bc, cc, dc = (x.conjugate() for x in (a, b, c, d))
    sigma = c * ac + d * bc + a * cc + b * dc
    J = (
        abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2,
        b * ac + a * bc - d * cc - c * dc,
        1j * (-b * ac + a * bc + d * cc - c * dc),
        abs(a) ** 2 - abs(b) ** 2 - abs(c) ** 2 + abs(d) ** 2,
    )
    S = (
        0.5j * (-d * ac - c * bc + b * cc + a * dc),
        0.5j * (1j * d * ac - 1j * c * bc - 1j * b * cc + 1j * a * dc),
        0.5j * (-c * ac + d * bc + a * cc - b * dc),
        0.5j * (-1j * c * ac + 1j * d * bc - 1j * a * cc + 1j * b * dc),
        0.5j * (d * ac - c * bc + b * cc - a * dc),
        0.5j * (-1j * d * ac - 1j * c * bc - 1j * b * cc - 1j * a * dc),
    )
    K = (
        -abs(a) ** 2 - abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2,
        -b * ac - a * bc - d * cc - c * dc,
        1j * (b * ac - a * bc + d * cc - c * dc),
        -abs(a) ** 2 + abs(b) ** 2 - abs(c) ** 2 + abs(d) ** 2,
    )
    omega = 1j * (c * ac + d * bc - a * cc - b * dc)
    to_real = lambda x: float(complex(x).real)
    return BilinearSet(
        to_real(sigma),
        tuple(to_real(x) for x in J),
        tuple(to_real(x) for x in S),
        tuple(to_real(x) for x in K),
        to_real(omega),
    )


def bilinears_as_forms(B: BilinearSet) -> tuple:
    """(sigma, J, S, K, omega-form) with the covariant components on the blades."""
    J = Multivector(SIG13, {1 << m: B.J[m] for m in range(4)})
    S = Multivector(SIG13, {(1 << m) | (1 << n): B.S[i] for i, (m, n) in enumerate(S_PAIRS)})
    K = Multivector(SIG13, {1 << m: B.K[m] for m in range(4)})
    omega_form = _TAU * B.omega
    return B.sigma, J, S, K, omega_form


def _aggregate_forms(B: BilinearSet) -> tuple:
    """Index-raised forms as they sit inside the aggregate: J^mu, 2 S^{mu nu}, K^mu."""
    Jf = Multivector(SIG13, {1 << m: _RAISE[m] * B.J[m] for m in range(4)})
    Sf = Multivector(
        SIG13,
        {
            (1 << m) | (1 << n): 2.0 * _RAISE[m] * _RAISE[n] * B.S[i]
            for i, (m, n) in enumerate(S_PAIRS)
        },
    )
    Kf = Multivector(SIG13, {1 << m: _RAISE[m] * B.K[m] for m in range(4)})
    return Jf, Sf, Kf


_EPS = np.zeros((4, 4, 4, 4))
for _perm in __import__("itertools").permutations(range(4)):
    _s = 1
    _pl = list(_perm)
    for _i in range(4):
        for _j in range(_i + 1, 4):
            if _pl[_i] > _pl[_j]:
                _s = -_s
    _EPS[_perm] = _s


@dataclass(frozen=True)
class FpkReport:
    j_squared: float
    k_plus_j: float
    j_dot_k: float
    flag_plane: float
    auxiliary: tuple | None

    def max_residual(self) -> float:
        aux = max(self.auxiliary) if self.auxiliary else 0.0
        return max(self.j_squared, self.k_plus_j, self.j_dot_k, self.flag_plane, aux)


def _minkowski_square(x) -> float:
    return x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]


def fpk_residuals(B: BilinearSet, tol: float = 1e-6) -> FpkReport:
    """Quadratic-constraint residuals of a bilinear set, normalized by its scale.

    The flag-plane entry checks J_mu K_nu - K_mu J_nu = 2 omega S_mu_nu
    + 2 sigma (*S)_mu_nu both in coordinates and through the blade algebra; the
    auxiliary entries (reported when sigma^2 + omega^2 > tol) are the product
    relations tying S<>J, S<>K and S<>S to (omega + sigma tau) times K, J, 1.
    """
    scale = B.scale()
    if scale == 0.0:
        return FpkReport(0.0, 0.0, 0.0, 0.0, None)
    j2 = _minkowski_square(B.J)
    k2 = _minkowski_square(B.K)
    jdotk = B.J[0] * B.K[0] - sum(B.J[i] * B.K[i] for i in (1, 2, 3))

    s_full = np.zeros((4, 4))
    for idx, (m, n) in enumerate(S_PAIRS):
        s_full[m, n] = B.S[idx]
        s_full[n, m] = -B.S[idx]
    s_up = np.outer(_RAISE, _RAISE) * s_full
    star_s = -0.5 * np.einsum("mnab,ab->mn", _EPS, s_up)
    lhs = np.outer(B.J, B.K) - np.outer(B.K, B.J)
    flag_coord = float(np.abs(lhs - 2.0 * B.omega * s_full - 2.0 * B.sigma * star_s).max())

    Jf, Sf, Kf = _aggregate_forms(B)
    flag_alg = (
        wedge(Jf, Kf) - geometric_product(_ONE * B.omega - _TAU * B.sigma, Sf)
    ).norm_inf()
    flag = max(flag_coord, flag_alg)

    aux = None
    if B.sigma**2 + B.omega**2 > tol:
        carrier = _ONE * B.omega + _TAU * B.sigma
        aux = (
            (geometric_product(Sf, Jf) + geometric_product(carrier, Kf)).norm_inf() / scale,
            (geometric_product(Sf, Kf) + geometric_product(carrier, Jf)).norm_inf() / scale,
            (
                geometric_product(Sf, Sf)
                - _ONE * (B.omega**2 - B.sigma**2)
                - _TAU * (2.0 * B.omega * B.sigma)
            ).norm_inf()
            / scale,
        )
    return FpkReport(abs(j2 - B.sigma**2 - B.omega**2) / scale, abs(k2 + j2) / scale,
                     abs(jdotk) / scale, flag / scale, aux)


# -- aggregate -----------------------------------------------------------------


def quantize_minkowski(mv: Multivector, rep: str = "weyl") -> np.ndarray:
    """Algebra morphism into 4x4 matrices: blade e^{m1..mk} -> gamma_{m1} ... gamma_{mk}."""
    if mv.sig != SIG13:
        raise InvalidInput("expected a multivector over Cl(1,3)")
    G = _gammas(rep)
    out = np.zeros((4, 4), dtype=complex)
    for mask, c in mv.terms.items():
        gm = np.eye(4, dtype=complex)
        for i in range(4):
            if mask >> i & 1:
                gm = gm @ G[i]
        out += c * gm
    return out


def dequantize_minkowski(T: np.ndarray, rep: str = "weyl") -> Multivector:
    """Inverse of quantize_minkowski via the trace pairing on the 16 blade matrices."""
    G = _gammas(rep)
    terms = {}
    for mask in range(16):
        gm = np.eye(4, dtype=complex)
        for i in range(4):
            if mask >> i & 1:
                gm = gm @ G[i]
        square = geometric_product(
            Multivector(SIG13, {mask: 1.0}), Multivector(SIG13, {mask: 1.0})
        ).scalar_part()
        c = complex(np.trace(T @ gm)) / (4.0 * square)
        if c != 0:
            terms[mask] = c
    return Multivector(SIG13, terms, "complex")


@dataclass(frozen=True)
class FierzAggregate:
    Z: Multivector
    is_boomerang: bool


def fierz_aggregate(B: BilinearSet, rep: str = "weyl", tol: float = 1e-9,
                    imaginary_s: bool = True) -> FierzAggregate:
    """Multivector aggregate whose quantization is 4 psi psibar for spinor data.

    imaginary_s toggles between the two aggregate variants in circulation: the
    default carries the grade-2 block with a factor i (the one the inversion
    theorem uses); the alternate leaves it real.
    """
    Jf, Sf, Kf = _aggregate_forms(B)
    terms = {0: complex(B.sigma)}
    Z = Multivector(SIG13, terms, "complex") + Jf.to_complex()
    Z = Z + Sf.to_complex() * (1j if imaginary_s else 1.0)
    Z = Z + geometric_product(Kf.to_complex() * 1j, _TAU.to_complex())
    Z = Z + _TAU.to_complex() * complex(-B.omega)
    Zm = quantize_minkowski(Z, rep)
    G0 = _gammas(rep)[0]
    boomerang_resid = np.abs(G0 @ Zm.conj().T @ G0 - Zm).max()
    scale = max(1.0, float(np.abs(Zm).max()))
    return FierzAggregate(Z, bool(boomerang_resid <= tol * scale))


def aggregate_residuals(B: BilinearSet, rep: str = "weyl") -> tuple:
    """The five sandwich identities Z P Z = 4 <P> Z, P running over the probes
    defining sigma, J, S, K, omega; exact for spinor-derived data, singular or not.
    """
    G = _gammas(rep)
    g0123 = G[0] @ G[1] @ G[2] @ G[3]
    Z = quantize_minkowski(fierz_aggregate(B, rep).Z, rep)
    scale = max(1.0, float(np.abs(Z).max()) ** 2)

    def resid(probe, value):
        return float(np.abs(Z @ probe @ Z - 4.0 * value * Z).max()) / scale

    eye = np.eye(4, dtype=complex)
    r_sigma = resid(eye, B.sigma)
    r_j = max(resid(G[m], B.J[m]) for m in range(4))
    r_s = max(resid(0.5j * G[m] @ G[n], B.S[i]) for i, (m, n) in enumerate(S_PAIRS))
    r_k = max(resid(1j * g0123 @ G[m], B.K[m]) for m in range(4))
    r_omega = resid(g0123, B.omega)
    return r_sigma, r_j, r_s, r_k, r_omega


def factorization_residual(B: BilinearSet) -> float:
    """Residual of Z = (Omega + J) <> (1 + i Omega^-1 K tau), Omega = sigma - omega tau."""
    denom = B.sigma**2 + B.omega**2
    if denom == 0.0:
        raise InvalidInput("factorization requires sigma^2 + omega^2 > 0")
    Jf, _, Kf = _aggregate_forms(B)
    Z = fierz_aggregate(B).Z
    omega_mv = _ONE * B.sigma - _TAU * B.omega
    omega_inv = (_ONE * B.sigma + _TAU * B.omega) * (1.0 / denom)
    right = _ONE.to_complex() + geometric_product(
        geometric_product(omega_inv, Kf) * 1j, _TAU
    ).to_complex()
    cand = geometric_product((omega_mv + Jf).to_complex(), right)
    return (cand - Z).norm_inf() / max(1.0, Z.norm_inf())


# -- classification --------------------------------------------------------------


def classify_lounesto(psi: DiracSpinor, tol: float = 1e-9):
    """Class 1..6 from the zero pattern of the covariants, or None for ghosts.

    Regular spinors key on sigma/omega alone; singular ones on the S and K
    blocks.  Blocks count as nonzero above tol * (1 + |psi|^2).
    """
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    B = bilinears(psi)
    threshold = tol * (1.0 + psi.norm_squared())
    nz = lambda block: max(abs(x) for x in block) > threshold
    sigma_nz, omega_nz = abs(B.sigma) > threshold, abs(B.omega) > threshold
    j_nz, s_nz, k_nz = nz(B.J), nz(B.S), nz(B.K)
    if not j_nz:
        return None
    if sigma_nz and omega_nz:
        return 1
    if sigma_nz:
        return 2
    if omega_nz:
        return 3
    if s_nz and k_nz:
        return 4
    if s_nz:
        return 5
    if k_nz:
        return 6
    return None


def change_representation(psi: DiracSpinor) -> DiracSpinor:
    """Apply the self-inverse Weyl<->Dirac matrix and flip the tag."""
    out = similarity_matrix() @ psi.vector
    return DiracSpinor("dirac" if psi.rep == "weyl" else "weyl", tuple(out))


# -- inversion -------------------------------------------------------------------


def _default_eta(rep: str) -> np.ndarray:
    G = _gammas(rep)
    f = 0.25 * (np.eye(4, dtype=complex) + G[0]) @ (np.eye(4, dtype=complex) + 1j * G[1] @ G[2])
    for col in range(4):
        v = f[:, col]
        if np.abs(v).max() > 1e-12:
            return v
    raise ReconstructionFailed("degenerate default idempotent")


def reconstruct(B: BilinearSet, eta: DiracSpinor | None = None, rep: str = "weyl",
                tol: float = 1e-9) -> tuple:
    """Recover a spinor from its covariants, up to the U(1) phase fixed by eta.

    psi = Z eta / (4 N) with N = sqrt(etabar Z eta) / 2; the default eta is the
    first column of the standard idempotent, with a fallback scan over the
    canonical basis spinors maximizing |etabar Z eta|.
    """
    if eta is not None:
        rep = eta.rep
    G0 = _gammas(rep)[0]
    Z = quantize_minkowski(fierz_aggregate(B, rep).Z, rep)
    scale = max(1.0, float(np.abs(Z).max()))

    candidates = []
    if eta is not None:
        candidates.append(eta.vector)
    else:
        candidates.append(_default_eta(rep))
        candidates.extend(np.eye(4, dtype=complex)[:, i] for i in range(4))

    best, best_val = None, 0.0
    for cand in candidates:
        val = complex(cand.conj() @ G0 @ Z @ cand)
        if abs(val) > best_val:
            best, best_val = cand, abs(val)
            best_raw = val
    if best is None or best_val <= tol * scale:
        raise ReconstructionFailed("etabar Z eta vanished for every candidate eta")
    if abs(best_raw.imag) > tol * scale or best_raw.real < 0:
        if best_raw.real < -tol * scale:
            raise InconsistentBilinears(f"negative radicand {best_raw!r}")
        best_raw = complex(max(best_raw.real, 0.0))
        if best_raw == 0:
            raise ReconstructionFailed("radicand collapsed to zero")
    N = 0.5 * float(np.sqrt(best_raw.real))
    psi = (Z @ best) / (4.0 * N)
    return DiracSpinor(rep, tuple(psi)), N
