"""Exception types shared across the package."""


class CliffordError(Exception):
    """Base class for all spinorlab errors."""


class InvalidInput(CliffordError, ValueError):
    """Malformed argument: bad indices, signature mismatch, out-of-range grade."""


class SignatureMismatch(InvalidInput):
    """Operands live in different Clifford algebras."""


class NonInvertible(CliffordError):
    """Element has no inverse of the required form (null norm or non-versor)."""


class ConvergenceError(CliffordError):
    """Iterative evaluation did not converge within its term budget."""


class UnsupportedDivisionRing(CliffordError):
    """Idempotent representation requires a real commutant; got C or H."""


class UnsupportedSignature(CliffordError):
    """Operation undefined for this (p, q), e.g. dequantization when p - q = 1, 5 mod 8."""


class ReconstructionFailed(CliffordError):
    """No reference spinor with nonzero overlap; aggregate cannot be inverted."""


class InconsistentBilinears(CliffordError):
    """Bilinear data violates the quadratic constraints needed for inversion."""
