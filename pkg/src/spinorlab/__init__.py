"""spinorlab: Clifford algebra over arbitrary signatures with spinor machinery.

The blade algebra (algebra), volume-form structure (structure), classification
tables (tables), gamma bundles and idempotent representations (matrices),
versor groups (groups), Minkowski bilinear covariants (minkowski), and the
Cl(8,0) generalised classification (m8), plus JSON I/O (io) and a CLI (cli).
"""

from .algebra import (
    Multivector,
    Signature,
    approx_equal,
    basis_blade,
    contracted_wedge,
    geometric_product,
    geometric_product_contracted,
    grade_project,
    involution,
    left_contraction,
    linear_combine,
    norms,
    sharp,
    wedge,
)
from .errors import (
    CliffordError,
    ConvergenceError,
    InconsistentBilinears,
    InvalidInput,
    NonInvertible,
    ReconstructionFailed,
    SignatureMismatch,
    UnsupportedDivisionRing,
    UnsupportedSignature,
)
from .groups import (
    MembershipReport,
    apply_versor,
    membership,
    reflect,
    rotor_exp,
    twisted_adjoint,
    versor_inverse,
    versor_to_matrix,
)
from .matrices import (
    IdempotentRep,
    RepBundle,
    builtin_gammas,
    check_clifford_relations,
    dirac_weyl_similarity,
    rep_from_idempotent,
)
from .minkowski import (
    BilinearSet,
    DiracSpinor,
    FierzAggregate,
    bilinears,
    bilinears_as_forms,
    bilinears_closed_form,
    change_representation,
    classify_lounesto,
    fierz_aggregate,
    fpk_residuals,
    reconstruct,
)
from .m8 import (
    FluxData,
    M8Class,
    build_constraint_operator,
    cgk_residual,
    classify_m8,
    complexified_bilinears,
    dequantize,
    fierz_identity_residual,
    fierz_polyform,
    gen_bilinear,
    kernel,
    pairing,
    quantize,
)
from .structure import (
    SplitResult,
    VolumeForm,
    hodge,
    parallelism_predicate,
    projector_pm,
    rho,
    split_parallel_orthogonal,
    truncate,
    truncated_product,
    volume_form,
)
from .tables import (
    AlgebraDescriptor,
    SpinorSpaceDescriptor,
    classify_complex,
    classify_real,
    spinor_space,
)

__version__ = "0.1.0"
