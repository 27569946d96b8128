"""Exact Galois-module homology and group cohomology for Fermat curves
of prime exponent, fully explicit for exponent three."""

from .bsigma import (
    BMapReport,
    VerificationReport,
    b_map_analysis,
    bsigma,
    bsigma_p3,
    bsigma_p3_from_psi,
    gamma_oracle_p3,
    prime_field_image,
    verify_bsigma,
)
from .cohomology import (
    BasisValidation,
    CohomologyGroups,
    GModule,
    annihilator,
    build_complex,
    h1u_module,
    h1x_module,
    h_groups,
    ideal_span,
    lambda1_module,
    trivial_module,
    validate_basis,
    wedge_module,
)
from .cyclotomic import (
    CyclotomicInt,
    IdentityReport,
    conjugate,
    norm,
    verify_cyclotomic_identities,
)
from .fp_linalg import (
    FpMatrix,
    SubquotientReport,
    exterior_square,
    image_basis,
    kernel_basis,
    subquotient,
)
from .galois_kummer import (
    KummerCoordinates,
    PsiVector,
    coordinate_sum,
    group_elements,
    psi_from_kummer,
)
from .group_ring import (
    DifferentialElement,
    GroupRingElement,
    augmentation,
    d_prime,
    d_prime_prime,
    dlog,
    invert,
    multiplication_matrix,
    multiply,
    swap_w,
)
from .homology import (
    BoundaryClass,
    RelativeClass,
    action_matrix,
    boundary_delta,
    h1U_basis,
    h1U_contains,
    h1X_subquotient,
    shift_invariant,
    stab_basis,
)
from .reproduction import CheckResult, run_reproduction
from .scalars import GF27, PrimeExtensionField, Zmod

__all__ = [
    "BMapReport",
    "BasisValidation",
    "BoundaryClass",
    "CheckResult",
    "CohomologyGroups",
    "CyclotomicInt",
    "DifferentialElement",
    "FpMatrix",
    "GF27",
    "GModule",
    "GroupRingElement",
    "IdentityReport",
    "KummerCoordinates",
    "PrimeExtensionField",
    "PsiVector",
    "RelativeClass",
    "SubquotientReport",
    "VerificationReport",
    "Zmod",
    "action_matrix",
    "annihilator",
    "augmentation",
    "b_map_analysis",
    "boundary_delta",
    "bsigma",
    "bsigma_p3",
    "bsigma_p3_from_psi",
    "build_complex",
    "conjugate",
    "coordinate_sum",
    "d_prime",
    "d_prime_prime",
    "dlog",
    "exterior_square",
    "gamma_oracle_p3",
    "group_elements",
    "h1U_basis",
    "h1U_contains",
    "h1X_subquotient",
    "h1u_module",
    "h1x_module",
    "h_groups",
    "ideal_span",
    "image_basis",
    "invert",
    "kernel_basis",
    "lambda1_module",
    "multiplication_matrix",
    "multiply",
    "norm",
    "prime_field_image",
    "psi_from_kummer",
    "run_reproduction",
    "shift_invariant",
    "stab_basis",
    "subquotient",
    "swap_w",
    "trivial_module",
    "validate_basis",
    "verify_bsigma",
    "verify_cyclotomic_identities",
    "wedge_module",
]
