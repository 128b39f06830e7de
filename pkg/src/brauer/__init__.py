"""Exact primitive idempotents for the Brauer algebra.

The package builds every primitive idempotent of the diagram algebra on n
strands two independent ways, a Jucys-Murphy eigenvalue recurrence and a
regularized fusion product, over an exact rational-function coefficient
field (or a sampled prime field for fast probabilistic cross-checks), and
machine-verifies the identities relating them.
"""

from .algebra import (
    AlgebraElement,
    element_mul,
    embed_element,
    is_idempotent,
    jm_variant,
    jucys_murphy,
    proportionality_ratio,
    specialize_element,
    verify_presentation,
)
from .diagrams import (
    BrauerDiagram,
    contraction_diagram,
    embed,
    enumerate_diagrams,
    generator,
    identity_diagram,
    multiply,
    transposition_diagram,
)
from .fields import (
    ExactOmega,
    Fp,
    FractionField,
    OMEGA,
    OMEGA_FIELD,
    Polynomial,
    PolynomialRing,
    PrimeField,
    PrimeModular,
    QQ,
    RationalFunction,
    poly_gcd,
    rf_arith,
    shift_and_eval,
    specialize_omega,
    u_field,
    valuation_at,
)
from .idempotents import (
    IdempotentResult,
    clear_caches,
    exchange_identity_check,
    factorization_check,
    fusion_idempotent,
    jm_identity_check,
    psi_tilde_b3,
    recurrence_element,
    recurrence_idempotent,
    regularized_eval,
    lift_element,
    row_column_product,
    spectral_suite,
    symmetric_phi,
    ybe_check,
)
from .reports import CheckRecord, VerificationReport
from .tableaux import (
    ContentSymbol,
    UpdownTableau,
    addable_boxes,
    boxes_with_contents,
    contents,
    enumerate_updown,
    exponents,
    f_constant,
    hooks,
    removable_boxes,
    tableau_statistics,
)

__version__ = '0.1.0'
