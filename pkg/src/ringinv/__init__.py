"""Exact generalized inverses (Drazin, strongly Drazin, Hirano) over
Z, Z/n, and matrix rings over them, with checkable certificates.
"""

from .rings import (
    Element,
    InfiniteRingError,
    NilpotencyWitness,
    PreconditionError,
    RingError,
    RingMismatchError,
    RingSpec,
    UnsupportedRingError,
    VerificationError,
    Z,
    char_poly,
    det,
    inverse_of_unipotent,
    is_idempotent,
    is_nilpotent,
    is_tripotent,
    is_unit,
    matrix,
    modular,
    nilpotency_bound,
)
from .literals import ParseError, parse_element, parse_ring, render_element, render_ring
from .lifting import (
    LiftedIdempotent,
    PolynomialCertificate,
    format_polynomial,
    lift_idempotent,
)
from .gen_inverse import (
    DrazinCertificate,
    HiranoCertificate,
    InverseReport,
    SDrazinCertificate,
    SemigroupProfile,
    TripotentDecomposition,
    brute_force_drazin,
    brute_force_hirano,
    brute_force_strongly_drazin,
    check_drazin,
    check_hirano,
    check_strongly_drazin,
    classify,
    drazin_finite,
    has_hirano,
    has_strongly_drazin,
    hirano,
    hirano_of_hirano,
    hirano_via_square,
    inverse_of_two,
    sd_difference_decomposition,
    semigroup_profile,
    strongly_drazin,
    tripotent_decomposition,
)
from .calculus import (
    SquareZeroSum,
    cline,
    commuting_product,
    jacobson_transfer,
    one_minus_counterexample,
    orthogonal_sum,
    power_formula,
    power_transfer,
    square_zero_sum,
)
from .census import (
    CensusMismatchError,
    CensusReport,
    CrossCheckInfo,
    InclusionWitness,
    LAWS,
    TheoremReport,
    ViolationRecord,
    run_census,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CensusMismatchError",
    "CensusReport",
    "CrossCheckInfo",
    "DrazinCertificate",
    "Element",
    "HiranoCertificate",
    "InclusionWitness",
    "InfiniteRingError",
    "InverseReport",
    "LAWS",
    "LiftedIdempotent",
    "NilpotencyWitness",
    "ParseError",
    "PolynomialCertificate",
    "PreconditionError",
    "RingError",
    "RingMismatchError",
    "RingSpec",
    "SDrazinCertificate",
    "SemigroupProfile",
    "SquareZeroSum",
    "TheoremReport",
    "TripotentDecomposition",
    "UnsupportedRingError",
    "VerificationError",
    "ViolationRecord",
    "Z",
    "brute_force_drazin",
    "brute_force_hirano",
    "brute_force_strongly_drazin",
    "char_poly",
    "check_drazin",
    "check_hirano",
    "check_strongly_drazin",
    "classify",
    "cline",
    "commuting_product",
    "det",
    "drazin_finite",
    "format_polynomial",
    "has_hirano",
    "has_strongly_drazin",
    "hirano",
    "hirano_of_hirano",
    "hirano_via_square",
    "inverse_of_two",
    "inverse_of_unipotent",
    "is_idempotent",
    "is_nilpotent",
    "is_tripotent",
    "is_unit",
    "jacobson_transfer",
    "lift_idempotent",
    "matrix",
    "modular",
    "nilpotency_bound",
    "one_minus_counterexample",
    "orthogonal_sum",
    "parse_element",
    "parse_ring",
    "power_formula",
    "power_transfer",
    "render_element",
    "render_ring",
    "run_census",
    "sd_difference_decomposition",
    "semigroup_profile",
    "square_zero_sum",
    "strongly_drazin",
    "tripotent_decomposition",
    "verify_theorem",
]
