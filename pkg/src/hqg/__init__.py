"""Exact computational algebra for finite-dimensional Hopf quasigroups.

Structures are matrices of exact scalars (rationals or odd-prime
residues) over a chosen basis; every axiom is checked exhaustively on
basis inputs, so a passing report is a proof for the given object and
a failing one carries the first offending basis tuple.  The package
covers loops and their group-like algebras, validation of both
quasigroup flavors, twists/actions/pairings and the products they glue,
factorizations with full theorem pipelines, a JSON document format, a
self-checking example catalog, and the ``hqg`` command-line tool.
"""

from .exactlin import (
    GF,
    QQ,
    Field,
    FpElement,
    LinMap,
    NotInvertibleError,
    Pipe,
    PrimeField,
    RationalField,
    ShapeError,
    compose,
    decompose_index,
    invert,
    kron,
    maps_equal,
    rank,
    swap,
    transpose,
)
from .hopf_core import (
    AxiomResult,
    HopfCoquasigroup,
    HopfQuasigroup,
    HopfStructure,
    StructureError,
    ValidationReport,
    antipode_invertible,
    as_coquasigroup,
    as_quasigroup,
    check_antipode_properties,
    check_identity,
    convolution,
    convolution_inverse,
    convolution_unit,
    dualize,
    is_associative,
    is_coassociative,
    is_cocommutative,
    is_commutative,
    is_hopf_morphism,
    report,
    validate,
    validate_bimonoid,
    validate_hopf_coquasigroup,
    validate_hopf_quasigroup,
)
from .loops import (
    FiniteGroup,
    FiniteLoop,
    builtin_group,
    chein_double,
    direct_product,
    loop_algebra,
    loop_associativity_witness,
    validate_group,
    validate_ip_loop,
)
from .products import (
    CodistributiveLaw,
    ComatchedPair,
    DistributiveLaw,
    LawValidationError,
    MatchedPair,
    SkewPairing,
    actions_from_skew_pairing,
    cross_product,
    double_cross_coproduct,
    double_cross_product,
    dual_law,
    dual_pair,
    induced_colaw,
    induced_law,
    loop_taft_pairing,
    scalar_magma,
    taft_algebra,
    tensor_comonoid,
    validate_codistributive_law,
    validate_comatched_pair,
    validate_distributive_law,
    validate_matched_pair,
    validate_skew_pairing,
    wreath_coproduct,
    wreath_product,
)
from .factor import (
    Cofactorization,
    Factorization,
    NotFactorizationError,
    canonical_cofactorization,
    canonical_factorization,
    check_cofactorization,
    check_factorization,
    dual_cofactorization,
    dual_factorization,
    embedding_report,
    extract_codistributive_law,
    extract_comatched_pair,
    extract_distributive_law,
    extract_matched_pair,
    induced_substructure,
    projection_report,
    verify_cofactorization_theorem,
    verify_factorization_theorem,
)
from .serialize import SerializationError, dumps, load, loads, save
from .catalog import CatalogEntry, CatalogError, build, check_entry, list_entries

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "Field",
    "FpElement",
    "LinMap",
    "NotInvertibleError",
    "Pipe",
    "PrimeField",
    "RationalField",
    "ShapeError",
    "compose",
    "decompose_index",
    "invert",
    "kron",
    "maps_equal",
    "rank",
    "swap",
    "transpose",
    "AxiomResult",
    "HopfCoquasigroup",
    "HopfQuasigroup",
    "HopfStructure",
    "StructureError",
    "ValidationReport",
    "antipode_invertible",
    "as_coquasigroup",
    "as_quasigroup",
    "check_antipode_properties",
    "check_identity",
    "convolution",
    "convolution_inverse",
    "convolution_unit",
    "dualize",
    "is_associative",
    "is_coassociative",
    "is_cocommutative",
    "is_commutative",
    "is_hopf_morphism",
    "report",
    "validate",
    "validate_bimonoid",
    "validate_hopf_coquasigroup",
    "validate_hopf_quasigroup",
    "FiniteGroup",
    "FiniteLoop",
    "builtin_group",
    "chein_double",
    "direct_product",
    "loop_algebra",
    "loop_associativity_witness",
    "validate_group",
    "validate_ip_loop",
    "CodistributiveLaw",
    "ComatchedPair",
    "DistributiveLaw",
    "LawValidationError",
    "MatchedPair",
    "SkewPairing",
    "actions_from_skew_pairing",
    "cross_product",
    "double_cross_coproduct",
    "double_cross_product",
    "dual_law",
    "dual_pair",
    "induced_colaw",
    "induced_law",
    "loop_taft_pairing",
    "scalar_magma",
    "taft_algebra",
    "tensor_comonoid",
    "validate_codistributive_law",
    "validate_comatched_pair",
    "validate_distributive_law",
    "validate_matched_pair",
    "validate_skew_pairing",
    "wreath_coproduct",
    "wreath_product",
    "Cofactorization",
    "Factorization",
    "NotFactorizationError",
    "canonical_cofactorization",
    "canonical_factorization",
    "check_cofactorization",
    "check_factorization",
    "dual_cofactorization",
    "dual_factorization",
    "embedding_report",
    "extract_codistributive_law",
    "extract_comatched_pair",
    "extract_distributive_law",
    "extract_matched_pair",
    "induced_substructure",
    "projection_report",
    "verify_cofactorization_theorem",
    "verify_factorization_theorem",
    "SerializationError",
    "dumps",
    "load",
    "loads",
    "save",
    "CatalogEntry",
    "CatalogError",
    "build",
    "check_entry",
    "list_entries",
    "__version__",
]
