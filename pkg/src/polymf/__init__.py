"""Exact matrix factorizations of multivariate polynomials.

Core objects: canonical polynomials over the rationals, dense polynomial
matrices, verified matrix factorizations (phi*psi = psi*phi = f*I), the
standard method, the additive/multiplicative/reduced tensor products,
and the refined pipeline for summand-reduced polynomials.
"""

from .poly import (
    EvalPoint,
    ExpKey,
    MissingVariableError,
    Monomial,
    ParseError,
    PolyError,
    Polynomial,
    count_expanded_monomials,
    parse_polynomial,
    split_monomial,
)
from .matrix import (
    MatrixError,
    PolyMatrix,
    ShuffleMatrix,
    block2x2,
    direct_sum,
    evaluate_matrix,
    from_strings,
    identity,
    kron,
    mat_mul,
    scalar_matrix,
    shuffle_matrix,
    zeros,
)
from .factorization import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXACT_SIZE_THRESHOLD,
    MatrixFactorization,
    Morphism,
    VerificationError,
    compose,
    identity_morphism,
    is_morphism,
    make_factorization,
    scalar_morphism,
    verify_exact,
    verify_randomized,
)
from .tensor import (
    STANDARD_VARIANTS,
    YOSHINO_VARIANTS,
    commutativity_morphism,
    direct_sum_factorizations,
    mult_tensor,
    mult_tensor_variant,
    reduced_tensor,
    shuffle_isomorphism_check,
    tensor_morphisms,
    yoshino,
)
from .standard import (
    SummandList,
    monomial_pairs,
    standard_factorize,
    standard_factorize_polynomial,
    standard_step,
)
from .refined import (
    CapExceededError,
    ConditionResult,
    ProductGroup,
    SizeReport,
    SummandReducedPoly,
    ValidationFailure,
    ValidationReport,
    compare_report,
    predict_sizes,
    run_improved,
    run_refined,
    run_standard,
    validate_summand_reduced,
)
from .cli import RunConfig, main

__version__ = "1.0.0"

__all__ = [
    "EvalPoint",
    "ExpKey",
    "MissingVariableError",
    "Monomial",
    "ParseError",
    "PolyError",
    "Polynomial",
    "count_expanded_monomials",
    "parse_polynomial",
    "split_monomial",
    "MatrixError",
    "PolyMatrix",
    "ShuffleMatrix",
    "block2x2",
    "direct_sum",
    "evaluate_matrix",
    "from_strings",
    "identity",
    "kron",
    "mat_mul",
    "scalar_matrix",
    "shuffle_matrix",
    "zeros",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "EXACT_SIZE_THRESHOLD",
    "MatrixFactorization",
    "Morphism",
    "VerificationError",
    "compose",
    "identity_morphism",
    "is_morphism",
    "make_factorization",
    "scalar_morphism",
    "verify_exact",
    "verify_randomized",
    "STANDARD_VARIANTS",
    "YOSHINO_VARIANTS",
    "commutativity_morphism",
    "direct_sum_factorizations",
    "mult_tensor",
    "mult_tensor_variant",
    "reduced_tensor",
    "shuffle_isomorphism_check",
    "tensor_morphisms",
    "yoshino",
    "SummandList",
    "monomial_pairs",
    "standard_factorize",
    "standard_factorize_polynomial",
    "standard_step",
    "CapExceededError",
    "ConditionResult",
    "ProductGroup",
    "SizeReport",
    "SummandReducedPoly",
    "ValidationFailure",
    "ValidationReport",
    "compare_report",
    "predict_sizes",
    "run_improved",
    "run_refined",
    "run_standard",
    "validate_summand_reduced",
    "RunConfig",
    "main",
]
