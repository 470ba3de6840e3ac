"""Self-dual cyclic codes of even length over characteristic-2 fields.

Construct, count, enumerate, and test Euclidean and Hermitian self-dual
cyclic codes of length n = 2^nu * nbar over GF(2^m), with an exhaustive
minimum-distance engine and an independent brute-force oracle.
"""

from .cosets import (CosetPartition, CyclotomicCoset, Splitting,
                     count_selfdual, cyclotomic_cosets, euclidean_exists,
                     find_splitting, hermitian_exists, multiplicative_order,
                     multiplier_image, split_length)
from .cyclic_codes import (DEFAULT_DISTANCE_BUDGET, CyclicCode,
                           DistanceBudgetExceeded, SelfDualEnumeration,
                           best_min_distance, code_from_generator,
                           dual_generator, enumerate_self_dual,
                           euclidean_inner, hermitian_inner, is_self_dual,
                           minimum_distance, parity_check,
                           self_dual_by_inner_products)
from .finite_field import (Embedding, Field, FieldElement, build_field,
                           conjugate, parse_field_descriptor,
                           primitive_root_of_unity, splitting_field_for)
from .oracle import (OracleCapExceeded, all_half_degree_divisors,
                     brute_force_self_dual)
from .polynomial import (EUCLIDEAN, HERMITIAN, FactorizationPattern, Poly,
                         check_kind, factor_cyclotomic, irreducible_factors,
                         minimal_polynomial, parse_poly, poly_gcd,
                         x_pow_minus_one)

__version__ = "0.1.0"

__all__ = [
    "CosetPartition", "CyclotomicCoset", "Splitting", "count_selfdual",
    "cyclotomic_cosets", "euclidean_exists", "find_splitting",
    "hermitian_exists", "multiplicative_order", "multiplier_image",
    "split_length",
    "DEFAULT_DISTANCE_BUDGET", "CyclicCode", "DistanceBudgetExceeded",
    "SelfDualEnumeration", "best_min_distance", "code_from_generator",
    "dual_generator", "enumerate_self_dual", "euclidean_inner",
    "hermitian_inner", "is_self_dual", "minimum_distance", "parity_check",
    "self_dual_by_inner_products",
    "Embedding", "Field", "FieldElement", "build_field", "conjugate",
    "parse_field_descriptor", "primitive_root_of_unity",
    "splitting_field_for",
    "OracleCapExceeded", "all_half_degree_divisors", "brute_force_self_dual",
    "EUCLIDEAN", "HERMITIAN", "FactorizationPattern", "Poly", "check_kind",
    "factor_cyclotomic", "irreducible_factors", "minimal_polynomial",
    "parse_poly", "poly_gcd", "x_pow_minus_one",
    "__version__",
]
