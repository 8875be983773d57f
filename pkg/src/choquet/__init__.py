"""Signed Choquet integrals and Lovasz extensions of set functions on [n].

The package represents set functions as mask-indexed value arrays, evaluates
their integrals by two independent routes (sorting permutation and Mobius
min-form), computes fast Mobius/zeta transforms, and ships randomized
checkers for the aggregation axioms together with the counterexample
families showing the axioms are independent.
"""

from .axioms import (
    AXIOMS,
    Aggregator,
    AxiomReport,
    FAMILIES,
    FAMILY_CHOQUET,
    FAMILY_MULTILINEAR,
    FAMILY_VSTAR_PATCH,
    FAMILY_WEIGHTED_MEAN,
    IndependenceSummary,
    Witness,
    check_comonotonic_additivity,
    check_comonotonic_affinity,
    check_interval_scale_covariance,
    check_linearity_in_capacity,
    check_positive_homogeneity,
    check_zero_on_basis,
    evaluate_family,
    independence_suite,
    vstar_capacity,
)
from .errors import (
    ChoquetError,
    DimensionMismatch,
    EmptyT,
    FileFormatError,
    GroundSetTooLarge,
    NotAGame,
    NotMonotone,
    UnsupportedGroundSet,
)
from .generate import (
    random_capacity,
    random_normalized_capacity,
    random_set_function,
    random_signed_capacity,
)
from .integral import (
    EvaluationResult,
    SortPermutation,
    choquet,
    choquet_mobius,
    common_sort_permutation,
    comonotonic,
    lovasz_extension,
    sort_permutation,
)
from .io import load_set_function, parse_point, subset_key
from .setfunction import (
    Capacity,
    MAX_GROUND_SET,
    MobiusRepresentation,
    SetFunction,
    SignedCapacity,
    basis_decomposition,
    elements_from_mask,
    full_mask,
    mask_from_elements,
    mobius_transform,
    unanimity_game,
    validate_capacity,
    validate_signed_capacity,
    zeta_transform,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "Aggregator",
    "AxiomReport",
    "Capacity",
    "ChoquetError",
    "DimensionMismatch",
    "EmptyT",
    "EvaluationResult",
    "FAMILIES",
    "FAMILY_CHOQUET",
    "FAMILY_MULTILINEAR",
    "FAMILY_VSTAR_PATCH",
    "FAMILY_WEIGHTED_MEAN",
    "FileFormatError",
    "GroundSetTooLarge",
    "IndependenceSummary",
    "MAX_GROUND_SET",
    "MobiusRepresentation",
    "NotAGame",
    "NotMonotone",
    "SetFunction",
    "SignedCapacity",
    "SortPermutation",
    "UnsupportedGroundSet",
    "Witness",
    "basis_decomposition",
    "check_comonotonic_additivity",
    "check_comonotonic_affinity",
    "check_interval_scale_covariance",
    "check_linearity_in_capacity",
    "check_positive_homogeneity",
    "check_zero_on_basis",
    "choquet",
    "choquet_mobius",
    "common_sort_permutation",
    "comonotonic",
    "elements_from_mask",
    "evaluate_family",
    "full_mask",
    "independence_suite",
    "load_set_function",
    "lovasz_extension",
    "mask_from_elements",
    "mobius_transform",
    "parse_point",
    "random_capacity",
    "random_normalized_capacity",
    "random_set_function",
    "random_signed_capacity",
    "sort_permutation",
    "subset_key",
    "unanimity_game",
    "validate_capacity",
    "validate_signed_capacity",
    "vstar_capacity",
    "zeta_transform",
]
