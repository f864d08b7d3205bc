"""Restricted matching field ideals of Schubert varieties in the flag variety.

The package computes, for a block diagonal matching field B_ell and a
permutation w, the restricted ideal obtained by setting the Schubert
vanishing variables to zero in the matching field ideal, classifies it as
zero, binomial or non-binomial, and cross-validates the combinatorial
descriptions of these classes against the brute-force oracle.
"""

from mfl.matchfield import (
    BlockDiagonalMF,
    GridMonomial,
    column_display,
    column_permutation,
    grid_image,
    plucker_weight,
    plucker_weight_oracle,
    verify_coherence,
    weight_matrix,
)
from mfl.permcomb import (
    IndexSet,
    Permutation,
    ValueSequence,
    avoids,
    bruhat_leq,
    delete_value,
    gale_leq,
    has_descending_property,
    in_zero_family,
    insert_max,
    remove_max,
    restriction,
    vanishing_set,
    zero_family,
)
from mfl.quadideal import (
    CapabilityError,
    ClassificationOutcome,
    DegreeTwoSpace,
    QuadraticRelation,
    classify_oracle,
    degree2_flag_ideal,
    initial_degree2,
    matches_initial_degree2,
    quadratic_relations,
    restrict,
)
from mfl.tableaux import (
    DefiningChain,
    Tableau,
    enumerate_ssyt2,
    is_standard,
    min_defining_chain2,
    row_equal,
    ssyt_to_matching_field,
    standard_monomial_count_deg2,
    verify_bijection,
)
from mfl.theoremsets import (
    ClassificationRecord,
    binomial_family,
    classify_combinatorial,
    count_table,
    cross_validate,
    in_pattern_family,
)

__version__ = "0.1.0"
