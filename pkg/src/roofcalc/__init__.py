"""Exact-arithmetic Lie theory for homogeneous roofs.

Root systems and Weyl groups over the integers, Borel-Weil-Bott
cohomology of equivariant bundles, Grothendieck-ring classes of
generalized flag varieties, finite-field point counts of isotropic
Grassmannians, and L-equivalence certificates for the Calabi-Yau pairs
cut out by homogeneous roofs.  Every computation is exact; no floating
point is used anywhere.
"""

from .bwb import (
    SINGLE,
    VANISHES,
    BundleCohomology,
    CohomologyResult,
    bundle_cohomology,
    bwb,
    dot_action,
)
from .limits import DEFAULT_CAP, ENV_VAR, ResourceCapExceeded, resource_cap
from .motive import (
    ExactDivisionError,
    LPolynomial,
    class_of_quotient,
    igr_class,
    igr_point_count,
    roof_identity_residual,
)
from .reps import (
    DominanceError,
    LeviIrrep,
    NotARepresentation,
    WeightMultiset,
    decompose_levi,
    dual_highest_weight,
    exterior_power,
    is_ample,
    is_dominant,
    line_bundle_rank_check,
    weight_multiset,
    weyl_dimension,
)
from .roofs import (
    DETERMINED,
    INCONCLUSIVE,
    KoszulResult,
    RoofFamily,
    RoofReport,
    catalog,
    koszul_zero_locus_cohomology,
    roof_data,
    verify_roof,
)
from .rootsys import (
    RootData,
    RootSystem,
    RootSystemError,
    Weight,
    build_root_system,
    from_orthogonal,
    is_positive_root,
    is_root,
    make_weight,
    pair,
    reflect,
    to_orthogonal,
)
from .weyl import (
    ParabolicSubgroup,
    WeylElement,
    act,
    compose,
    coset_lengths,
    from_word,
    full_group,
    identity,
    inverse,
    inversions,
    length,
    longest_element,
    minimal_coset_reps,
    orbit,
    parabolic,
    simple_reflection,
    weyl_group_order,
)

__all__ = [
    "BundleCohomology",
    "CohomologyResult",
    "DEFAULT_CAP",
    "DETERMINED",
    "DominanceError",
    "ENV_VAR",
    "ExactDivisionError",
    "INCONCLUSIVE",
    "KoszulResult",
    "LPolynomial",
    "LeviIrrep",
    "NotARepresentation",
    "ParabolicSubgroup",
    "ResourceCapExceeded",
    "RoofFamily",
    "RoofReport",
    "RootData",
    "RootSystem",
    "RootSystemError",
    "SINGLE",
    "VANISHES",
    "Weight",
    "WeightMultiset",
    "WeylElement",
    "act",
    "build_root_system",
    "bundle_cohomology",
    "bwb",
    "catalog",
    "class_of_quotient",
    "compose",
    "coset_lengths",
    "decompose_levi",
    "dot_action",
    "dual_highest_weight",
    "exterior_power",
    "from_orthogonal",
    "from_word",
    "full_group",
    "identity",
    "igr_class",
    "igr_point_count",
    "inverse",
    "inversions",
    "is_ample",
    "is_dominant",
    "is_positive_root",
    "is_root",
    "koszul_zero_locus_cohomology",
    "length",
    "line_bundle_rank_check",
    "longest_element",
    "make_weight",
    "minimal_coset_reps",
    "orbit",
    "pair",
    "parabolic",
    "reflect",
    "resource_cap",
    "roof_data",
    "roof_identity_residual",
    "simple_reflection",
    "to_orthogonal",
    "verify_roof",
    "weight_multiset",
    "weyl_dimension",
    "weyl_group_order",
]
