"""Exact calculator for perversity incidence data on stratified varieties.

The package provides perversity/bound arithmetic, stratification
descriptors, finitely presented abelian groups with Smith normal form,
presented intersection rings of smooth bases, an incidence-pattern calculus
for cycles and generalized cocycles, and the full class-group and
three-case intersection pairing computation on cones over smooth projective
bases.  All arithmetic is exact; there are no tolerances anywhere.
"""

from .perversity import (
    GeneralizedBound,
    Perversity,
    add,
    leq,
    make_perversity,
    star_compose,
    top,
    zero,
)
from .strata import (
    ModelTag,
    Stratification,
    StratumSpec,
    isolated_vertex,
    product_with_fiber,
    suspend,
)
from .abgroup import (
    FpAbelianGroup,
    GroupMap,
    SmithForm,
    describe,
    invariant_factors,
    is_exact_at_middle,
    smith_normal_form,
)
from .chow import (
    ChowClass,
    ChowRingPresentation,
    builtin,
    degree,
    mul,
    point,
    product_presentation,
    projective_space,
    quadric_surface,
)
from .cycles import (
    EMPTY,
    CyclePattern,
    FamilyCertificate,
    JointPattern,
    check_family_certificate,
    check_incidence_datum,
    check_perversity,
    check_star,
    empty_pattern,
    flat_pullback,
    proper_pushforward,
    sum_patterns,
    suspend_pattern,
)
from .cocycles import (
    CocyclePattern,
    RankProfile,
    cap_pattern,
    check_cocycle,
    join,
    morphism_fiber_pattern,
    push_closed_immersion,
    rank_to_incidence,
    slice_against,
    slice_with_hyperplanes,
)
from .cones import (
    ConeClass,
    ConeProductError,
    ConeVariety,
    Mode,
    cartier_coherence_check,
    chow_group,
    class_to_pattern,
    comparison_map,
    degree_pairing,
    intersect,
    vertex_bound,
    zobel,
)

__version__ = "0.1.0"
