"""
Idempotent recollements: the six functors, the counit sequence and the
heredity, homological and colocalisation criteria
"""

from .recollement import (
    RecollementData,
    CounitSequence,
    FunctorImages,
    recollement,
    parse_idempotent,
    j_upper_shriek,
    j_upper_shriek_map,
    j_lower_shriek,
    j_lower_star,
    i_lower_star,
    i_upper_star,
    i_upper_shriek,
    unit_i,
    counit_i,
    counit_map,
    counit_sequence,
    recollement_functors,
    ideal_image_space,
    annihilated_space,
)
from .criteria import (
    heredity_test,
    homological_test,
    colocalisation_criterion,
    corner_projectivity,
    describe_summand,
    ext_mismatches,
)
from .serre import annihilator, annihilator_intersection, serre_idempotent

__all__ = [
    "RecollementData",
    "CounitSequence",
    "FunctorImages",
    "recollement",
    "parse_idempotent",
    "j_upper_shriek",
    "j_upper_shriek_map",
    "j_lower_shriek",
    "j_lower_star",
    "i_lower_star",
    "i_upper_star",
    "i_upper_shriek",
    "unit_i",
    "counit_i",
    "counit_map",
    "counit_sequence",
    "recollement_functors",
    "ideal_image_space",
    "annihilated_space",
    "heredity_test",
    "homological_test",
    "colocalisation_criterion",
    "corner_projectivity",
    "describe_summand",
    "ext_mismatches",
    "annihilator",
    "annihilator_intersection",
    "serre_idempotent",
]
