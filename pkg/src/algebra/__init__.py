"""
Finite-dimensional algebras: presentations, structure constants, ideals,
quotients and radicals
"""

from .presentation import Arrow, Path, Relation, Presentation, parse_presentation, load_presentation
from .algebra import (
    Algebra,
    Ideal,
    QuotientMap,
    two_sided_ideal,
    idempotent_ideal,
    zero_ideal,
    ideal_product,
    ideal_power,
    is_nilpotent,
    quotient_algebra,
    corner_algebra,
    cartan_matrix,
    opposite_algebra,
    zero_algebra,
    ground_algebra,
)
from .builder import build_algebra, load_algebra
from .structure import algebra_from_products, parse_structure_constants, load_structure_constants
from .radical import radical, is_semisimple, is_division_ring, check_radical, trace_form_applies

__all__ = [
    "Arrow",
    "Path",
    "Relation",
    "Presentation",
    "parse_presentation",
    "load_presentation",
    "Algebra",
    "Ideal",
    "QuotientMap",
    "two_sided_ideal",
    "idempotent_ideal",
    "zero_ideal",
    "ideal_product",
    "ideal_power",
    "is_nilpotent",
    "quotient_algebra",
    "corner_algebra",
    "cartan_matrix",
    "opposite_algebra",
    "zero_algebra",
    "ground_algebra",
    "build_algebra",
    "load_algebra",
    "algebra_from_products",
    "parse_structure_constants",
    "load_structure_constants",
    "radical",
    "is_semisimple",
    "is_division_ring",
    "check_radical",
    "trace_form_applies",
]
