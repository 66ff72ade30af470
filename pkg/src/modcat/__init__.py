"""
The category mod Λ: modules, maps, Hom spaces, sub/quotient calculus,
decompositions, tensor products and endomorphism algebras
"""

from .module import (
    Module,
    ModuleMap,
    SES,
    DirectSum,
    direct_sum,
    zero_module,
    power,
    projective_indices,
    projective_module,
    projective_modules,
    regular_indices,
    regular_module,
    restriction_of_scalars,
)
from .calculus import (
    submodule_from_space,
    submodule_generated,
    quotient_module,
    image_space,
    kernel,
    image,
    cokernel,
    sum_of_images,
    radical_space,
    rad,
    top,
    socle_space,
    soc,
    top_vector,
    loewy_series,
    composition_factors,
    is_submodule_space,
    ideal_module,
    factor_through,
    lift_through,
)
from .constructors import simple_module, simple_modules
from .hom import HomSpace, hom_space, hom_dimension, trace_space, trace_submodule, evaluation_map
from .cover import projective_cover, top_generators, cover_multiplicities, is_projective
from .decompose import Decomposition, Piece, decompose, iso_test, is_indecomposable, reassemble
from .tensor import (
    Bimodule,
    TensorData,
    regular_bimodule,
    quotient_bimodule,
    corner_bimodule,
    corner_indices,
    left_module,
    tensor_data,
    tensor_over,
    tensor_map,
)
from .endomorphism import EndomorphismAlgebra, endomorphism_algebra
from .iyama import iyama_radical, iyama_chain
from .io import parse_module, load_module, resolve_module, resolve_modules

__all__ = [
    "Module",
    "ModuleMap",
    "SES",
    "DirectSum",
    "direct_sum",
    "zero_module",
    "power",
    "projective_indices",
    "projective_module",
    "projective_modules",
    "regular_indices",
    "regular_module",
    "restriction_of_scalars",
    "submodule_from_space",
    "submodule_generated",
    "quotient_module",
    "image_space",
    "kernel",
    "image",
    "cokernel",
    "sum_of_images",
    "radical_space",
    "rad",
    "top",
    "socle_space",
    "soc",
    "top_vector",
    "loewy_series",
    "composition_factors",
    "is_submodule_space",
    "ideal_module",
    "factor_through",
    "lift_through",
    "simple_module",
    "simple_modules",
    "HomSpace",
    "hom_space",
    "hom_dimension",
    "trace_space",
    "trace_submodule",
    "evaluation_map",
    "projective_cover",
    "top_generators",
    "cover_multiplicities",
    "is_projective",
    "Decomposition",
    "Piece",
    "decompose",
    "iso_test",
    "is_indecomposable",
    "reassemble",
    "Bimodule",
    "TensorData",
    "regular_bimodule",
    "quotient_bimodule",
    "corner_bimodule",
    "corner_indices",
    "left_module",
    "tensor_data",
    "tensor_over",
    "tensor_map",
    "EndomorphismAlgebra",
    "endomorphism_algebra",
    "iyama_radical",
    "iyama_chain",
    "parse_module",
    "load_module",
    "resolve_module",
    "resolve_modules",
]
