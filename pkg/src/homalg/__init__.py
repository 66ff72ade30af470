"""
Homological algebra over finite-dimensional algebras: minimal resolutions,
Ext with cocycles, Tor, extensions and homological dimensions
"""

from .resolution import Resolution, min_resolution
from .ext import (
    ExtClass,
    ExtSpace,
    ExtTable,
    ext_space,
    ext,
    ext_dim,
    ext_vanishing,
    positive_ext_vanishing,
    ext_table,
    tor,
)
from .extension import yoneda_extension, universal_extension, connecting_class, lift_to_projective, les_check
from .dimension import HomologicalDimension, default_degree_cap, projective_dimension, global_dimension

__all__ = [
    "Resolution",
    "min_resolution",
    "ExtClass",
    "ExtSpace",
    "ExtTable",
    "ext_space",
    "ext",
    "ext_dim",
    "ext_vanishing",
    "positive_ext_vanishing",
    "ext_table",
    "tor",
    "yoneda_extension",
    "universal_extension",
    "connecting_class",
    "lift_to_projective",
    "les_check",
    "HomologicalDimension",
    "default_degree_cap",
    "projective_dimension",
    "global_dimension",
]
