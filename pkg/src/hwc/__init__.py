"""
Highest weight categories: standard modules, Filt membership, the three
equivalent checkers, heredity chains, ordering search and the radical-chain
construction
"""

from .ordering import Ordering, parse_ordering
from .standard import standard_modules, standard_sequences, division_verdict, filt_check
from .checkers import HwCertificate, hwc_check, standard_defn_check
from .chain import (
    ChainStage,
    HeredityChain,
    StageReport,
    stage_algebra,
    heredity_chain,
    qh_search,
    hwt_chain_report,
    delta_via_recollement,
    stage_ext_comparison,
    ext_bound_check,
)
from .iyama import IyamaResult, iyama

__all__ = [
    "Ordering",
    "parse_ordering",
    "standard_modules",
    "standard_sequences",
    "division_verdict",
    "filt_check",
    "HwCertificate",
    "hwc_check",
    "standard_defn_check",
    "ChainStage",
    "HeredityChain",
    "StageReport",
    "stage_algebra",
    "heredity_chain",
    "qh_search",
    "hwt_chain_report",
    "delta_via_recollement",
    "stage_ext_comparison",
    "ext_bound_check",
    "IyamaResult",
    "iyama",
]
