"""Triply graded homology of positive and negative braid closures in extreme T-degrees."""

from .braid import BraidWord, mirror, parse_braid
from .complex import build_truncated, dualize
from .grading_ring import QQ, Field
from .homology import TriGradedTable, extreme_hhh, negative_extreme_hhh, two_strand_hhh
from .invariant import Superpolynomial, homfly_specialize, mirror_check, superpolynomial, table_for
from .koszul import build_koszul, koszul_cohomology, match_to_koszul

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Field",
    "QQ",
    "Superpolynomial",
    "TriGradedTable",
    "build_koszul",
    "build_truncated",
    "dualize",
    "extreme_hhh",
    "homfly_specialize",
    "koszul_cohomology",
    "match_to_koszul",
    "mirror",
    "mirror_check",
    "negative_extreme_hhh",
    "parse_braid",
    "superpolynomial",
    "table_for",
    "two_strand_hhh",
]
