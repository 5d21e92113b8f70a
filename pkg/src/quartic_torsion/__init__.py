"""Exact certification of torsion Ceresa classes for plane quartics with a diagonal automorphism."""

from .ceresa import (
    DiagonalAutomorphism,
    FixedLocus,
    TorsionCertificate,
    Verdict,
    certify,
    fixed_locus_on_curve,
    semi_invariance_exponent,
    tangent_spectrum,
    v_character,
)
from .character import CharacterMultiset, contains_trivial, dual, tensor, wedge2, wedge3
from .groebner import GroebnerBasis, IdealBasis, buchberger, normal_form, smoothness_check
from .poly import Monomial, Polynomial, parse_polynomial
from .search import SearchConfig, SearchHit, run_search

__version__ = "0.1.0"

__all__ = [
    "CharacterMultiset", "DiagonalAutomorphism", "FixedLocus", "GroebnerBasis", "IdealBasis",
    "Monomial", "Polynomial", "SearchConfig", "SearchHit", "TorsionCertificate", "Verdict",
    "buchberger", "certify", "contains_trivial", "dual", "fixed_locus_on_curve", "normal_form",
    "parse_polynomial", "run_search", "semi_invariance_exponent", "smoothness_check",
    "tangent_spectrum", "tensor", "v_character", "wedge2", "wedge3",
]
