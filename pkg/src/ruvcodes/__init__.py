"""Constacyclic codes of length 2p^s over F_{p^m} + uF_{p^m} + vF_{p^m} + uvF_{p^m}.

Closed-form codeword counts, Hamming and symbol-pair distances for every
ideal of R[x]/(x^(2p^s) - alpha) with alpha a non-square unit, and a
brute-force oracle that checks them.
"""
from .distances import d_hamming, d_symbol_pair, formula_report
from .gf import FieldElement, FieldParams, make_field
from .ideals import CodeReport, IdealSpec, enumerate_specs, validate_spec
from .quotient import AmbientParams, QuotPoly, make_ambient
from .ring4 import RingElement, UnitFamily, classify_unit, parse_ring_element

__all__ = [
    "AmbientParams",
    "CodeReport",
    "FieldElement",
    "FieldParams",
    "IdealSpec",
    "QuotPoly",
    "RingElement",
    "UnitFamily",
    "classify_unit",
    "d_hamming",
    "d_symbol_pair",
    "enumerate_specs",
    "formula_report",
    "make_ambient",
    "make_field",
    "parse_ring_element",
    "validate_spec",
]
