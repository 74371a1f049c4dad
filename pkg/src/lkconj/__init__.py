"""Exact arithmetic, word algebra and kernel search for the extended Lawrence-Krammer representation of C_n."""

from .freegroup import CONVENTION, Automorphism, apply_word, is_identity
from .matrices import RingMatrix, mat_det, mat_eigenvalues, mat_inverse, render_matrix
from .representation import RepContext, predicted_det, rep_word, verify_relations
from .scalars import LaurentPoly, ScalarMode, parse_poly, render_poly
from .words import ESpec, E1Spec, Gen, Word, build_from_spec, free_reduce, parse_word

__all__ = [
    "CONVENTION",
    "Automorphism",
    "apply_word",
    "is_identity",
    "RingMatrix",
    "mat_det",
    "mat_eigenvalues",
    "mat_inverse",
    "render_matrix",
    "RepContext",
    "predicted_det",
    "rep_word",
    "verify_relations",
    "LaurentPoly",
    "ScalarMode",
    "parse_poly",
    "render_poly",
    "ESpec",
    "E1Spec",
    "Gen",
    "Word",
    "build_from_spec",
    "free_reduce",
    "parse_word",
]
