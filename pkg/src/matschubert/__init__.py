"""Grothendieck polynomials and Hilbert invariants of matrix Schubert varieties."""

from .perm import Permutation, from_one_line, parse, normalize, coxeter_length
from .diagram import rothe_diagram, essential_set, effective_region, is_dominant
from .poly import MultiPoly, UniPoly, RatUniPoly
from .groth import grothendieck, pipe_dream_grothendieck, groth_degree
from .hilbert import AmbientSpec, hilbertian_report, k_polynomial, regularity

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "from_one_line",
    "parse",
    "normalize",
    "coxeter_length",
    "rothe_diagram",
    "essential_set",
    "effective_region",
    "is_dominant",
    "MultiPoly",
    "UniPoly",
    "RatUniPoly",
    "grothendieck",
    "pipe_dream_grothendieck",
    "groth_degree",
    "AmbientSpec",
    "hilbertian_report",
    "k_polynomial",
    "regularity",
]
