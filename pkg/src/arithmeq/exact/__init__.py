"""Exact integer, modular, and rational polynomial arithmetic."""

from .intpoly import (
    IntPoly,
    discriminant,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from .modpoly import Factorization, ModPoly, factor_mod_p, mod_gcd, mod_xgcd
from .sturm import count_real_roots, sturm_signature
from .factorq import factor_over_q

__all__ = [
    "IntPoly",
    "discriminant",
    "poly_gcd",
    "resultant",
    "squarefree_decomposition",
    "Factorization",
    "ModPoly",
    "factor_mod_p",
    "mod_gcd",
    "mod_xgcd",
    "count_real_roots",
    "sturm_signature",
    "factor_over_q",
]
