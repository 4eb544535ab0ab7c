"""Exact q-series for generalized sum-of-divisors generating functions.

Rationals cross the C++ boundary as "p/q" strings; `frac` converts them
to `fractions.Fraction`.
"""

from fractions import Fraction

from ._macmahon import (
    ReconstructionMismatch,
    Series,
    SeriesError,
    ValidationError,
    eta,
    family,
    gen_poly,
    kmax_bound,
    oracle,
    reconstruct,
    theta,
    two_path_check,
    verify_eta_cubed,
    verify_heat,
    verify_jtp,
    verify_product_remark,
    verify_thm1_even,
    verify_thm1_odd,
    verify_thm2,
    verify_thm3,
)


def frac(s):
    """Parse a "p/q" coefficient string into a Fraction."""
    return Fraction(s)


__all__ = [
    "Fraction",
    "ReconstructionMismatch",
    "Series",
    "SeriesError",
    "ValidationError",
    "eta",
    "family",
    "frac",
    "gen_poly",
    "kmax_bound",
    "oracle",
    "reconstruct",
    "theta",
    "two_path_check",
    "verify_eta_cubed",
    "verify_heat",
    "verify_jtp",
    "verify_product_remark",
    "verify_thm1_even",
    "verify_thm1_odd",
    "verify_thm2",
    "verify_thm3",
]
