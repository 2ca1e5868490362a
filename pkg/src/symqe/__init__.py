"""Exact decision procedures for nonnegativity of symmetric quartic forms.

``decide_orthant`` and ``decide_real`` answer whether a symmetric quartic in
``n`` variables is nonnegative on the nonnegative orthant, resp. on all of
R^n, with O(n) exact checks.  The :mod:`symqe.oracle` module holds slower
brute-force references used for cross-validation.
"""

from .algebra import Interval, Poly
from .qe_plus import build_Z, decide_orthant, decide_orthant_cubic
from .qe_real import compute_DGHK, decide_real, quartic_nonneg_real
from .symquartic import (
    MonomialQuartic,
    SymmetricCubic,
    SymmetricQuartic,
    eval_point,
    from_monomial,
    restriction,
)
from .verdict import Verdict, Witness

__all__ = [
    "Interval",
    "Poly",
    "build_Z",
    "decide_orthant",
    "decide_orthant_cubic",
    "compute_DGHK",
    "decide_real",
    "quartic_nonneg_real",
    "MonomialQuartic",
    "SymmetricCubic",
    "SymmetricQuartic",
    "eval_point",
    "from_monomial",
    "restriction",
    "Verdict",
    "Witness",
]

__version__ = "0.1.0"
