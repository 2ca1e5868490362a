"""Nonnegativity of a symmetric quartic on all of R^n, in O(n) checks.

After the lattice checks ``f(1_k, 0) >= 0``, each two-block restriction
``f_r(t) = f(t*1_r, 1_{n-r})`` must satisfy ``K >= 0 > Delta`` or
``G, H, K >= 0``, where ``Delta, G, H, K`` are closed-form invariants of the
quartic ``f_r`` (no roots of ``f_r'`` are ever computed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _scan
from .algebra import Interval, Scalar, as_rational, det_K, find_negative_point
from .qe_plus import _lattice_witness, _ones_check
from .symquartic import SymmetricQuartic, _restriction, eval_point
from .verdict import BlockCheck, Verdict, Witness

__all__ = ["RealDiscriminants", "compute_DGHK", "quartic_nonneg_real", "block_check", "decide_real"]


@dataclass(frozen=True)
class RealDiscriminants:
    Delta: Scalar
    G: Scalar
    H: Scalar
    K: Scalar


def compute_DGHK(coeffs) -> RealDiscriminants:
    """``Delta, G, H, K`` of ``A t^4 + B t^3 + C t^2 + D t + E``.

    ``Delta`` is (a positive multiple of) the discriminant of the derivative;
    ``G, H, K`` are the symmetric functions of the three critical values,
    scaled by powers of ``A``.  All four are polynomials in ``A..E`` and are
    evaluated as such, also for ``A = 0``.
    """
    A, B, C, D, E = (as_rational(x) for x in coeffs)
    A2 = A * A
    B2 = B * B
    C2 = C * C
    D2 = D * D
    Delta = -108 * A2 * D2 + 4 * A * C * (27 * B * D - 8 * C2) - 9 * B2 * (3 * B * D - C2)
    G = 768 * A2 * A * E - 64 * A2 * (3 * B * D + 2 * C2) + 144 * A * B2 * C - 27 * B2 * B2
    H = (
        384 * A2 * A * E * E
        - 8 * A2 * (24 * B * D * E + 16 * C2 * E - 9 * C * D2)
        + A * (144 * B2 * C * E - 3 * B2 * D2 - 40 * B * C2 * D + 8 * C2 * C2)
        - B2 * (27 * B2 * E - 9 * B * C * D + 2 * C2 * C)
    )
    K = det_K((A, B, C, D, E))
    return RealDiscriminants(Delta, G, H, K)


def _condition(dg: RealDiscriminants) -> Optional[str]:
    if dg.K >= 0 > dg.Delta:
        return "K>=0>Delta"
    if dg.G >= 0 and dg.H >= 0 and dg.K >= 0:
        return "G,H,K>=0"
    return None


def quartic_nonneg_real(coeffs) -> bool:
    """Whether a quartic with positive leading coefficient is nonnegative on R."""
    A = as_rational(coeffs[0])
    if not A > 0:
        raise ValueError(f"leading coefficient must be positive, got {A}")
    return _condition(compute_DGHK(coeffs)) is not None


def block_check(f: SymmetricQuartic, r: int) -> BlockCheck:
    rc = _restriction(f.a, f.b, f.c, f.d, f.e, r, f.n - r)
    dg = compute_DGHK(rc.quartic)
    branch = _condition(dg)
    return BlockCheck(
        r, *rc.quartic, dg.Delta, dg.G, dg.H, dg.K, branch or "fail", branch is not None
    )


def _block_witness(f: SymmetricQuartic, r: int) -> Witness:
    rc = _restriction(f.a, f.b, f.c, f.d, f.e, r, f.n - r)
    t = find_negative_point(rc.F(), Interval.real_line())
    x = (t,) * r + (1,) * (f.n - r)
    w = Witness(x, eval_point(f, x))
    if not w.value < 0:
        raise AssertionError(f"witness for block {r} does not certify: {w.value}")
    return w


def decide_real(
    f: SymmetricQuartic,
    *,
    trace: bool = True,
    exhaustive: bool = False,
    workers: Optional[int] = None,
) -> Verdict:
    """Decide ``f >= 0`` on R^n.  Every ``r = 1..n-1`` is checked."""
    records, failed = _scan.scan(
        _ones_check, f, range(1, f.n + 1), trace=trace, exhaustive=exhaustive
    )
    if failed is not None:
        return Verdict(False, f"ones-check {failed.k}", _lattice_witness(f, failed.k), records)

    recs, failed = _scan.scan(
        block_check, f, range(1, f.n), trace=trace, exhaustive=exhaustive, workers=workers
    )
    records.extend(recs)
    if failed is not None:
        return Verdict(False, f"block {failed.r}", _block_witness(f, failed.r), records)
    return Verdict(True, trace=records)
