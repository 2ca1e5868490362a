"""Nonnegativity of a symmetric quartic on the nonnegative orthant, in O(n) checks.

Three stages:

1. ``f(1_k, 0) >= 0`` for ``k = 1..n``;
2. if moreover ``f(1, -1, 0) <= 0`` the answer is already ``True``;
3. otherwise a sign condition on ``(alpha, beta, gamma, Delta, P, Q, R)`` is
   checked for each block pair ``(r, s)`` of :func:`build_Z`.

A failed check yields an exact point of the orthant where ``f < 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import _scan
from .algebra import Interval, Scalar, find_negative_point, resultant_quartic_quadratic
from .symquartic import (
    RestrictionCoeffs,
    SymmetricCubic,
    SymmetricQuartic,
    _restriction,
    eval_one_minus_one,
    eval_ones,
    eval_point,
)
from .verdict import OneMinusOneCheck, OnesCheck, PairCheck, Verdict, Witness

__all__ = [
    "PQRTriple",
    "iter_Z",
    "build_Z",
    "compute_PQR",
    "check_discriminant_pair",
    "pair_check",
    "decide_orthant",
    "decide_orthant_cubic",
    "cubic_verdict",
]


@dataclass(frozen=True)
class PQRTriple:
    P: Scalar
    Q: Scalar
    R: Scalar


def iter_Z(f: SymmetricQuartic) -> Iterator[tuple[int, int]]:
    """Lazy :func:`build_Z`; constant memory."""
    n = f.n
    for k in range(1, n):
        yield (k, 1)
    for k in range(2, n):
        yield (1, k)
    if f.a > 0 > f.b:
        for k in range(2, n - 1):
            yield (k, n - k)


def build_Z(f: SymmetricQuartic) -> list[tuple[int, int]]:
    """Block pairs whose restrictions decide the orthant problem.

    ``(k,1)`` for ascending ``k``, then ``(1,k)`` for ``k >= 2``, then, only
    when ``a > 0 > b``, the pairs ``(k, n-k)`` not already listed.
    """
    return list(iter_Z(f))


def compute_PQR(rc: RestrictionCoeffs) -> PQRTriple:
    """``P, Q`` with ``2*alpha**4 * F((-beta +- sqrt(Delta)) / (2*alpha)) = P +- Q*sqrt(Delta)``,
    and ``R`` the resultant of ``F`` and ``g``."""
    A, B, C, D, E = rc.quartic
    al, be, ga = rc.quadratic
    al2 = al * al
    be2 = be * be
    alga = al * ga
    P = (
        A * (be2 * be2 - 4 * be2 * alga + 2 * alga * alga)
        - B * be * al * (be2 - 3 * alga)
        + C * al2 * (be2 - 2 * alga)
        - D * be * al2 * al
        + 2 * E * al2 * al2
    )
    Q = -A * be * (be2 - 2 * alga) + B * al * (be2 - alga) - C * be * al2 + D * al2 * al
    R = resultant_quartic_quadratic(rc.quartic, rc.quadratic)
    return PQRTriple(P, Q, R)


def _discriminant_lines(rc: RestrictionCoeffs, pqr: PQRTriple) -> bool:
    al, be, ga = rc.quadratic
    P, Q, R = pqr.P, pqr.Q, pqr.R
    plus_root = (
        (al <= 0 and be <= 0)
        or (be >= 0 and ga >= 0)
        or (P >= 0 and Q >= 0)
        or (R >= 0 and P >= 0)
        or (R <= 0 <= Q)
    )
    minus_root = (
        (al >= 0 and be >= 0)
        or (be <= 0 and ga <= 0)
        or (P >= 0 >= Q)
        or (R >= 0 and P >= 0)
        or (R <= 0 and Q <= 0)
    )
    return plus_root and minus_root


def _classify(rc: RestrictionCoeffs, pqr: Optional[PQRTriple]):
    """``(passed, branch, pqr)``; ``pqr`` is computed only if a branch needs it."""
    al, be, ga = rc.quadratic
    if al == 0:
        return True, "alpha=0", pqr
    if rc.Delta < 0:
        return True, "Delta<0", pqr
    if be == 0:
        return True, "beta=0", pqr
    if al >= 0 and be >= 0 and ga >= 0:
        return True, "all>=0", pqr
    if al <= 0 and be <= 0 and ga <= 0:
        return True, "all<=0", pqr
    if pqr is None:
        pqr = compute_PQR(rc)
    if pqr.P >= 0 and pqr.R >= 0:
        return True, "P,R>=0", pqr
    if _discriminant_lines(rc, pqr):
        return True, "discriminants", pqr
    return False, "fail", pqr


def check_discriminant_pair(rc: RestrictionCoeffs, pqr: Optional[PQRTriple] = None) -> bool:
    """Whether the pair passes: trivially when ``alpha = 0`` or ``Delta < 0``,
    through a shortcut when one applies, else by the two sign-condition lines."""
    return _classify(rc, pqr)[0]


def pair_check(f: SymmetricQuartic, pair: tuple[int, int]) -> PairCheck:
    r, s = pair
    rc = _restriction(f.a, f.b, f.c, f.d, f.e, r, s)
    passed, branch, pqr = _classify(rc, None)
    P, Q, R = (pqr.P, pqr.Q, pqr.R) if pqr is not None else (None, None, None)
    return PairCheck(r, s, rc.alpha, rc.beta, rc.gamma, rc.Delta, P, Q, R, branch, passed)


def _ones_check(f: SymmetricQuartic, k: int) -> OnesCheck:
    v = eval_ones(f, k)
    return OnesCheck(k, v, v >= 0)


def _lattice_witness(f: SymmetricQuartic, k: int) -> Witness:
    x = (1,) * k + (0,) * (f.n - k)
    return Witness(x, eval_point(f, x))


def _pair_witness(f: SymmetricQuartic, r: int, s: int) -> Witness:
    rc = _restriction(f.a, f.b, f.c, f.d, f.e, r, s)
    t = find_negative_point(rc.F(), Interval.positive())
    x = (t,) * r + (1,) * s + (0,) * (f.n - r - s)
    w = Witness(x, eval_point(f, x))
    if not w.value < 0:
        raise AssertionError(f"witness for pair ({r},{s}) does not certify: {w.value}")
    return w


def decide_orthant(
    f: SymmetricQuartic,
    *,
    trace: bool = True,
    exhaustive: bool = False,
    workers: Optional[int] = None,
    pairs: Optional[Iterable[tuple[int, int]]] = None,
) -> Verdict:
    """Decide ``f >= 0`` on the nonnegative orthant.

    ``exhaustive`` keeps checking after the first failure inside a stage (the
    decision and ``failing_stage`` are unchanged; only the trace grows).
    ``pairs`` replaces the block pairs of :func:`build_Z`, for experiments.
    """
    records, failed = _scan.scan(
        _ones_check, f, range(1, f.n + 1), trace=trace, exhaustive=exhaustive
    )
    if failed is not None:
        return Verdict(False, f"ones-check {failed.k}", _lattice_witness(f, failed.k), records)

    v = eval_one_minus_one(f)
    settles = v <= 0
    if trace:
        records.append(OneMinusOneCheck(v, settles))
    if settles:
        return Verdict(True, trace=records)

    pair_iter = iter_Z(f) if pairs is None else pairs
    recs, failed = _scan.scan(
        pair_check, f, pair_iter, trace=trace, exhaustive=exhaustive, workers=workers
    )
    records.extend(recs)
    if failed is not None:
        witness = _pair_witness(f, failed.r, failed.s)
        return Verdict(False, f"pair ({failed.r},{failed.s})", witness, records)
    return Verdict(True, trace=records)


def cubic_verdict(f: SymmetricCubic, *, trace: bool = True) -> Verdict:
    records = []
    for k in range(1, f.n + 1):
        v = f.eval_ones(k)
        rec = OnesCheck(k, v, v >= 0)
        if trace:
            records.append(rec)
        if not rec.passed:
            x = (1,) * k + (0,) * (f.n - k)
            return Verdict(False, f"ones-check {k}", Witness(x, f(x)), records)
    return Verdict(True, trace=records)


def decide_orthant_cubic(f: SymmetricCubic) -> bool:
    """For cubics the lattice points ``(1_k, 0)`` alone decide the orthant question."""
    return cubic_verdict(f, trace=False).decision
