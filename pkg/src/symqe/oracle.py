"""Reference deciders and falsifiers, independent of the discriminant systems.

The reference deciders reduce the n-variate question to the two-block
restrictions ``f(u*1_r, v*1_s, 0)`` (all ``r + s <= n`` for the orthant, all
``r + s = n`` for R^n) and settle each one with an exact Sturm-based
nonnegativity test.  That is O(n^2) resp. O(n) univariate checks and shares
none of the discriminant formulas with :mod:`qe_plus` / :mod:`qe_real`.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Literal, Optional, Sequence

from .algebra import Interval, Scalar, as_rational, nonneg_on
from .symquartic import SymmetricQuartic, eval_ones, eval_point, restriction_poly

__all__ = [
    "enumerate_compositions",
    "iter_compositions",
    "decide_orthant_reference",
    "decide_real_reference",
    "sample_falsify",
    "elementary_symmetric",
    "elementary_symmetric_nonneg",
]


def iter_compositions(p_bar: int, q: int, variant: str = "exact-sum") -> Iterator[tuple[int, ...]]:
    """Compositions with ``p_bar`` positive parts, in lexicographic order.

    ``variant="exact-sum"``: parts sum to ``q``; ``"at-most-sum"``: to at most ``q``.
    """
    if p_bar < 1 or q < 1:
        raise ValueError(f"need p_bar >= 1 and q >= 1, got ({p_bar}, {q})")
    if variant not in ("exact-sum", "at-most-sum"):
        raise ValueError(f"unknown variant {variant!r}")

    def rec(prefix: tuple[int, ...], left: int, remaining: int):
        if left == 0:
            if variant == "at-most-sum" or remaining == 0:
                yield prefix
            return
        # each of the other left-1 parts needs at least 1
        for part in range(1, remaining - (left - 1) + 1):
            yield from rec(prefix + (part,), left - 1, remaining - part)

    yield from rec((), p_bar, q)


def enumerate_compositions(
    p_bar: int, q: int, variant: Literal["exact-sum", "at-most-sum"] = "exact-sum"
) -> list[tuple[int, ...]]:
    return list(iter_compositions(p_bar, q, variant))


def decide_orthant_reference(f: SymmetricQuartic) -> bool:
    """Orthant nonnegativity by brute force over all block pairs ``r + s <= n``.

    By homogeneity ``f(u*1_r, v*1_s, 0) >= 0`` for ``u, v >= 0`` iff
    ``f_{r,s} >= 0`` on ``[0, inf)`` and ``f(1_r, 0) >= 0``.
    """
    n = f.n
    if any(eval_ones(f, r) < 0 for r in range(1, n + 1)):
        return False
    half = Interval.nonnegative()
    for r, s in iter_compositions(2, n, "at-most-sum"):
        if not nonneg_on(restriction_poly(f, r, s), half):
            return False
    return True


def decide_real_reference(f: SymmetricQuartic) -> bool:
    """Nonnegativity on R^n from the restrictions ``f(t*1_r, 1_{n-r})``, ``r <= n/2``.

    The other half follows by swapping the two blocks.  Points with the second
    block zero are the leading coefficient ``f(1_r, 0)``, which the
    nonnegativity test on R already forces to be ``>= 0``.
    """
    line = Interval.real_line()
    for r in range(1, f.n // 2 + 1):
        if not nonneg_on(restriction_poly(f, r, f.n - r), line):
            return False
    return True


def _random_rational(rng: random.Random, lo: int, hi: int, max_den: int) -> Scalar:
    den = rng.randint(1, max_den)
    return as_rational(Fraction(rng.randint(lo * den, hi * den), den))


def sample_falsify(
    f: SymmetricQuartic,
    domain: Literal["orthant", "real"] = "orthant",
    trials: int = 1000,
    seed: int = 0,
    *,
    max_abs: int = 4,
    max_den: int = 12,
) -> Optional[tuple[Scalar, ...]]:
    """First of ``trials`` seeded random rational points with ``f < 0``, else ``None``.

    Coordinates are ``p/q`` with ``q <= max_den`` and ``|p/q| <= max_abs``
    (nonnegative for the orthant).  Evaluation is exact.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if domain not in ("orthant", "real"):
        raise ValueError(f"unknown domain {domain!r}")
    rng = random.Random(seed)
    lo = 0 if domain == "orthant" else -max_abs
    for _ in range(trials):
        x = tuple(_random_rational(rng, lo, max_abs, max_den) for _ in range(f.n))
        if eval_point(f, x) < 0:
            return x
    return None


def elementary_symmetric(u: Sequence) -> list[Scalar]:
    """``[e_1(u), ..., e_m(u)]`` from the expansion of ``prod(1 + u_i z)``."""
    e: list[Scalar] = [1]
    for x in u:
        x = as_rational(x)
        e = [1] + [e[k] + x * e[k - 1] for k in range(1, len(e))] + [x * e[-1]]
    return [as_rational(v) for v in e[1:]]


def elementary_symmetric_nonneg(u: Sequence) -> bool:
    """All of ``e_1(u), ..., e_m(u)`` are ``>= 0``; equivalent to ``u >= 0`` coordinatewise."""
    if len(u) < 1:
        raise ValueError("need at least one entry")
    return all(v >= 0 for v in elementary_symmetric(u))

