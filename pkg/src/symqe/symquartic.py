"""Symmetric quartic and cubic forms in the power-sum basis.

A quartic form is stored as ``(n; a, b, c, d, e)`` meaning

    f = a*P4 + b*P3*P1 + c*P2**2 + d*P2*P1**2 + e*P1**4,

with ``Pk = x1**k + ... + xn**k``.  The monomial symmetric basis
``M4, M31, M22, M211, M1111`` is only a conversion at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Poly, Scalar, as_rational

__all__ = [
    "SymmetricQuartic",
    "MonomialQuartic",
    "SymmetricCubic",
    "RestrictionCoeffs",
    "from_monomial",
    "to_monomial",
    "eval_point",
    "eval_ones",
    "eval_one_minus_one",
    "restriction",
    "restriction_poly",
    "derivative_quotient",
]


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return n


@dataclass(frozen=True)
class SymmetricQuartic:
    n: int
    a: Scalar = 0
    b: Scalar = 0
    c: Scalar = 0
    d: Scalar = 0
    e: Scalar = 0

    def __post_init__(self):
        _check_n(self.n)
        for name in "abcde":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence) -> "SymmetricQuartic":
        if len(coeffs) != 5:
            raise ValueError(f"a quartic needs 5 coefficients, got {len(coeffs)}")
        return cls(n, *coeffs)

    @property
    def coeffs(self) -> tuple[Scalar, Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d, self.e)

    def with_n(self, n: int) -> "SymmetricQuartic":
        return SymmetricQuartic(n, *self.coeffs)

    def __call__(self, x: Sequence) -> Scalar:
        return eval_point(self, x)

    def __str__(self) -> str:
        return f"SymmetricQuartic(n={self.n}; " + ", ".join(map(str, self.coeffs)) + ")"


@dataclass(frozen=True)
class MonomialQuartic:
    """Coefficients of ``M4, M31, M22, M211, M1111``."""

    n: int
    alpha: Scalar = 0
    beta: Scalar = 0
    gamma: Scalar = 0
    delta: Scalar = 0
    epsilon: Scalar = 0

    def __post_init__(self):
        _check_n(self.n)
        for name in ("alpha", "beta", "gamma", "delta", "epsilon"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.epsilon)


@dataclass(frozen=True)
class SymmetricCubic:
    """``a3*P3 + a21*P2*P1 + a111*P1**3``."""

    n: int
    a3: Scalar = 0
    a21: Scalar = 0
    a111: Scalar = 0

    def __post_init__(self):
        _check_n(self.n)
        for name in ("a3", "a21", "a111"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.a3, self.a21, self.a111)

    def eval_ones(self, k: int) -> Scalar:
        if not 1 <= k <= self.n:
            raise ValueError(f"k must lie in 1..{self.n}, got {k}")
        return k * (self.a3 + k * (self.a21 + k * self.a111))

    def __call__(self, x: Sequence) -> Scalar:
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(x)}")
        x = [as_rational(v) for v in x]
        p1 = sum(x)
        p2 = sum(v * v for v in x)
        p3 = sum(v * v * v for v in x)
        return as_rational(self.a3 * p3 + self.a21 * p2 * p1 + self.a111 * p1**3)


@dataclass(frozen=True)
class RestrictionCoeffs:
    """Coefficients of ``f_{r,s}(t) = f(t*1_r, 1_s, 0)`` and of its partner quadratic.

    ``A..E`` are the quartic's coefficients (``t**4`` first); ``alpha, beta,
    gamma`` those of ``(df/dx_1 - df/dx_{r+1}) / (t - 1)`` along the same line.
    """

    r: int
    s: int
    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar
    E: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    Delta: Scalar = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "Delta", self.beta * self.beta - 4 * self.alpha * self.gamma)

    @property
    def quartic(self) -> tuple[Scalar, Scalar, Scalar, Scalar, Scalar]:
        return (self.A, self.B, self.C, self.D, self.E)

    @property
    def quadratic(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.alpha, self.beta, self.gamma)

    def F(self) -> Poly:
        return Poly.from_desc(self.quartic)

    def g(self) -> Poly:
        return Poly.from_desc(self.quadratic)


# rows of the monomial -> power-sum change of basis
_FROM_MONOMIAL = (
    (1, -1, Fraction(-1, 2), 1, Fraction(-1, 4)),
    (0, 1, 0, -1, Fraction(1, 3)),
    (0, 0, Fraction(1, 2), Fraction(-1, 2), Fraction(1, 8)),
    (0, 0, 0, Fraction(1, 2), Fraction(-1, 4)),
    (0, 0, 0, 0, Fraction(1, 24)),
)


def from_monomial(m: MonomialQuartic) -> SymmetricQuartic:
    mc = m.coeffs
    return SymmetricQuartic(
        m.n, *(as_rational(sum(x * y for x, y in zip(row, mc))) for row in _FROM_MONOMIAL)
    )


def to_monomial(f: SymmetricQuartic) -> MonomialQuartic:
    """Inverse of :func:`from_monomial` (back substitution on the triangular matrix)."""
    out: list[Scalar] = [0] * 5
    for i in range(4, -1, -1):
        row = _FROM_MONOMIAL[i]
        rest = sum(row[j] * out[j] for j in range(i + 1, 5))
        out[i] = as_rational(Fraction(f.coeffs[i] - rest) / row[i])
    return MonomialQuartic(f.n, *out)


def eval_point(f: SymmetricQuartic, x: Sequence) -> Scalar:
    """Exact ``f(x)`` from the four power sums of ``x``."""
    if len(x) != f.n:
        raise ValueError(f"expected {f.n} coordinates, got {len(x)}")
    p1 = p2 = p3 = p4 = 0
    for v in x:
        v = as_rational(v)
        v2 = v * v
        p1 += v
        p2 += v2
        p3 += v2 * v
        p4 += v2 * v2
    val = f.a * p4 + f.b * p3 * p1 + f.c * p2 * p2 + f.d * p2 * p1 * p1 + f.e * p1**4
    return as_rational(val) if isinstance(val, Fraction) else val


def eval_ones(f: SymmetricQuartic, k: int) -> Scalar:
    """``f(1_k, 0_{n-k}) = k*(a + (b+c)*k + d*k**2 + e*k**3)``."""
    if not 1 <= k <= f.n:
        raise ValueError(f"k must lie in 1..{f.n}, got {k}")
    return k * (f.a + k * (f.b + f.c + k * (f.d + k * f.e)))


def eval_one_minus_one(f: SymmetricQuartic) -> Scalar:
    """``f(1, -1, 0_{n-2}) = 2*(a + 2c)``."""
    return 2 * (f.a + 2 * f.c)


def restriction(f: SymmetricQuartic, r: int, s: int) -> RestrictionCoeffs:
    if r < 1 or s < 1:
        raise ValueError(f"block sizes must be positive, got ({r}, {s})")
    if r + s > f.n:
        raise ValueError(f"r + s = {r + s} exceeds n = {f.n}")
    return _restriction(f.a, f.b, f.c, f.d, f.e, r, s)


def _restriction(a, b, c, d, e, r: int, s: int) -> RestrictionCoeffs:
    # no range checks; the deciders' loops call this directly
    rs = r * s
    bc = b + c
    return RestrictionCoeffs(
        r,
        s,
        r * (a + r * (bc + r * (d + r * e))),
        rs * (b + 2 * d * r + 4 * e * r * r),
        rs * (2 * c + d * (r + s) + 6 * e * rs),
        rs * (b + 2 * d * s + 4 * e * s * s),
        s * (a + s * (bc + s * (d + s * e))),
        4 * a + (3 * b + 4 * c) * r + 2 * d * r * r,
        4 * a + 3 * b * (r + s) + 4 * d * rs,
        4 * a + (3 * b + 4 * c) * s + 2 * d * s * s,
    )


def restriction_poly(f: SymmetricQuartic, r: int, s: int) -> Poly:
    """``f_{r,s}`` as a :class:`Poly`."""
    return restriction(f, r, s).F()


def derivative_quotient(f: SymmetricQuartic, r: int, s: int, t) -> Scalar:
    """Reference value of the partner quadratic at ``t``, from its unexpanded form."""
    a, b, c, d = f.a, f.b, f.c, f.d
    t = as_rational(t)
    val = (
        4 * a * (t * t + t + 1)
        + 3 * b * (t + 1) * (r * t + s)
        + 4 * c * (r * t * t + s)
        + 2 * d * (r * t + s) ** 2
    )
    return as_rational(val) if isinstance(val, Fraction) else val
