"""Exact univariate algebra over the rationals.

Everything here works on :class:`fractions.Fraction` (plain ``int`` is accepted
wherever a rational is expected and is kept as ``int`` where possible, which
keeps the hot loops of the deciders on machine-friendly integers).  No floating
point is used anywhere in this module.

The pieces are the ones the deciders and the reference oracle need:

* :class:`Poly` -- immutable dense univariate polynomial, ascending coefficients;
* :class:`Interval` -- real interval with optional infinite / open endpoints;
* Sturm root counting, exact nonnegativity on an interval and witness search;
* the two printed Sylvester-type determinants (quartic/quadratic resultant and
  the 7x7 ``K`` determinant);
* the radical-free sign test for ``u + v*sqrt(delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Scalar",
    "as_rational",
    "Poly",
    "Interval",
    "eval_poly",
    "derivative",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "cauchy_bound",
    "sturm_chain",
    "sturm_count",
    "nonneg_on",
    "find_negative_point",
    "determinant",
    "resultant_quartic_quadratic",
    "det_K",
    "sign_u_plus_v_sqrt",
]


def as_rational(x) -> Scalar:
    """Coerce ``x`` to an exact rational; integral values come back as ``int``.

    Strings are parsed as ``"p"`` or ``"p/q"``.  Floats are rejected: they
    would silently smuggle rounding into a decision path.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        s = x.strip()
        if not s or any(ch in s for ch in ".eE_") or s.count("/") > 1:
            raise ValueError(f"not an exact rational: {x!r}")
        return as_rational(Fraction(s))
    raise TypeError(f"not an exact rational: {x!r} ({type(x).__name__})")


def _div(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient; stays integral when it can."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return as_rational(Fraction(a) / b)


def _sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def from_desc(cls, coeffs: Iterable) -> "Poly":
        """Build from coefficients listed highest degree first (``A, B, ...``)."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls([0] * k + [c])

    def desc(self, degree: int) -> tuple[Scalar, ...]:
        """Coefficients highest first, zero-padded to ``degree``."""
        if self.degree > degree:
            raise ValueError(f"degree {self.degree} exceeds {degree}")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return tuple(reversed(padded))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return as_rational(acc) if isinstance(acc, Fraction) else acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else str(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out: list[Scalar] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot: list[Scalar] = [0] * (dq + 1)
        lc = other.lc
        for k in range(dq, -1, -1):
            q = _div(rem[k + other.degree], lc)
            quot[k] = q
            if q != 0:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem[: other.degree])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        return Poly(_div(c, lc) for c in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def sign_at_infinity(self, positive: bool) -> int:
        if self.is_zero():
            return 0
        s = _sign(self.lc)
        return s if positive or self.degree % 2 == 0 else -s


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


@dataclass(frozen=True)
class Interval:
    """Real interval.  ``None`` bounds are infinite (and always open)."""

    lo: Scalar | None = None
    hi: Scalar | None = None
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_rational(self.lo))
        else:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval: lower {self.lo} > upper {self.hi}")

    @classmethod
    def real_line(cls) -> "Interval":
        return cls()

    @classmethod
    def open(cls, lo=None, hi=None) -> "Interval":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, True)

    @classmethod
    def nonnegative(cls) -> "Interval":
        """``[0, +inf)``"""
        return cls(0, None, True, False)

    @classmethod
    def positive(cls) -> "Interval":
        """``(0, +inf)``"""
        return cls(0, None, False, False)

    def __contains__(self, x) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def is_empty(self) -> bool:
        return (
            self.lo is not None
            and self.hi is not None
            and self.lo == self.hi
            and not (self.lo_closed and self.hi_closed)
        )

    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi and self.lo_closed and self.hi_closed

    def __str__(self) -> str:
        left = f"[{self.lo}" if self.lo_closed else ("(-inf" if self.lo is None else f"({self.lo}")
        right = f"{self.hi}]" if self.hi_closed else ("+inf)" if self.hi is None else f"{self.hi})")
        return f"{left}, {right}"


def eval_poly(p: Poly, t) -> Scalar:
    return p(as_rational(t))


def derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')``, made monic."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def squarefree_decomposition(p: Poly) -> list[Poly]:
    """Yun's algorithm: monic ``[a1, a2, ...]`` with ``p = lc * prod(a_i**i)``.

    Each ``a_i`` is square-free and the ``a_i`` are pairwise coprime; ``a_i``
    collects exactly the roots of multiplicity ``i``.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.derivative()
    parts = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        parts.append(a.monic())
    return parts


def _odd_part(p: Poly) -> Poly:
    """Monic product of the roots of odd multiplicity of ``p`` (square-free)."""
    out = Poly([1])
    for i, a in enumerate(squarefree_decomposition(p), start=1):
        if i % 2 == 1:
            out = out * a
    return out


def cauchy_bound(p: Poly) -> Scalar:
    """``1 + max |c_i / lc|``: every complex root lies strictly inside."""
    if p.degree < 1:
        return 1
    lc = p.lc
    return 1 + max(abs(_div(c, lc)) for c in p.coeffs[:-1])


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence ``p, p', -rem(...), ...`` of ``p`` (no normalisation)."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(chain: Sequence[Poly], x) -> int:
    """Sign variations at ``x``; ``x`` is a rational or ``'-inf'``/``'+inf'``."""
    if x == "-inf":
        signs = [q.sign_at_infinity(False) for q in chain]
    elif x == "+inf":
        signs = [q.sign_at_infinity(True) for q in chain]
    else:
        signs = [_sign(q(x)) for q in chain]
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _sturm_count_sqfree(q: Poly, chain: Sequence[Poly], iv: Interval) -> int:
    # V(a) - V(b) counts the roots of a square-free q in (a, b], endpoints included
    if iv.is_empty():
        return 0
    if q.degree < 1:
        return 0
    lo = "-inf" if iv.lo is None else iv.lo
    hi = "+inf" if iv.hi is None else iv.hi
    count = _variations(chain, lo) - _variations(chain, hi)
    if iv.hi is not None and not iv.hi_closed and q(iv.hi) == 0:
        count -= 1
    if iv.lo is not None and iv.lo_closed and q(iv.lo) == 0:
        count += 1
    return count


def sturm_count(p: Poly, iv: Interval) -> int:
    """Number of distinct real roots of ``p`` in ``iv`` (multiplicity ignored)."""
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    q = squarefree_part(p)
    return _sturm_count_sqfree(q, sturm_chain(q), iv)


def _interior_samples(iv: Interval, count: int):
    """``count`` distinct rationals strictly inside ``iv`` (non-degenerate)."""
    lo, hi = iv.lo, iv.hi
    for j in range(1, count + 1):
        if lo is None and hi is None:
            yield j - 1
        elif lo is None:
            yield hi - j
        elif hi is None:
            yield lo + j
        else:
            yield lo + (hi - lo) * Fraction(j, count + 1)


def _nonneg_with_odd(p: Poly, odd: Poly, odd_chain: Sequence[Poly], iv: Interval) -> bool:
    if iv.is_empty():
        return True
    if iv.is_point():
        return p(iv.lo) >= 0
    interior = Interval.open(iv.lo, iv.hi)
    if _sturm_count_sqfree(odd, odd_chain, interior):
        return False
    # no sign change inside; the sign is read at any interior non-root
    for x in _interior_samples(interior, p.degree + 1):
        v = p(x)
        if v != 0:
            return v > 0
    raise AssertionError("unreachable: more samples than roots")


def nonneg_on(p: Poly, iv: Interval) -> bool:
    """``True`` iff ``p(t) >= 0`` for every ``t`` in ``iv``.

    Roots of odd multiplicity are separated from the rest with Yun's
    square-free decomposition; ``p`` is nonnegative on a non-degenerate
    interval exactly when no odd-multiplicity root lies in its interior and
    ``p`` is positive at some interior point that is not a root.  Closed
    endpoints need no separate check, by continuity.
    """
    if p.is_zero():
        return True
    if p.degree == 0:
        return iv.is_empty() or p.lc > 0
    odd = _odd_part(p)
    return _nonneg_with_odd(p, odd, sturm_chain(odd), iv)


def find_negative_point(p: Poly, iv: Interval) -> Scalar:
    """Deterministic rational ``t`` in ``iv`` with ``p(t) < 0``.

    Works on the open interval ``iv`` clipped to one past the Cauchy bound of
    ``p`` (beyond it the sign of ``p`` is constant).  The search bisects,
    always descending into the leftmost half that still contains a negative
    value, and returns the first midpoint where ``p`` is negative.
    """
    if iv.is_point():
        if p(iv.lo) < 0:
            return iv.lo
        raise ValueError(f"p is nonnegative on {iv}")
    if p.is_zero() or p.degree == 0 and p.lc >= 0:
        raise ValueError(f"p is nonnegative on {iv}")
    odd = _odd_part(p)
    chain = sturm_chain(odd)
    if _nonneg_with_odd(p, odd, chain, iv):
        raise ValueError(f"p is nonnegative on {iv}")

    bound = cauchy_bound(p) + 1
    lo = -bound if iv.lo is None else max(iv.lo, -bound)
    hi = bound if iv.hi is None else min(iv.hi, bound)
    if lo >= hi:
        # the interval sits entirely beyond the bound, where p has one sign
        x = next(_interior_samples(Interval.open(iv.lo, iv.hi), 1))
        if p(x) < 0:
            return x
        raise AssertionError("sign beyond the Cauchy bound is not constant")
    while True:
        mid = as_rational(Fraction(lo + hi) / 2)
        if p(mid) < 0:
            return mid
        if not _nonneg_with_odd(p, odd, chain, Interval.open(lo, mid)):
            hi = mid
        else:
            lo = mid


def determinant(rows: Sequence[Sequence]) -> Scalar:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return 1
    if all(type(x) is int for row in rows for x in row):
        return _bareiss_int([list(row) for row in rows])
    m = [[as_rational(x) for x in row] for row in rows]
    sign = 1
    prev: Scalar = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, size):
                row_i[j] = _div(row_i[j] * pivot - mik * row_k[j], prev)
        prev = pivot
    return sign * m[-1][-1]


def _bareiss_int(m: list[list[int]]) -> int:
    # every division below is exact (Sylvester's identity)
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = m[k]
        pivot = row_k[k]
        for i in range(k + 1, size):
            row_i = m[i]
            mik = row_i[k]
            if mik == 0:
                if pivot != prev:
                    for j in range(k + 1, size):
                        row_i[j] = row_i[j] * pivot // prev
            else:
                for j in range(k + 1, size):
                    row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def _coeffs(x, degree: int) -> tuple[Scalar, ...]:
    if isinstance(x, Poly):
        return x.desc(degree)
    cs = tuple(as_rational(c) for c in x)
    if len(cs) != degree + 1:
        raise ValueError(f"expected {degree + 1} coefficients, got {len(cs)}")
    return cs


def resultant_quartic_quadratic(F, g) -> Scalar:
    """The 6x6 Sylvester determinant of ``F = (A..E)`` and ``g = (alpha, beta, gamma)``.

    Either argument may be a :class:`Poly` (padded to degree 4 / 2) or a
    coefficient sequence listed highest degree first.  Vanishing leading
    coefficients are kept in place, so the value is the printed determinant
    even when ``A = 0`` or ``alpha = 0``.
    """
    A, B, C, D, E = _coeffs(F, 4)
    al, be, ga = _coeffs(g, 2)
    return determinant(
        [
            [A, B, C, D, E, 0],
            [0, A, B, C, D, E],
            [al, be, ga, 0, 0, 0],
            [0, al, be, ga, 0, 0],
            [0, 0, al, be, ga, 0],
            [0, 0, 0, al, be, ga],
        ]
    )


def det_K(F) -> Scalar:
    """``K = R(F, F') / A`` as the 7x7 determinant with first column ``(1,0,0,4,0,0,0)``.

    Being a plain determinant it stays defined for ``A = 0``.
    """
    A, B, C, D, E = _coeffs(F, 4)
    return determinant(
        [
            [1, B, C, D, E, 0, 0],
            [0, A, B, C, D, E, 0],
            [0, 0, A, B, C, D, E],
            [4, 3 * B, 2 * C, D, 0, 0, 0],
            [0, 4 * A, 3 * B, 2 * C, D, 0, 0],
            [0, 0, 4 * A, 3 * B, 2 * C, D, 0],
            [0, 0, 0, 4 * A, 3 * B, 2 * C, D],
        ]
    )


def sign_u_plus_v_sqrt(u, v, delta) -> bool:
    """Decide ``u + v*sqrt(delta) >= 0`` without taking the root.

    With ``rho = u**2 - v**2 * delta`` this holds iff ``u, v >= 0``, or
    ``rho >= 0`` and ``u >= 0``, or ``rho <= 0 <= v``.
    """
    if delta < 0:
        raise ValueError(f"delta must be nonnegative, got {delta}")
    rho = u * u - v * v * delta
    return (u >= 0 and v >= 0) or (rho >= 0 and u >= 0) or (rho <= 0 <= v)
