from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import euclid_resultant, sqrt_sign_by_squaring
from conftest import nonzero_rationals, rationals
from symqe.algebra import (
    Interval,
    Poly,
    as_rational,
    det_K,
    determinant,
    eval_poly,
    find_negative_point,
    nonneg_on,
    resultant_quartic_quadratic,
    sign_u_plus_v_sqrt,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)

F13 = Poly.from_desc([6, -15, 12, -3, 0])  # f_{1,3} of split_quartic at n = 4


def test_as_rational():
    assert as_rational("3") == 3 and type(as_rational("3")) is int
    assert as_rational("-1/2") == Fraction(-1, 2)
    assert as_rational(Fraction(4, 2)) == 2
    for bad in ("1.5", "", "1/2/3", "x", "1e3"):
        with pytest.raises(ValueError):
            as_rational(bad)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ZeroDivisionError):
        as_rational("1/0")


class TestEval:
    def test_zero_poly(self):
        assert eval_poly(Poly(), 7) == 0

    def test_restriction_at_one_sixth(self):
        t = Fraction(1, 6)
        assert eval_poly(F13, t) == Fraction(-25, 108)
        assert eval_poly(F13, t) == 3 * t * (t - 1) ** 2 * (2 * t - 1)

    def test_double_root(self):
        assert eval_poly(F13, 1) == 0


class TestDerivative:
    def test_examples(self):
        assert Poly.monomial(1, 4).derivative() == Poly([0, 0, 0, 4])
        assert Poly([5]).derivative() == Poly()
        assert Poly([1, 0, -2, 0, 1]).derivative() == Poly([0, -4, 0, 4])


class TestPolyArithmetic:
    @given(st.lists(rationals, max_size=6), st.lists(rationals, min_size=1, max_size=4))
    def test_divmod_reconstructs(self, a, b):
        p, q = Poly(a), Poly(b)
        assume(not q.is_zero())
        quo, rem = p.divmod(q)
        assert quo * q + rem == p
        assert rem.degree < q.degree

    def test_squarefree(self):
        p = Poly([-1, 1]) ** 3 * Poly([2, 1]) ** 2 * Poly([0, 1])
        assert squarefree_part(p) == (Poly([-1, 1]) * Poly([2, 1]) * Poly([0, 1])).monic()
        parts = squarefree_decomposition(p)
        assert parts == [Poly([0, 1]), Poly([2, 1]), Poly([-1, 1])]

    def test_str(self):
        assert str(F13) == "6*t^4 - 15*t^3 + 12*t^2 - 3*t"


class TestSturm:
    def test_examples(self):
        assert sturm_count(Poly([-2, 0, 1]), Interval.positive()) == 1
        assert sturm_count(Poly([3, -24, 29]), Interval.positive()) == 2
        assert sturm_count(Poly([1, 0, 1]), Interval.real_line()) == 0

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(Poly(), Interval())

    def test_endpoints(self):
        p = Poly([0, -1, 1])  # t(t - 1)
        assert sturm_count(p, Interval.closed(0, 1)) == 2
        assert sturm_count(p, Interval.open(0, 1)) == 0
        assert sturm_count(p, Interval(0, 1, True, False)) == 1
        assert sturm_count(p, Interval(0, 1, False, True)) == 1
        assert sturm_count(p ** 3, Interval.closed(0, 1)) == 2

    @given(st.lists(st.integers(-8, 8), min_size=1, max_size=5, unique=True).map(sorted))
    def test_product_of_linear_factors(self, roots):
        p = Poly([1])
        for r in roots:
            p = p * Poly([-r, 1])
        assert sturm_count(p, Interval()) == len(roots)
        assert sturm_count(p * p, Interval()) == len(roots)
        pos = sum(1 for r in roots if r > 0)
        assert sturm_count(p, Interval.positive()) == pos


class TestNonneg:
    def test_examples(self):
        assert nonneg_on(Poly([1, 0, -2, 0, 1]), Interval())
        assert not nonneg_on(Poly([0, 0, -2, 0, 1]), Interval())
        assert not nonneg_on(F13, Interval.nonnegative())

    def test_touching_roots(self):
        sq = Poly([-1, 1]) ** 2 * Poly([2, 0, 1])
        assert nonneg_on(sq, Interval())
        assert nonneg_on(Poly([0, 1]), Interval.nonnegative())
        assert not nonneg_on(Poly([0, 1]), Interval())
        assert nonneg_on(-Poly([0, -1, 1]), Interval.closed(0, 1))
        assert nonneg_on(Poly([-1]), Interval(3, 3, True, False))
        assert not nonneg_on(Poly([-1]), Interval.closed(3, 3))

    @settings(max_examples=300)
    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(-3, 3))
    def test_against_grid(self, cs, lo):
        p = Poly(cs)
        iv = Interval(lo, None, True, False)
        grid = [lo + Fraction(k, 8) for k in range(0, 200)]
        if any(p(x) < 0 for x in grid):
            assert not nonneg_on(p, iv)
        if nonneg_on(p, iv):
            assert all(p(x) >= 0 for x in grid)


class TestFindNegative:
    def test_examples(self):
        t = find_negative_point(Poly([0, 0, -2, 0, 1]), Interval())
        assert Poly([0, 0, -2, 0, 1])(t) < 0
        t = find_negative_point(F13, Interval.nonnegative())
        assert 0 < t < Fraction(1, 2)
        t = find_negative_point(Poly([0, 0, -1]), Interval())
        assert t != 0

    def test_deterministic(self):
        p = Poly([0, 0, -2, 0, 1])
        assert find_negative_point(p, Interval()) == find_negative_point(p, Interval())

    def test_precondition(self):
        with pytest.raises(ValueError):
            find_negative_point(Poly([1, 0, 1]), Interval())

    def test_narrow_dip(self):
        # negative only on (1000/1001, 1)
        p = Poly([-1000, 1001]) * Poly([-1, 1])
        t = find_negative_point(p, Interval.positive())
        assert p(t) < 0 and Fraction(1000, 1001) < t < 1

    def test_far_interval(self):
        p = Poly([-1, 0, 0, 1])
        assert p(find_negative_point(p, Interval.open(None, -100))) < 0

    @settings(max_examples=300)
    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.sampled_from(["real", "pos"]))
    def test_witness_is_negative(self, cs, kind):
        p = Poly(cs)
        iv = Interval() if kind == "real" else Interval.positive()
        if not nonneg_on(p, iv):
            t = find_negative_point(p, iv)
            assert t in iv and p(t) < 0


class TestDeterminants:
    def test_split_quartic_resultant(self):
        assert resultant_quartic_quadratic((6, -15, 12, -3, 0), (29, -24, 3)) == -12096
        assert resultant_quartic_quadratic(F13, Poly([3, -24, 29])) == -12096

    def test_unit_g(self):
        assert resultant_quartic_quadratic((1, -1, 4, 1, -5), (0, 0, 1)) == 1
        # the 6x6 determinant is formal in deg g = 2, so a constant g picks up A^2
        assert resultant_quartic_quadratic((3, -1, 4, 1, -5), (0, 0, 1)) == 9

    def test_common_root(self):
        assert resultant_quartic_quadratic((1, 0, 0, 0, 0), (1, 0, 0)) == 0

    def test_det_K_examples(self):
        assert det_K((1, 0, -2, 0, 1)) == 0
        assert det_K((1, 0, 0, 0, 0)) == 0

    def test_generic_determinant(self):
        assert determinant([[2, 0], [0, Fraction(1, 2)]]) == 1
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([[1, 2], [2, 4]]) == 0
        assert determinant([]) == 1

    @given(st.lists(rationals, min_size=5, max_size=5), nonzero_rationals, rationals)
    def test_shared_root_resultant_vanishes(self, cubic, root, other):
        # F = (t - root) * cubic, g = (t - root) * (t - other)
        F = Poly([-root, 1]) * Poly(cubic[:4])
        g = Poly([-root, 1]) * Poly([-other, 1])
        assert resultant_quartic_quadratic(F.desc(4), g.desc(2)) == 0

    @settings(max_examples=200)
    @given(nonzero_rationals, rationals, rationals, rationals, rationals)
    def test_det_K_is_resultant_over_A(self, A, B, C, D, E):
        F = [A, B, C, D, E]
        dF = [4 * A, 3 * B, 2 * C, D]
        assert det_K(F) == euclid_resultant(F, dF) / A

    @given(nonzero_rationals, rationals, rationals, rationals, rationals, rationals, rationals)
    def test_resultant_matches_euclid(self, A, B, C, D, E, be, ga):
        al = Fraction(1)
        assert resultant_quartic_quadratic((A, B, C, D, E), (al, be, ga)) == euclid_resultant(
            [A, B, C, D, E], [al, be, ga]
        )


class TestSqrtSign:
    def test_examples(self):
        assert sign_u_plus_v_sqrt(1, 1, 4)
        assert not sign_u_plus_v_sqrt(-3, 1, 4)
        assert sign_u_plus_v_sqrt(-1, 1, 4)

    def test_negative_delta(self):
        with pytest.raises(ValueError):
            sign_u_plus_v_sqrt(1, 1, -1)

    @given(rationals, rationals, rationals.map(abs))
    def test_matches_squaring(self, u, v, delta):
        assert sign_u_plus_v_sqrt(u, v, delta) == sqrt_sign_by_squaring(u, v, delta)
