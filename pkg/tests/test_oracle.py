import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import tight_quartic, split_quartic, family_k, rationals
from oracles import elementary_brute
from symqe import SymmetricQuartic, decide_orthant, decide_real
from symqe.oracle import (
    decide_orthant_reference,
    decide_real_reference,
    elementary_symmetric,
    elementary_symmetric_nonneg,
    enumerate_compositions,
    iter_compositions,
    sample_falsify,
)


class TestCompositions:
    def test_examples(self):
        assert enumerate_compositions(2, 4) == [(1, 3), (2, 2), (3, 1)]
        assert len(enumerate_compositions(2, 6, "at-most-sum")) == 15
        assert len(enumerate_compositions(2, 6, "exact-sum")) == 5
        assert enumerate_compositions(1, 3, "at-most-sum") == [(1,), (2,), (3,)]

    def test_lexicographic(self):
        for variant in ("exact-sum", "at-most-sum"):
            out = enumerate_compositions(3, 7, variant)
            assert out == sorted(out)
            assert len(set(out)) == len(out)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            enumerate_compositions(0, 3)
        with pytest.raises(ValueError):
            enumerate_compositions(2, 3, "exact")

    def test_empty_when_too_many_parts(self):
        assert enumerate_compositions(4, 3) == []

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_counts(self, p):
        for q in range(1, 13):
            assert sum(1 for _ in iter_compositions(p, q)) == comb(q - 1, p - 1)
            assert sum(1 for _ in iter_compositions(p, q, "at-most-sum")) == comb(q, p)


class TestReference:
    def test_orthant_examples(self):
        assert decide_orthant_reference(tight_quartic(4))
        assert not decide_orthant_reference(split_quartic(4))
        assert decide_orthant_reference(split_quartic(3))
        assert decide_orthant_reference(SymmetricQuartic(3))

    def test_real_examples(self):
        assert decide_real_reference(family_k(5))
        assert not decide_real_reference(SymmetricQuartic(2, -1))
        assert decide_real_reference(SymmetricQuartic(3, 0, 0, 1))

    def test_near_boundary(self):
        # perturbations of split_quartic straddle the orthant boundary
        rng = random.Random(7)
        for _ in range(200):
            f = SymmetricQuartic(rng.randint(2, 6), *(c + rng.randint(-1, 1) for c in (24, -19, -7, 9, -1)))
            assert decide_orthant(f).decision == decide_orthant_reference(f)
            assert decide_real(f).decision == decide_real_reference(f)


class TestSampling:
    def test_split_quartic_found(self):
        x = sample_falsify(split_quartic(), "orthant", 10_000, 1)
        assert x is not None
        assert all(v >= 0 for v in x) and split_quartic()(x) < 0

    def test_nonnegative_forms(self):
        assert sample_falsify(SymmetricQuartic(3, 0, 0, 1), "real", 500, 1) is None
        assert sample_falsify(SymmetricQuartic(3), "orthant", 500, 1) is None

    def test_reproducible(self):
        f = SymmetricQuartic(3, 1, -2, 0, 0, 0)
        assert sample_falsify(f, "real", 200, 5) == sample_falsify(f, "real", 200, 5)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_falsify(split_quartic(), "orthant", 0, 1)
        with pytest.raises(ValueError):
            sample_falsify(split_quartic(), "complex", 10, 1)

    def test_witness_implies_false(self):
        rng = random.Random(3)
        for _ in range(100):
            f = SymmetricQuartic(rng.randint(2, 5), *(rng.randint(-5, 5) for _ in range(5)))
            if sample_falsify(f, "orthant", 50, 2) is not None:
                assert not decide_orthant(f).decision
            if sample_falsify(f, "real", 50, 2) is not None:
                assert not decide_real(f).decision


class TestElementary:
    def test_examples(self):
        assert elementary_symmetric_nonneg((1, 2, 3))
        assert elementary_symmetric((-1, 2)) == [1, -2]
        assert not elementary_symmetric_nonneg((-1, 2))
        assert elementary_symmetric_nonneg((0, 0, 0))
        with pytest.raises(ValueError):
            elementary_symmetric_nonneg(())

    @given(st.lists(rationals, min_size=1, max_size=6))
    def test_matches_brute(self, u):
        assert elementary_symmetric(u) == [elementary_brute(u, k) for k in range(1, len(u) + 1)]

    @given(st.lists(rationals, min_size=1, max_size=6))
    def test_nonneg_iff_entries_nonneg(self, u):
        assert elementary_symmetric_nonneg(u) == all(x >= 0 for x in u)
