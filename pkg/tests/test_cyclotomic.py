from __future__ import annotations

import sympy
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, Symbol

from butson.cyclotomic import (
    CycInt,
    OrderMismatch,
    cyclotomic_poly,
    equals_integer,
    is_zero,
    norm_sq,
    poly_mul,
    root,
)
from oracles import numeric_value


def cyc(m, *coeffs):
    return CycInt(m, coeffs)


class TestRoots:
    def test_i_squared(self):
        assert (root(4, 1) * root(4, 1)).equals(root(4, 2))
        assert (root(4, 1) * root(4, 1)).coeffs == root(4, 2).coeffs

    def test_conj(self):
        assert root(3, 1).conj() == root(3, 2)

    def test_rescale(self):
        assert root(3, 1).rescale(12) == root(12, 4)

    def test_rescale_needs_multiple(self):
        with pytest.raises(OrderMismatch):
            root(3, 1).rescale(10)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            root(3, 1) + root(4, 1)

    def test_length_checked(self):
        with pytest.raises(ValueError):
            CycInt(4, (1, 2))


class TestCyclotomicPoly:
    def test_small(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(6) == (1, -1, 1)
        assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)

    @pytest.mark.parametrize("m", range(1, 101))
    def test_product_identity(self, m):
        prod = [1]
        for d in sympy.divisors(m):
            prod = poly_mul(prod, cyclotomic_poly(d))
        assert prod == [-1] + [0] * (m - 1) + [1]

    @pytest.mark.parametrize("m", [1, 2, 7, 12, 15, 30, 36, 60, 99, 105])
    def test_matches_sympy(self, m):
        x = Symbol("x")
        expected = Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
        assert list(cyclotomic_poly(m)) == [int(c) for c in expected]
        assert len(cyclotomic_poly(m)) - 1 == sympy.totient(m)


class TestZero:
    def test_full_cube_root_sum(self):
        assert is_zero(cyc(3, 1, 1, 1))

    def test_not_zero(self):
        assert not is_zero(cyc(3, 5, 2, 2))

    def test_i_plus_minus_i(self):
        assert is_zero(cyc(4, 0, 1, 0, 1))

    @pytest.mark.parametrize("p", list(sympy.primerange(2, 24)))
    def test_prime_sums(self, p):
        assert is_zero(CycInt(p, (1,) * p))
        assert not is_zero(CycInt(p, (1,) * (p - 1) + (0,)))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 8), st.data())
    def test_agrees_with_numeric_evaluation(self, m, data):
        coeffs = data.draw(st.lists(st.integers(-1, 1), min_size=m, max_size=m))
        z = CycInt(m, tuple(coeffs))
        # nonzero algebraic integers here have modulus well above 1e-6
        assert is_zero(z) == (abs(numeric_value(coeffs, m)) < 1e-6)


class TestNorm:
    def test_norm_of_5_2_2(self):
        z = cyc(3, 5, 2, 2)
        assert equals_integer(norm_sq(z), 9)

    @pytest.mark.parametrize("m,k", [(1, 0), (4, 3), (12, 7), (9, 2)])
    def test_roots_have_norm_one(self, m, k):
        assert equals_integer(norm_sq(root(m, k)), 1)

    def test_minus_one(self):
        assert equals_integer(root(4, 2), -1)


def cycints(m):
    return st.lists(st.integers(-20, 20), min_size=m, max_size=m).map(lambda c: CycInt(m, tuple(c)))


@st.composite
def triples(draw):
    m = draw(st.integers(1, 24))
    return draw(cycints(m)), draw(cycints(m)), draw(cycints(m))


class TestRingLaws:
    @settings(max_examples=150, deadline=None)
    @given(triples())
    def test_commutative_associative(self, t):
        x, y, z = t
        assert is_zero(x * y - y * x)
        assert is_zero((x * y) * z - x * (y * z))
        assert is_zero(x * (y + z) - (x * y + x * z))

    @settings(max_examples=150, deadline=None)
    @given(triples())
    def test_conjugation(self, t):
        x, y, _ = t
        assert is_zero(x.conj().conj() - x)
        assert is_zero(norm_sq(x) - norm_sq(x.conj()))
        assert is_zero((x * y).conj() - x.conj() * y.conj())

    @settings(max_examples=100, deadline=None)
    @given(triples(), st.integers(1, 4))
    def test_rescale_is_a_ring_map(self, t, k):
        x, y, _ = t
        m = x.order * k
        assert is_zero((x * y).rescale(m) - x.rescale(m) * y.rescale(m))
        assert is_zero(x.rescale(m)) == is_zero(x)
