from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qtfc.arith import (Cyclotomic, LaurentQPoly, Monomial, MultiPoly, QTPoly, as_cyclotomic,
                        cyclotomic_polynomial, multiply, q_binomial, q_integer, qt_bracket, rank,
                        row_reduce, specialize)
from qtfc.errors import DomainError

from oracles import minor_rank


@pytest.mark.parametrize("k", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(k):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(k, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(k)) == [int(c) for c in expected]


def test_cyclotomic_polynomial_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_cyclotomic_polynomial_rejects_zero():
    with pytest.raises(DomainError):
        cyclotomic_polynomial(0)


conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def field_elements(draw, k=None):
    k = draw(conductors) if k is None else k
    small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
    coeffs = draw(st.lists(small, min_size=1, max_size=k))
    return Cyclotomic(k, coeffs)


@given(conductors)
def test_zeta_has_order_k(k):
    z = Cyclotomic.zeta(k)
    assert z ** k == 1
    if k > 1:
        assert sum((z ** j for j in range(k)), Cyclotomic.rational(0, k)) == 0


@given(st.data())
@settings(max_examples=60)
def test_field_axioms(data):
    k = data.draw(conductors)
    a, b, c = (data.draw(field_elements(k)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.data())
@settings(max_examples=40)
def test_embedding_is_a_homomorphism(data):
    k = data.draw(st.sampled_from([2, 3, 4, 6]))
    a, b = data.draw(field_elements(k)), data.draw(field_elements(k))
    L = 12
    assert (a * b).embed(L) == a.embed(L) * b.embed(L)
    assert (a + b).embed(L) == a.embed(L) + b.embed(L)


def test_mixed_conductors_meet_in_common_field():
    assert Cyclotomic.zeta(4) ** 2 == -1
    assert Cyclotomic.zeta(6) ** 3 == Cyclotomic.zeta(2)
    assert (Cyclotomic.zeta(4) * Cyclotomic.zeta(6)) ** 12 == 1


def test_conjugate_of_zeta_is_inverse():
    for k in (3, 5, 8):
        z = Cyclotomic.zeta(k)
        assert z.conjugate() == z.inverse()


def test_as_cyclotomic_accepts_rationals():
    assert as_cyclotomic(Fraction(1, 2), 3) == Fraction(1, 2)
    assert as_cyclotomic(3).to_fraction() == 3


# -- polynomials ------------------------------------------------------------


def test_qt_bracket_examples():
    assert qt_bracket(1) == QTPoly.one()
    assert qt_bracket(5) == QTPoly.parse("q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4")
    assert specialize(qt_bracket(3), "t=1") == LaurentQPoly.from_coeffs([1, 1, 1])
    with pytest.raises(DomainError):
        qt_bracket(0)


@pytest.mark.parametrize("n", range(1, 51))
def test_qt_bracket_is_symmetric(n):
    b = qt_bracket(n)
    assert b.is_symmetric()
    assert b.value_at_one() == n


def test_specialize_examples():
    assert specialize(qt_bracket(5), "t=1/q") == LaurentQPoly({-4: 1, -2: 1, 0: 1, 2: 1, 4: 1})
    b2 = qt_bracket(5) + QTPoly.monomial(1, 1)
    assert specialize(b2, "t=1") == LaurentQPoly.from_coeffs([1, 2, 1, 1, 1])
    assert specialize(b2, "q=1").value_at_one() == b2.value_at_one() == 6
    with pytest.raises(DomainError):
        specialize(b2, "q=2")


qt_polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-3, 3),
                           max_size=6).map(QTPoly)


@given(qt_polys, qt_polys, qt_polys)
def test_qtpoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).swap() == a.swap() * b.swap()


@given(qt_polys)
def test_qtpoly_parse_round_trip(p):
    assert QTPoly.parse(str(p)) == p


@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_is_a_polynomial_with_binomial_value(n, k):
    if k > n:
        return
    from math import comb
    b = q_binomial(n, k)
    assert b.is_polynomial() and b.is_nonnegative()
    assert b.value_at_one() == comb(n, k)


@given(st.integers(1, 12), st.integers(1, 12))
def test_q_integer_divisibility(a, b):
    # [ab] = [a]_q [b]_{q^a}
    qb = LaurentQPoly({a * i: 1 for i in range(b)})
    assert q_integer(a) * qb == q_integer(a * b)
    assert (q_integer(a * b)).exact_div(q_integer(a)) == qb


def test_multiply_examples():
    x1, x2, y1 = MultiPoly.x(2, 1), MultiPoly.x(2, 2), MultiPoly.y(2, 1)
    one = MultiPoly.one(2)
    assert multiply(x1, one) == x1
    assert multiply(x1, y1).bidegree == (1, 1)
    assert multiply(x1 - x2, x1 + x2) == x1 * x1 - x2 * x2


@st.composite
def multipolys(draw):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
        st.integers(-3, 3), max_size=4))
    return MultiPoly(2, {Monomial(e[:2], e[2:]): c for e, c in terms.items()})


@given(multipolys(), multipolys(), multipolys())
@settings(max_examples=60)
def test_multipoly_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


def test_row_reduce_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[1, 1], [2, 2]]) == 1
    z = Cyclotomic.zeta(4)
    r, basis, pivots = row_reduce([[1, z], [z, -1]])
    assert r == 1 and pivots == [0]


def test_row_reduce_rejects_mixed_conductors():
    with pytest.raises(DomainError):
        row_reduce([[Cyclotomic.zeta(3), 1], [Cyclotomic.zeta(4), 1]])


@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_matches_minor_oracle(rows):
    assert rank(rows) == minor_rank(rows)


@given(st.lists(st.lists(st.integers(-1, 1), min_size=3, max_size=3), min_size=1, max_size=3),
       st.integers(0, 5))
@settings(max_examples=60)
def test_cyclotomic_rank_invariant_under_scaling(rows, power):
    z = Cyclotomic.zeta(6, power)
    base = rank([[Cyclotomic.rational(v, 6) for v in r] for r in rows])
    scaled = [[z * v for v in r] for r in rows]
    assert rank(scaled) == base
