import warnings

import pytest
from hypothesis import given, strategies as st

from qtfc.arith import LaurentQPoly, QTPoly, q_integer, qt_bracket, specialize
from qtfc.combinatorics import (FilteredChain, area_genfun, chain_to_dyck, coheight_genfun_chains, cyclic_qt,
                                dihedral_qt, dyck_paths, filtered_chains, fuss_catalan, fuss_catalan_q,
                                macmahon_q, order_ideals, root_poset)
from qtfc.errors import DomainError
from qtfc.groups import build_group

from oracles import dyck_area_counts, fuss_count_type_a


def lq(text):
    return LaurentQPoly.parse(text)


def test_fuss_catalan_values():
    assert fuss_catalan(build_group("A2"), 1) == 5
    assert fuss_catalan(build_group("A2"), 2) == 12
    assert fuss_catalan(build_group("D4"), 1) == 50
    assert fuss_catalan(build_group("B4"), 2) == 495
    assert fuss_catalan(build_group("D4"), 2) == 336


def test_fuss_catalan_q_b2():
    # [6][8]/([2][4]); the value at q = 1 is 6
    value = fuss_catalan_q(build_group("B2"), 1)
    assert value == lq("1 + q^2 + 2*q^4 + q^6 + q^8")
    assert value.value_at_one() == 6


@pytest.mark.parametrize("k", [2, 3, 5, 6])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_fuss_catalan_q_cyclic(k, m):
    expected = LaurentQPoly({i * k: 1 for i in range(m + 1)})
    assert fuss_catalan_q(build_group(f"C{k}"), m) == expected


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "D4", "I2(5)", "G(3,1,2)", "G(4,1,2)", "G2"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_q_product_is_exact_and_consistent(name, m):
    g = build_group(name)
    poly = fuss_catalan_q(g, m)
    assert poly.is_polynomial() and poly.is_nonnegative()
    assert poly.value_at_one() == fuss_catalan(g, m)
    num = LaurentQPoly.one()
    for d in g.degrees:
        num = num * q_integer(d + m * g.h)
    den = LaurentQPoly.one()
    for d in g.degrees:
        den = den * q_integer(d)
    assert poly * den == num


def test_non_well_generated_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fuss_catalan(build_group("G(4,2,2)"), 1)
    assert caught


def test_dihedral_and_cyclic_closed_forms():
    for k in range(2, 9):
        assert dihedral_qt(k, 1) == qt_bracket(k + 1) + QTPoly.monomial(1, 1)
    assert dihedral_qt(4, 1).value_at_one() == 6
    assert dihedral_qt(3, 2) == qt_bracket(7) + QTPoly.monomial(1, 1) * dihedral_qt(3, 1)
    assert cyclic_qt(3, 1) == QTPoly.parse("q + t^2")
    assert cyclic_qt(2, 1) == QTPoly.parse("q + t")
    assert cyclic_qt(3, 2) == QTPoly.parse("q^2 + q*t^2 + t^4")


@pytest.mark.parametrize("k", range(3, 9))
@pytest.mark.parametrize("m", range(1, 5))
def test_dihedral_counts_and_specialization(k, m):
    poly = dihedral_qt(k, m)
    assert poly.value_at_one() * 2 * k == (2 + m * k) * (k + m * k)
    spec = specialize(poly, "t=1/q").shift(m * k)
    assert spec == fuss_catalan_q(build_group(f"I2({k})"), m)


@pytest.mark.parametrize("k", range(2, 7))
@pytest.mark.parametrize("m", range(1, 5))
def test_cyclic_specialization(k, m):
    spec = specialize(cyclic_qt(k, m), "t=1/q").shift(m * (k - 1))
    assert spec == LaurentQPoly({i * k: 1 for i in range(m + 1)})


def test_dyck_examples():
    assert [p.seq for p in dyck_paths(3, 1)] == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert area_genfun(3, 1) == lq("1 + 2*q + q^2 + q^3")
    assert area_genfun(1, 4) == LaurentQPoly.one()
    assert sum(1 for _ in dyck_paths(3, 2)) == 12
    with pytest.raises(DomainError):
        list(dyck_paths(0, 1))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 4))
def test_dyck_paths_match_oracle(n, m):
    assert area_genfun(n, m) == LaurentQPoly(dyck_area_counts(n, m))
    assert area_genfun(n, m).value_at_one() == fuss_count_type_a(n, m)
    assert macmahon_q(n, m).value_at_one() == fuss_count_type_a(n, m)
    assert all(p.is_valid() for p in dyck_paths(n, m))


def test_macmahon_small():
    assert macmahon_q(2, 1) == lq("1 + q^2")


def test_root_posets():
    a2 = root_poset("A2")
    assert a2.elements == 3
    top = a2.roots.index((1, 1))
    assert {b for a, b in a2.covers} == {top}
    g2 = root_poset("G2")
    assert sorted(g2.roots) == sorted([(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)])
    assert root_poset("B2").elements == 4
    assert root_poset("D4").elements == 12
    with pytest.raises(DomainError):
        root_poset("G3")


def test_chain_examples():
    a2 = root_poset("A2")
    ideals = order_ideals(a2)
    assert sorted(len(I) for I in ideals) == [0, 1, 1, 2, 3]
    assert coheight_genfun_chains(a2, 1) == lq("1 + 2*q + q^2 + q^3")
    chains = list(filtered_chains(a2, 2))
    assert len(chains) == 12
    assert coheight_genfun_chains(a2, 2) == lq("1 + 2*q + 3*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6")
    first = frozenset([a2.roots.index((1, 0))])
    full = frozenset(range(3))
    assert chain_to_dyck(a2, FilteredChain((first, full))).seq == (0, 2, 2)
    empty = FilteredChain((frozenset(), frozenset(), frozenset()))
    assert chain_to_dyck(a2, empty).seq == (0, 0, 0)


@pytest.mark.parametrize("kind", ["A2", "A3", "B2", "B3", "G2"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_chain_counts_are_fuss_catalan(kind, m):
    count = sum(1 for _ in filtered_chains(root_poset(kind), m))
    assert count == fuss_catalan(build_group(kind), m)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(1, 4))
def test_chain_to_dyck_is_area_preserving_bijection(n, m):
    if n == 1:
        return
    poset = root_poset(f"A{n - 1}")
    chains = list(filtered_chains(poset, m))
    images = [chain_to_dyck(poset, c) for c in chains]
    assert len(set(p.seq for p in images)) == len(chains) == fuss_count_type_a(n, m)
    assert all(p.is_valid() for p in images)
    assert all(c.weight == p.area for c, p in zip(chains, images))


@pytest.mark.parametrize("k", range(2, 9))
def test_armstrong_poset(k):
    poset = root_poset(f"ArmstrongI2({k})")
    assert len(order_ideals(poset)) == k + 2
    expected = specialize(dihedral_qt(k, 1), "t=1")
    assert coheight_genfun_chains(poset, 1) == expected
    with pytest.raises(DomainError):
        list(filtered_chains(poset, 2))


@given(st.sampled_from(["A2", "A3", "B2", "G2"]), st.integers(1, 3))
def test_chain_conditions_hold(kind, m):
    poset = root_poset(kind)
    sums = poset.sum_index()
    for ch in filtered_chains(poset, m):
        I = ch.ideals
        assert all(a <= b for a, b in zip(I, I[1:]))
        for i in range(1, m + 1):
            for j in range(1, m + 1 - i):
                for a in I[i - 1]:
                    for b in I[j - 1]:
                        r = sums[a][b]
                        assert r is None or r in I[i + j - 1]
