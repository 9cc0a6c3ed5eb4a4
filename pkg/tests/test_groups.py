import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from qtfc.arith import Cyclotomic, Monomial, MultiPoly
from qtfc.coinvariants import determinantal_basis, invariant_spanners, isotypic_dimension
from qtfc.errors import DomainError
from qtfc.groups import (apply_element, build_group, count_reflections_and_hyperplanes, det_project,
                         enumerate_elements, group_generators, parse_group, trivial_project)

from oracles import RealGroupOracle, character_dimension

MATRIX = ["A1", "A2", "A3", "B2", "B3", "D2", "D3", "D4", "I2(3)", "I2(5)", "I2(6)", "C2", "C5", "Cyclic(6)",
          "G(3,1,2)", "G(4,1,2)", "G(6,1,2)", "G(4,2,2)", "G(6,2,2)", "G(3,3,2)", "G(2,1,3)"]


def mono(x, y):
    return MultiPoly.monomial(Monomial(tuple(x), tuple(y)))


def test_named_groups():
    a2 = build_group("A2")
    assert (a2.degrees, a2.h, a2.N, a2.Nstar, a2.order) == ((2, 3), 3, 3, 3, 6)
    i25 = build_group("I2(5)")
    assert (i25.degrees, i25.h, i25.N, i25.Nstar) == ((2, 5), 5, 5, 5)
    for k in (2, 3, 7):
        c = build_group(f"Cyclic({k})")
        assert (c.degrees, c.h, c.N, c.Nstar) == ((k,), k, k - 1, 1)
        for alias in (f"C{k}", f"C {k}"):
            assert build_group(alias).degrees == c.degrees and build_group(alias).order == k


def test_orders():
    assert len(enumerate_elements(build_group("A2"))) == 6
    assert build_group("B2").order == len(enumerate_elements(build_group("B2"))) == 8
    assert len(enumerate_elements(build_group("G(4,2,2)"))) == 16


def test_reflection_counts():
    assert count_reflections_and_hyperplanes(build_group("B2")) == (4, 4)
    assert count_reflections_and_hyperplanes(build_group("G(4,1,2)")) == (10, 6)
    assert count_reflections_and_hyperplanes(build_group("C5")) == (4, 1)


@pytest.mark.parametrize("name", MATRIX)
def test_degree_identities(name):
    g = build_group(name)
    N, Nstar = count_reflections_and_hyperplanes(g)
    assert (N, Nstar) == (g.N, g.Nstar)
    assert sum(d - 1 for d in g.degrees) == N
    assert prod(g.degrees) == g.order == len(enumerate_elements(g))
    if g.well_generated:
        assert N + Nstar == g.rank * g.h


@pytest.mark.parametrize("bad", ["G(3,2,2)", "G(4,3,2)", "X2", "B0", "I2(1)", "G(0,1,2)", ""])
def test_invalid_names(bad):
    with pytest.raises(DomainError):
        build_group(bad)


def test_parse_group_forms():
    assert parse_group("B3")[:3] == (2, 1, 3)
    assert parse_group("D4")[:3] == (2, 2, 4)
    assert parse_group("I2(5)")[:3] == (5, 5, 2)


def test_transposition_and_cyclic_actions():
    a1 = build_group("A1")
    swap = [w for w in enumerate_elements(a1) if not w.is_identity()][0]
    assert apply_element(swap, MultiPoly.x(2, 1)) == MultiPoly.x(2, 2)
    assert apply_element(swap, MultiPoly.y(2, 1)) == MultiPoly.y(2, 2)
    c5 = build_group("C5")
    z = [w for w in enumerate_elements(c5) if w.phases == (1,)][0]
    assert apply_element(z, mono([3], [1])) == mono([3], [1]).scale(Cyclotomic.zeta(5, 2))


def test_projection_examples():
    a1 = build_group("A1")
    x1, x2 = MultiPoly.x(2, 1), MultiPoly.x(2, 2)
    half = Fraction(1, 2)
    assert trivial_project(a1, x1) == (x1 + x2).scale(half)
    assert det_project(a1, x1) == (x1 - x2).scale(half)
    for name in ("B2", "C3", "G(4,1,2)"):
        assert det_project(build_group(name), MultiPoly.one(build_group(name).nvars)).is_zero()
    c4 = build_group("C4")
    for a in range(6):
        for b in range(6):
            p = mono([a], [b])
            assert (trivial_project(c4, p) == p) == ((a - b) % 4 == 0)
            assert (det_project(c4, p) == p) == ((a - b) % 4 == 1)
            assert (det_project(c4, p, "swapped") == p) == ((a - b) % 4 == 3)


def random_poly(rng, nvars, total=6, terms=4):
    out = MultiPoly.zero(nvars)
    for _ in range(terms):
        d = rng.randint(0, total)
        cuts = sorted(rng.randint(0, d) for _ in range(2 * nvars - 1))
        exps = [b - a for a, b in zip([0] + cuts, cuts + [d])]
        out = out + mono(exps[:nvars], exps[nvars:]).scale(rng.randint(-3, 3))
    return out


GROUPS_FOR_PROPERTIES = ["A2", "B2", "D3", "I2(5)", "C4", "G(3,1,2)", "G(4,2,2)"]


@given(st.sampled_from(GROUPS_FOR_PROPERTIES), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_action_is_a_group_action(name, seed):
    g = build_group(name)
    rng = random.Random(seed)
    els = enumerate_elements(g)
    w1, w2 = rng.choice(els), rng.choice(els)
    p = random_poly(rng, g.nvars)
    assert apply_element(w1, apply_element(w2, p)) == apply_element(w1 * w2, p)
    assert apply_element(w1.inverse(), apply_element(w1, p)) == p


@given(st.sampled_from(GROUPS_FOR_PROPERTIES), st.integers(0, 10 ** 6), st.sampled_from(["standard", "swapped"]))
@settings(max_examples=30, deadline=None)
def test_projections_are_idempotent_and_equivariant(name, seed, orientation):
    g = build_group(name)
    rng = random.Random(seed)
    p = random_poly(rng, g.nvars)
    e = trivial_project(g, p)
    assert trivial_project(g, e) == e
    d = det_project(g, p, orientation)
    assert det_project(g, d, orientation) == d
    for w in group_generators(g):
        assert apply_element(w, e) == e
        det = w.det() if orientation == "standard" else w.det().inverse()
        assert apply_element(w, d) == d.scale(det)


def swap_xy(p: MultiPoly) -> MultiPoly:
    return MultiPoly(p.nvars, {Monomial(m.yexp, m.xexp): c for m, c in p.terms.items()})


@given(st.sampled_from(["A2", "B2", "D3", "I2(5)", "I2(6)"]), st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_projections_commute_with_xy_exchange_for_real_groups(name, seed):
    g = build_group(name)
    assert g.is_real
    p = random_poly(random.Random(seed), g.nvars)
    assert trivial_project(g, swap_xy(p)) == swap_xy(trivial_project(g, p))
    assert det_project(g, swap_xy(p)) == swap_xy(det_project(g, p))


CHARACTER_CASES = [("A2", 1, 1, 3), ("B2", 2, 1, 2), ("C4", 4, 1, 1), ("G(3,1,2)", 3, 1, 2), ("G(4,2,2)", 4, 2, 2)]


@pytest.mark.parametrize("name,k,p,n", CHARACTER_CASES)
def test_isotypic_dimensions_match_character_oracle(name, k, p, n):
    g = build_group(name)
    for total in range(7):
        for a in range(total + 1):
            b = total - a
            for s in (1, -1):
                expected = character_dimension(k, p, n, a, b, s)
                assert abs(expected.imag) < 1e-9
                dim = isotypic_dimension(g, (a, b), s)
                assert dim == round(expected.real), (a, b, s)
            assert determinantal_basis(g, (a, b)).dim == isotypic_dimension(g, (a, b), 1)
            if total:
                assert invariant_spanners(g, (a, b)).dim == round(character_dimension(k, p, n, a, b, 0).real)


@pytest.mark.parametrize("kind,n,name", [("A", 2, "A1"), ("B", 2, "B2"), ("D", 3, "D3")])
def test_determinantal_basis_matches_full_ring_oracle(kind, n, name):
    g = build_group(name)
    oracle = RealGroupOracle(kind, n)
    for a in range(4):
        for b in range(4):
            assert determinantal_basis(g, (a, b)).dim == len(oracle.isotypic(a, b))


def test_basis_examples():
    a1 = build_group("A1")
    (v,) = determinantal_basis(a1, (1, 0)).vectors
    x1, x2 = MultiPoly.x(2, 1), MultiPoly.x(2, 2)
    assert v.scale(1 / v.coefficient(Monomial((1, 0), (0, 0)))) == x1 - x2
    assert determinantal_basis(a1, (0, 0)).dim == 0
    c3 = build_group("C3")
    assert determinantal_basis(c3, (1, 0)).vectors[0].bidegree == (1, 0)
    assert [determinantal_basis(c3, (a, b)).dim for a, b in [(1, 0), (0, 1), (2, 1), (0, 2)]] == [1, 0, 1, 1]
    assert invariant_spanners(a1, (1, 1)).dim == 2
    assert invariant_spanners(c3, (1, 1)).dim == 1
