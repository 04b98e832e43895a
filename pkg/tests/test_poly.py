from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from toricode.errors import OrderMismatch, ResourceGuard
from toricode.gfq import Field
from toricode.poly import (MonomialOrder, Ring, buchberger, eliminate, format_polynomial,
                           ideal_equal, is_homogeneous_binomial, minimal_generators,
                           normal_form, saturate, to_binomial)
from instances import BETA_H2

F11 = Field(11)
S4 = Ring.standard(F11, 4)


def x(i, ring=S4):
    return ring.var(i)


def paper_ideal():
    return [to_binomial((5, 0, -5, 0), S4), to_binomial((2, 1, 0, -1), S4)]


def test_to_binomial():
    assert str(to_binomial((2, 1, 0, -1), S4)) == "x_1^2*x_2 - x_4"
    assert to_binomial((0, 0, 0, 0), S4).is_zero()
    assert str(to_binomial((-5, 0, 5, 0), S4)) == "-x_1^5 + x_3^5"
    assert str(to_binomial((-5, 0, 5, 0), S4).monic()) == "x_1^5 - x_3^5"


def test_formatting():
    F2 = Field(2)
    R = Ring.standard(F2, 4)
    assert str(R.binomial((1, 0, 0, 0), (0, 0, 1, 0))) == "x_1 + x_3"
    F4 = Field(4)
    R = Ring.standard(F4, 2)
    f = R.var(0) * 2 + R.one()
    assert format_polynomial(f) == "g^1*x_1 + 1"
    assert str(S4.zero()) == "0"


def test_order_validation():
    with pytest.raises(OrderMismatch):
        MonomialOrder([0, 0, 1])
    with pytest.raises(OrderMismatch):
        Ring(F11, ["a", "b"], [0])


def test_lex_order_permutation():
    R = Ring(F11, ["x", "y", "z"], [1, 0, 2])   # y > x > z
    f = R.var(0) + R.var(1)
    assert f.lm == (0, 1, 0)
    assert R.order_string() == "y > x > z"


def test_buchberger_hand_example():
    R = Ring.standard(F11, 3)
    a, b, c = R.var(0), R.var(1), R.var(2)
    G = buchberger([a - b, b - c], R)
    assert [str(g) for g in G] == ["x_2 - x_3", "x_1 - x_3"]


def test_buchberger_trivial_cases():
    f = to_binomial((2, 1, 0, -1), S4)
    assert list(buchberger([f])) == [f]
    g = f * (x(0) + x(2))
    assert list(buchberger([f, g])) == [f]


def test_normal_form():
    G = buchberger(paper_ideal())
    for g in G:
        assert normal_form(g, G).is_zero()
    assert normal_form(to_binomial((5, 0, -5, 0), S4), G).is_zero()
    assert normal_form(x(0), G) == x(0)


def test_eliminate():
    R = Ring(F11, ["x", "y", "z"], [1, 0, 2])
    X, Y, Z = R.var(0), R.var(1), R.var(2)
    out = eliminate([X - Y, Y - Z], [1], R)
    assert out == [X - Z]
    assert eliminate([X - Y, Y - Z], [], R) == list(buchberger([X - Y, Y - Z], R))
    with pytest.raises(OrderMismatch):
        eliminate([X - Y, Y - Z], [2], R)


def test_saturate():
    # <x_1 x_2 - x_1 x_3> : x_1^inf = <x_2 - x_3>
    R = Ring.standard(F11, 3)
    a, b, c = R.var(0), R.var(1), R.var(2)
    assert saturate([a * b - a * c], a) == [b - c]


def test_resource_guard():
    with pytest.raises(ResourceGuard):
        buchberger(paper_ideal(), S4, max_size=2)


def test_ideal_equal_and_minimal_generators():
    G = list(buchberger(paper_ideal()))
    assert len(G) == 6
    assert ideal_equal(G, paper_ideal())
    assert not ideal_equal(G[:1], paper_ideal())
    mins = minimal_generators(G)
    assert [str(g) for g in mins] == ["x_1^2*x_2 - x_4", "x_1^5 - x_3^5"]


def test_homogeneous_binomial():
    assert is_homogeneous_binomial((2, 1, 0, 0), (0, 0, 0, 1), BETA_H2)
    assert is_homogeneous_binomial((5, 0, 0, 0), (0, 0, 5, 0), BETA_H2)
    assert not is_homogeneous_binomial((1, 0, 0, 0), (0, 1, 0, 0), BETA_H2)


def test_evaluate_and_map():
    f = to_binomial((2, 1, 0, -1), S4)
    assert f.evaluate((1, 1, 1, 1)) == 0
    assert f.evaluate((2, 1, 1, 1)) == 3
    R = Ring.standard(F11, 5)
    g = f.map_to(R, [0, 1, 2, 4])
    assert str(g) == "x_1^2*x_2 - x_5"


exps = st.tuples(*[st.integers(0, 2)] * 3)
F5 = Field(5)
R3 = Ring.standard(F5, 3)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(exps, st.integers(1, 4), min_size=1, max_size=3))
    return R3.from_dict(terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(), min_size=1, max_size=3))
def test_groebner_invariants(gens):
    G = buchberger(gens, R3)
    for g in G:
        assert g.lc == 1
    leads = G.leading_exponents()
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i != j:
                assert not all(u <= v for u, v in zip(a, b))
    for f in gens:
        assert G.contains(f)
    # S-polynomials reduce to zero: every product g_i * m for small m stays inside
    for g, h in product(G.polys, repeat=2):
        assert G.contains(g * h)
    # the basis is the same whatever order the generators come in
    assert buchberger(list(reversed(gens)), R3).polys == G.polys


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(), min_size=1, max_size=3))
def test_groebner_basis_generates_ideal(gens):
    G = buchberger(gens, R3)
    assert buchberger(G.polys, R3).polys == G.polys
    assert ideal_equal(G.polys, gens, R3)


def test_strategies_agree():
    R = Ring(F11, ["x", "y", "z"], [2, 0, 1])
    X, Y, Z = R.var(0), R.var(1), R.var(2)
    gens = [X * Y - Z * Z, Y * Z - X, X * X * Z - Y]
    assert buchberger(gens, R).polys == buchberger(gens, R, strategy="sugar").polys
    with pytest.raises(ValueError):
        buchberger(gens, R, strategy="fastest")


@settings(max_examples=30, deadline=None)
@given(st.lists(polys(), min_size=1, max_size=3))
def test_strategies_agree_on_random_ideals(gens):
    assert buchberger(gens, R3).polys == buchberger(gens, R3, strategy="sugar").polys
