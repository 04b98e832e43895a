from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from toricode.errors import (DimensionMismatch, ExactnessFailure, RankDeficient,
                             TorsionClassGroup)
from toricode.fourier import cone_is_trivial, integer_bounds, variable_bounds
from toricode.intlat import snf_diagonal
from toricode.toric import degree_of, derive_beta, validate
from instances import BETA_H2, FANS, H2, P1


def test_derive_beta_h2():
    beta = derive_beta(H2)
    assert beta.tolist() == [[1, -2, 1, 0], [0, 1, 0, 1]]
    assert (beta @ validate(11, H2, [[1, 2, 3, 4]]).phi).is_zero()


@pytest.mark.parametrize("phi", FANS)
def test_derived_beta_is_exact(phi):
    inst = validate(5, phi, [[1] * len(phi)])
    assert inst.complete
    assert (inst.beta @ inst.phi).is_zero()
    assert snf_diagonal(inst.beta) == [1] * inst.d


def test_torsion_rejected():
    with pytest.raises(TorsionClassGroup):
        validate(5, [[2, 0], [0, 1], [-2, -1]], [[1, 1, 1]])


def test_rank_deficient():
    with pytest.raises(RankDeficient):
        validate(5, [[1, 2], [2, 4], [3, 6]], [[1, 1, 1]])


def test_supplied_beta_checks():
    inst = validate(11, H2, [[1, 2, 3, 4]], BETA_H2)
    assert inst.beta_supplied
    with pytest.raises(ExactnessFailure):
        validate(11, H2, [[1, 2, 3, 4]], [[1, 0, 0, 0], [0, 1, 0, 1]])
    with pytest.raises(ExactnessFailure):
        validate(11, H2, [[1, 2, 3, 4]], [[2, -4, 2, 0], [0, 1, 0, 1]])
    with pytest.raises(DimensionMismatch):
        validate(11, H2, [[1, 2, 3, 4]], [[1, -2, 1, 0]])


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        validate(11, H2, [[1, 2, 3]])


def test_affine_plane_not_complete():
    inst = validate(5, [[1, 0], [0, 1]], [[1, 1]])
    assert inst.d == 0
    assert not inst.complete


def test_degree_of():
    assert degree_of(BETA_H2, (1, 0, 0, 0)) == (1, 0)
    assert degree_of(BETA_H2, (0, 0, 1, 0)) == (1, 0)
    assert degree_of(BETA_H2, (0, 1, 0, 0)) == (-2, 1)


def test_p1_instance():
    inst = validate(3, P1, [[1, 0], [0, 1]])
    assert (inst.n, inst.r, inst.d, inst.s) == (1, 2, 1, 2)
    assert inst.beta.tolist() in ([[1, 1]], [[-1, -1]])


def test_variable_bounds():
    # 0 <= x <= 3, 0 <= y, x + y <= 4
    A = [[1, 0], [-1, 0], [0, 1], [-1, -1]]
    b = [0, -3, 0, -4]
    assert variable_bounds(A, b, 0) == (0, 3)
    assert variable_bounds(A, b, 1) == (0, 4)
    assert variable_bounds([[2]], [1], 0) == (Fraction(1, 2), None)
    assert integer_bounds([[2], [-2]], [1, -5], 0) == (1, 2)
    assert variable_bounds([[1], [-1]], [2, -1], 0) is None


def test_cone_is_trivial():
    assert cone_is_trivial(H2)
    assert not cone_is_trivial([[1, 0], [0, 1]])
    assert not cone_is_trivial([[1, 0], [-1, 0], [0, 1]])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=1, max_size=4))
def test_cone_trivial_against_grid(A):
    # a nontrivial rational cone in the plane contains a nonzero grid point
    # of small height when the entries are this small
    hit = any(all(a * x + b * y >= 0 for a, b in A)
              for x, y in product(range(-6, 7), repeat=2) if (x, y) != (0, 0))
    assert cone_is_trivial(A) == (not hit)
