import pytest
from hypothesis import given, settings, strategies as st

from toricode.errors import NotDiagonal, PreconditionUnverified, SizeGuard
from toricode.intlat import IntMatrix, Lattice
from toricode.points import enumerate_points, length_snf
from toricode.poly import ideal_equal, is_homogeneous_binomial, to_binomial
from toricode.toric import validate
from toricode.vanish import (find_mixed_dominating_basis, ideal_via_elimination,
                             ideal_via_lattice, in_L1, is_complete_intersection,
                             is_dominating, is_mixed, is_Q_homogeneous, kernel_lattice_beta,
                             lattice_degenerate, lattice_L, lattice_via_colon)
from instances import BETA_H2, FANS, H2, P1, random_instances


def h2(q=11, Q=((1, 2, 3, 4),)):
    return validate(q, H2, [list(r) for r in Q], BETA_H2)


def strs(gens):
    return [str(g) for g in gens]


def test_h2_ideal_both_routes():
    inst = h2()
    E, L = ideal_via_elimination(inst), ideal_via_lattice(inst)
    assert E.method == "elimination" and L.method == "lattice"
    assert strs(E.generators) == strs(L.generators)
    paper = [to_binomial((5, 0, -5, 0), E.ring), to_binomial((2, 1, 0, -1), E.ring)]
    assert ideal_equal(E.generators, paper)
    assert strs(E.minimal_generators()) == ["x_1^2*x_2 - x_4", "x_1^5 - x_3^5"]


def test_h2_q2_ideal():
    inst = h2(q=2)
    E = ideal_via_elimination(inst)
    R = E.ring
    target = [R.binomial((1, 0, 0, 0), (0, 0, 1, 0)), R.binomial((2, 1, 0, 0), (0, 0, 0, 1))]
    assert ideal_equal(E.generators, target)
    assert ideal_equal(ideal_via_lattice(inst).generators, target)


def test_lattice_L_examples():
    assert lattice_L(h2()) == Lattice.from_vectors([(2, 1, 0, -1), (-5, 0, 5, 0)], 4)
    L2 = lattice_L(h2(q=2))
    assert L2 == Lattice.from_vectors([(-1, 0, 1, 0), (-2, -1, 0, 1)], 4)
    assert L2 == kernel_lattice_beta(h2(q=2))


def test_identity_and_beta_parameterizations():
    inst = validate(5, H2, [[int(i == j) for j in range(4)] for i in range(4)], BETA_H2)
    Lb = kernel_lattice_beta(inst)
    assert lattice_L(inst) == Lb.scaled(4)
    sc = lattice_via_colon(inst)
    assert sc.condition_holds and sc.lattice == Lb.scaled(4)
    assert lattice_degenerate(inst) == Lb.scaled(4)
    inst_b = validate(5, H2, BETA_H2, BETA_H2)
    assert lattice_L(inst_b) == Lb
    assert is_Q_homogeneous(inst) and is_Q_homogeneous(inst_b)


def test_in_L1():
    inst = h2()
    assert in_L1(inst, (0, 0, 0, 0))
    assert in_L1(inst, (2, 1, 0, -1))
    assert not in_L1(inst, (1, 0, -1, 0))


def test_colon_shortcut_conditions():
    sc2 = lattice_via_colon(h2(q=2))
    assert sc2.condition_holds
    assert sc2.lattice == lattice_L(h2(q=2))
    assert not lattice_via_colon(h2()).condition_holds


def test_colon_lattice_always_inside_L1():
    for inst in random_instances(40, seed=3):
        sc = lattice_via_colon(inst)
        assert all(in_L1(inst, v) for v in sc.lattice.vectors())
        if sc.condition_holds:
            assert sc.lattice == lattice_L(inst)


def test_homogeneity():
    assert not is_Q_homogeneous(h2())


def test_degenerate():
    inst = validate(11, H2, [[2, 0, 0, 0], [0, 5, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], BETA_H2)
    assert lattice_degenerate(inst) == lattice_L(inst)
    inst2 = validate(2, H2, [[3, 0, 0, 0], [0, 5, 0, 0], [0, 0, 1, 0], [0, 0, 0, 7]], BETA_H2)
    assert lattice_degenerate(inst2) == kernel_lattice_beta(inst2)
    with pytest.raises(NotDiagonal):
        lattice_degenerate(h2())


def test_mixed_dominating():
    M = IntMatrix.from_columns([(2, 1, 0, -1), (-5, 0, 5, 0)], 4)
    assert is_mixed(M) and is_dominating(M)
    assert is_mixed([[1], [-1]])
    assert is_mixed([[1, 1], [-1, -1]]) and not is_dominating([[1, 1], [-1, -1]])
    assert not is_mixed([[1, 0], [0, 1]])
    with pytest.raises(SizeGuard):
        is_dominating(IntMatrix.identity(13))


def test_complete_intersection_h2():
    rep = is_complete_intersection(h2())
    assert rep.complete_intersection
    assert rep.minimal_generator_count == rep.rank == 2
    W = IntMatrix.from_columns(rep.witness, 4)
    assert is_mixed(W) and is_dominating(W)
    assert Lattice.span(W) == lattice_L(h2())


def test_find_basis_returns_basis():
    L = Lattice.from_vectors([(1, 3, 5, -3), (0, 5, 10, -5)], 4)
    B = find_mixed_dominating_basis(L)
    assert B is not None and Lattice.from_vectors(B, 4) == L


def test_ci_precondition():
    inst = validate(5, [[1, 0], [0, 1]], [[1, 2]])
    with pytest.raises(PreconditionUnverified):
        is_complete_intersection(inst)


def test_not_complete_intersection_detected():
    inst = validate(9, FANS[1], [[-1, -3, 0]])
    rep = is_complete_intersection(inst)
    assert rep.rank == 2
    assert rep.minimal_generator_count == 3
    assert not rep.complete_intersection
    assert not rep.warnings
    # the torus of P^2 is a complete intersection: x_1^4 - x_3^4, x_2^4 - x_3^4
    rep = is_complete_intersection(validate(5, FANS[1], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert rep.complete_intersection and rep.minimal_generator_count == 2


def test_ci_verdict_matches_generator_count():
    for inst in random_instances(60, seed=5):
        if not inst.complete:
            continue
        try:
            rep = is_complete_intersection(inst)
        except PreconditionUnverified:
            continue
        assert (rep.minimal_generator_count == rep.rank) == rep.complete_intersection
        assert not rep.warnings


@pytest.mark.parametrize("inst", random_instances(30, seed=11), ids=lambda i: f"q{i.q}-r{i.r}-s{i.s}")
def test_generators_vanish_and_are_homogeneous(inst):
    res = ideal_via_lattice(inst)
    pts = enumerate_points(inst)
    for g in res.generators:
        assert is_homogeneous_binomial(*[e for e, _ in g.items()], inst.beta) if len(g) == 2 else True
        for p in pts:
            assert g.evaluate(p.coords) == 0
    L = res.lattice
    assert all(in_L1(inst, v) for v in L.vectors())
    assert L.index_in(kernel_lattice_beta(inst)) == length_snf(inst)


def test_p1_ideal():
    inst = validate(3, P1, [[1, 0], [0, 1]])
    # Y_Q is the whole torus of P^1 over GF(3): two points, x_1^2 - x_2^2
    res = ideal_via_elimination(inst)
    assert strs(res.generators) == ["x_1^2 - x_2^2"]
