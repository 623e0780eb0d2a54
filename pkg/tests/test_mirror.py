"""Cox polynomials, homogeneity classes, and Landau-Ginzburg models."""

from math import comb

import pytest

import fproc.polytope as pt
from fproc.fprocess import (
    CaseWF,
    canonical_projective_framing,
    f_dual,
    projective_fan_matrix,
    weak_projective_framing,
)
from fproc.mirror import (
    CoxPolynomial,
    EmptyNewton,
    NotHomogeneous,
    check_homogeneous,
    lg_model,
    mirror_polynomial_f,
    mirror_polynomial_wf,
    modulus_count,
    primal_polynomial,
)


def dual_parts(pf):
    fd = f_dual(pf)
    if fd.case == "f":
        return fd, [mirror_polynomial_f(fd.Lambda, w) for w in fd.weights]
    return fd, [
        mirror_polynomial_wf(pf.V, block, fd.Lambda, w)
        for block, w in zip(pf.partition, fd.weights)
    ]


# --- CoxPolynomial basics -------------------------------------------------------


def test_monomials_sorted_graded_lex_and_deduplicated():
    f = CoxPolynomial(2, [(2, 0), (0, 1), (1, 1), (2, 0)])
    assert f.monomials == ((0, 1), (1, 1), (2, 0))
    assert len(f) == 3
    assert f.coeffs == ("c1", "c2", "c3")


def test_psi_slot_labeling():
    f = CoxPolynomial(2, [(1, 1), (2, 0), (0, 2)], psi_exponent=(1, 1))
    assert f.coeffs == ("c1", "psi", "c2")
    assert f.to_dict() == {
        "vars": 2,
        "monomials": [[0, 2], [1, 1], [2, 0]],
        "coeffs": ["c1", "psi", "c2"],
    }


def test_cox_polynomial_validation():
    with pytest.raises(EmptyNewton):
        CoxPolynomial(2, [])
    with pytest.raises(pt.DimensionMismatch):
        CoxPolynomial(3, [(1, 1)])
    with pytest.raises(ValueError):
        CoxPolynomial(2, [(-1, 2)])


# --- primal polynomials ----------------------------------------------------------


def test_primal_quintic_polynomial():
    V = projective_fan_matrix(4)
    f = primal_polynomial(V, (1, 1, 1, 1, 1))
    assert f.num_vars == 5
    assert len(f) == comb(9, 4)  # all degree-5 monomials in 5 variables
    assert all(sum(e) == 5 for e in f.monomials)
    assert f.coeffs[f.monomials.index((1, 1, 1, 1, 1))] == "psi"


def test_primal_polynomial_degree_two_conic():
    V = projective_fan_matrix(2)
    f = primal_polynomial(V, (1, 1, 0))
    assert len(f) == comb(4, 2)  # degree-2 monomials in 3 variables
    assert all(sum(e) == 2 for e in f.monomials)


# --- homogeneity classes -----------------------------------------------------------


def test_check_homogeneous_projective_degree():
    V = projective_fan_matrix(4)
    quintic = primal_polynomial(V, (1, 1, 1, 1, 1))
    cls = check_homogeneous(quintic, V)
    assert cls == check_homogeneous(CoxPolynomial(5, [(5, 0, 0, 0, 0)]), V)
    assert cls != check_homogeneous(CoxPolynomial(5, [(4, 0, 0, 0, 0)]), V)
    free, torsion = cls
    assert len(free) == 1 and torsion == ()


def test_check_homogeneous_rejects_mixed_degrees():
    V = projective_fan_matrix(4)
    with pytest.raises(NotHomogeneous):
        check_homogeneous(CoxPolynomial(5, [(1, 0, 0, 0, 0), (2, 0, 0, 0, 0)]), V)


def test_check_homogeneous_torsion_class():
    # columns (1,0) and (1,2): classes live in Z/2
    L = ((1, 1), (0, 2))
    even = check_homogeneous(CoxPolynomial(2, [(0, 0), (1, 1)]), L)
    odd = check_homogeneous(CoxPolynomial(2, [(1, 0)]), L)
    assert even[0] == () and odd[0] == ()
    assert len(even[1]) == 1 and len(odd[1]) == 1
    assert even != odd


# --- mirror polynomials ---------------------------------------------------------------


def test_mirror_quintic_exponents():
    fd, (f,) = dual_parts(canonical_projective_framing(4, (5,)))
    want = {tuple(5 if j == i else 0 for j in range(5)) for i in range(5)}
    want.add((1, 1, 1, 1, 1))
    assert f.exponent_set() == frozenset(want)
    assert f.coeffs[f.monomials.index((1, 1, 1, 1, 1))] == "psi"


def test_mirror_polynomial_counts_match_dual_polytopes():
    pf = canonical_projective_framing(5, (3, 4))
    fd, polys = dual_parts(pf)
    for f, w in zip(polys, fd.weights):
        assert len(f) == pt.from_framing(fd.Lambda, w).count_l()


def test_mirror_f_on_weak_dual_raises():
    pf = weak_projective_framing(5, (2, 3))
    fd = f_dual(pf)
    with pytest.raises(CaseWF):
        mirror_polynomial_f(fd.Lambda, fd.weights[0])


def test_mirror_y34_exponent_sets():
    pf = canonical_projective_framing(5, (3, 4))
    fd, polys = dual_parts(pf)
    assert fd.case == "f"
    want_1 = {
        (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
        (3, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0),
        (0, 3, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0),
        (0, 0, 3, 0, 0, 0, 0, 0, 4, 0, 0, 0),
    }
    want_2 = {
        (0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 3),
        (0, 0, 0, 3, 0, 0, 1, 1, 1, 5, 1, 0),
        (0, 0, 0, 0, 3, 0, 1, 1, 1, 1, 5, 0),
        (0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 1),
    }
    assert polys[0].exponent_set() == frozenset(want_1)
    assert polys[1].exponent_set() == frozenset(want_2)
    # each part polynomial is homogeneous, and the two classes differ
    classes = [check_homogeneous(f, fd.Lambda) for f in polys]
    assert classes[0] != classes[1]


def test_mirror_wf_newton_polytopes_round_trip():
    pf = weak_projective_framing(5, (2, 3))
    fd, polys = dual_parts(pf)
    for block, f in zip(pf.partition, polys):
        rays = [tuple(row[i] for row in pf.V) for i in block]
        rays.append((0,) * 5)
        hull = pt.Polytope.from_points(rays, n=5)
        assert len(f) == hull.count_l()


# --- Landau-Ginzburg models -------------------------------------------------------------


def test_lg_quintic():
    fd, polys = dual_parts(canonical_projective_framing(4, (5,)))
    lg = lg_model(polys, fd.weights)
    assert lg.N == 6
    assert lg.q_total == (0,) * 5
    assert lg.psi_slots == (lg.laurent[0].index((0,) * 5),)
    d = lg.to_dict()
    assert d["F_terms"] == 6
    assert d["q_total"] == [0] * 5


def test_lg_y34_q_product_is_psi():
    fd, polys = dual_parts(canonical_projective_framing(5, (3, 4)))
    lg = lg_model(polys, fd.weights)
    assert len(lg.q) == 2
    assert any(any(x for x in q) for q in lg.q)  # the factors are nontrivial
    assert lg.q_total == (0,) * 12


def test_lg_y23_q_exponents_match_display():
    pf = weak_projective_framing(5, (2, 3))
    fd, polys = dual_parts(pf)
    lg = lg_model(polys, fd.weights)
    assert lg.q[0] == (0, 0, 0, -2, -2, -2, 3, 3, 3, 0, 0, 0)
    assert lg.q[1] == (0, 0, 0, 2, 2, 2, -3, -3, -3, 0, 0, 0)
    assert lg.q_total == (0,) * 12


def test_lg_y13_q_exponents():
    pf = weak_projective_framing(5, (1, 3))
    fd, polys = dual_parts(pf)
    lg = lg_model(polys, fd.weights)
    assert lg.q[0] == (0, 0, -1, -1, -1, 3, 3, 3, 0, 0, 0)
    assert lg.q[1] == (0, 0, 1, 1, 1, -3, -3, -3, 0, 0, 0)
    assert lg.q_total == (0,) * 11


def test_lg_length_mismatch():
    fd, polys = dual_parts(canonical_projective_framing(4, (5,)))
    with pytest.raises(pt.DimensionMismatch):
        lg_model(polys, fd.weights + fd.weights)


# --- modulus counting ---------------------------------------------------------------------


def test_modulus_counts_of_worked_examples():
    for pf in (
        canonical_projective_framing(4, (5,)),
        canonical_projective_framing(5, (3, 4)),
        weak_projective_framing(5, (2, 3)),
        weak_projective_framing(5, (1, 3)),
    ):
        _, polys = dual_parts(pf)
        assert modulus_count(polys) == 1


def test_modulus_count_rescaling_only():
    # two monomials in one variable: both coefficients absorb into rescalings
    f = CoxPolynomial(1, [(0,), (2,)])
    assert modulus_count([f]) == 0
