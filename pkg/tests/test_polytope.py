"""Rational polytopes: descriptions, lattice counts, Minkowski arithmetic."""

import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import fproc.polytope as pt
from fproc.fprocess import projective_fan_matrix
from fproc.polytope import DimensionMismatch, Polytope, Unbounded, from_framing


def vertex_set(P):
    return {tuple(Fraction(x) for x in v) for v in P.vertices()}


# --- construction and descriptions ---------------------------------------------


def test_from_points_simplex():
    P = Polytope.from_points([(0, 0), (1, 0), (0, 1)])
    assert vertex_set(P) == {(0, 0), (1, 0), (0, 1)}
    assert P.dim() == 2
    assert P.count_l() == 3
    assert P.count_l_star() == 0


def test_from_points_drops_interior_points():
    P = Polytope.from_points([(0, 0), (2, 0), (0, 2), (1, 1), (0, 1)])
    assert vertex_set(P) == {(0, 0), (2, 0), (0, 2)}


def test_from_hrep_unit_square():
    # {x : A·x ≥ −b}
    A = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    b = [0, 0, 1, 1]
    P = Polytope.from_hrep(A, b)
    assert vertex_set(P) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert P.count_l() == 4
    assert P.count_l_star() == 0
    Q = pt.dilate(P, 3)
    assert Q.count_l() == 16
    assert Q.count_l_star() == 4


def test_from_hrep_empty():
    P = Polytope.from_hrep([(1,), (-1,)], [-2, 1])  # x ≥ 2 and x ≤ 1
    assert P.is_empty()
    assert P.lattice_points() == ()
    assert P.dim() == -1


def test_unbounded_raises():
    P = Polytope.from_hrep([(1, 0), (0, 1)], [0, 0])
    with pytest.raises(Unbounded):
        P.vertices()


def test_from_framing_projective_plane():
    V = projective_fan_matrix(2)
    P = from_framing(V, (1, 1, 1))
    assert vertex_set(P) == {(-1, -1), (2, -1), (-1, 2)}
    assert P.count_l() == 10
    assert P.count_l_star() == 1
    assert pt.is_reflexive(P)


def test_from_framing_checks_length():
    with pytest.raises(DimensionMismatch):
        from_framing(projective_fan_matrix(2), (1, 1))


def test_membership_predicates():
    P = Polytope.from_hrep([(1, 0), (0, 1), (-1, 0), (0, -1)], [1, 1, 1, 1])
    assert P.contains((1, 1))
    assert not P.contains((2, 0))
    assert P.interior_contains((0, 0))
    assert P.interior_contains((Fraction(1, 2), Fraction(-1, 2)))
    assert not P.interior_contains((1, 0))
    seg = Polytope.from_points([(0, 0), (2, 0)])
    assert seg.dim() == 1
    assert seg.contains((1, 0))
    assert not seg.interior_contains((1, 0))
    assert seg.relint_contains((1, 0))
    assert not seg.relint_contains((2, 0))


def test_is_lattice():
    assert Polytope.from_points([(0, 0), (1, 2)]).is_lattice()
    assert not Polytope.from_points([(0, 0), (Fraction(1, 2), 0)]).is_lattice()


# --- lattice counting -----------------------------------------------------------


def test_simplex_dilation_binomials():
    # l(h·Δ) of the unit n-simplex is C(h+n, n)
    for n in (2, 3, 4):
        P = Polytope.from_points(
            [(0,) * n] + [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        )
        for h in (1, 2, 3):
            assert pt.dilate(P, h).count_l() == comb(h + n, n)


def test_projective_framing_counts_are_binomials():
    # l(Δ_w) = C(|w|+n, n) and l*(Δ_w) = C(|w|−1, n) on projective space
    cases = [(2, (1, 2, 0)), (3, (1, 1, 1, 1)), (4, (2, 0, 1, 3, 1))]
    for n, w in cases:
        P = from_framing(projective_fan_matrix(n), w)
        s = sum(w)
        assert P.count_l() == comb(s + n, n)
        assert P.count_l_star() == comb(s - 1, n)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 3),
    st.data(),
)
def test_projective_counts_property(n, data):
    w = tuple(data.draw(st.integers(0, 3)) for _ in range(n + 1))
    P = from_framing(projective_fan_matrix(n), w)
    s = sum(w)
    assert P.count_l() == comb(s + n, n)
    # s = 0 degenerates to the origin, whose relative interior is itself
    assert P.count_l_star() == (comb(s - 1, n) if s >= 1 else 1)


def test_rational_polytope_counts():
    P = Polytope.from_points([(0, 0), (Fraction(5, 2), 0), (0, Fraction(5, 2))])
    # integer points with x, y ≥ 0 and x+y ≤ 5/2, i.e. x+y ≤ 2
    assert P.count_l() == 6
    assert P.lattice_points() == P.lattice_points_direct()


def test_strict_counts_on_rational_polytope():
    # [1/2, 5/2] contains 1, 2; both are interior
    P = Polytope.from_points([(Fraction(1, 2),), (Fraction(5, 2),)])
    assert P.lattice_points() == ((1,), (2,))
    assert P.lattice_points(strict=True) == ((1,), (2,))


def test_lower_dimensional_counts():
    seg = Polytope.from_points([(0, 0), (3, 0)])
    assert seg.count_l() == 4
    assert seg.count_l_star() == 2  # relative interior
    assert seg.lattice_points() == seg.lattice_points_direct()
    assert seg.lattice_points(strict=True) == seg.lattice_points_direct(strict=True)


# --- polytope arithmetic ---------------------------------------------------------


def test_minkowski_framing_additivity():
    # Δ_a + Δ_b = Δ_{a+b} on a complete fan
    for n, a, b in [(2, (1, 1, 1), (0, 2, 1)), (3, (1, 0, 1, 1), (1, 1, 0, 2))]:
        V = projective_fan_matrix(n)
        S = pt.minkowski_sum(from_framing(V, a), from_framing(V, b))
        T = from_framing(V, tuple(x + y for x, y in zip(a, b)))
        assert vertex_set(S) == vertex_set(T)


def test_minkowski_square_plus_diamond():
    sq = Polytope.from_points([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    di = Polytope.from_points([(1, 0), (-1, 0), (0, 1), (0, -1)])
    S = pt.minkowski_sum(sq, di)
    assert vertex_set(S) == {
        (2, 1), (2, -1), (-2, 1), (-2, -1), (1, 2), (-1, 2), (1, -2), (-1, -2),
    }


def test_conv_union_cross_polytope():
    a = Polytope.from_points([(1, 0), (-1, 0)])
    b = Polytope.from_points([(0, 1), (0, -1)])
    C = pt.conv_union([a, b])
    assert vertex_set(C) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert C.count_l() == 5
    assert C.count_l_star() == 1
    assert pt.is_reflexive(C)


def test_dilate_identity_and_scaling():
    P = Polytope.from_points([(0, 0), (1, 0), (0, 1)])
    assert vertex_set(pt.dilate(P, 1)) == vertex_set(P)
    assert vertex_set(pt.dilate(P, 4)) == {(0, 0), (4, 0), (0, 4)}


def test_integer_part():
    P = Polytope.from_points([(0, 0), (Fraction(5, 2), 0), (0, Fraction(5, 2))])
    Q = pt.integer_part(P)
    assert vertex_set(Q) == {(0, 0), (2, 0), (0, 2)}
    # a polytope that is already a lattice polytope is unchanged
    R = from_framing(projective_fan_matrix(2), (1, 1, 1))
    assert vertex_set(pt.integer_part(R)) == vertex_set(R)


def test_integer_part_can_be_empty_of_dimension():
    # thin sliver without interior lattice structure: hull of its two points
    P = Polytope.from_points([(Fraction(1, 3), 0), (Fraction(5, 3), 0)])
    Q = pt.integer_part(P)
    assert vertex_set(Q) == {(1, 0)}


# --- reflexivity and dilation thresholds ----------------------------------------


def test_is_reflexive_examples():
    V = projective_fan_matrix(2)
    assert pt.is_reflexive(from_framing(V, (1, 1, 1)))
    assert not pt.is_reflexive(from_framing(V, (1, 1, 2)))
    square = Polytope.from_points([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    assert pt.is_reflexive(square)
    assert not pt.is_reflexive(Polytope.from_points([(0, 0), (2, 0), (0, 2)]))


def test_k0_and_h0():
    V = projective_fan_matrix(2)
    P = from_framing(V, (1, 1, 1))
    assert pt.k0(P) == (1, "f")
    # origin on the boundary: weak case
    Q = Polytope.from_points([(0, 0), (1, 0), (0, 1)])
    assert pt.k0(Q)[1] == "wf"
    parts = [from_framing(V, (1, 1, 0)), from_framing(V, (0, 0, 1))]
    h, case = pt.h0(parts)
    assert case == "f"
    assert h >= 1


def test_h_independent():
    # two full-dimensional plane polytopes: dim(Σ_S) ≥ |S| + h − 1 caps at h = 1
    V = projective_fan_matrix(2)
    parts = [from_framing(V, (1, 1, 0)), from_framing(V, (0, 0, 1))]
    assert pt.h_independent(parts, 1)
    assert not pt.h_independent(parts, 2)
    seg1 = Polytope.from_points([(0, 0), (1, 0)])
    seg2 = Polytope.from_points([(0, 0), (0, 1)])
    assert pt.h_independent([seg1, seg2], 1)
    assert not pt.h_independent([seg1, seg1], 1)


# --- serialization ----------------------------------------------------------------


def test_dict_roundtrip_hrep():
    V = projective_fan_matrix(2)
    P = from_framing(V, (1, 1, 2))
    d = pt.to_dict(P)
    Q = pt.from_dict(d)
    assert vertex_set(P) == vertex_set(Q)
    assert P.lattice_points() == Q.lattice_points()


def test_dict_roundtrip_vrep_with_fractions():
    P = Polytope.from_points([(0, 0), (Fraction(5, 2), 0), (0, 1)])
    d = pt.to_dict(P, prefer="vrep")
    assert d == {"vrep": [[0, 0], [0, 1], ["5/2", 0]]}
    Q = pt.from_dict(d)
    assert vertex_set(P) == vertex_set(Q)
    with pytest.raises(ValueError):
        pt.from_dict({"neither": 1})


# --- pruned versus direct enumeration ---------------------------------------------


def random_polytope(rng):
    n = rng.choice((2, 2, 3, 3, 4))
    kind = rng.random()
    if kind < 0.6:
        k = rng.randint(n + 1, n + 4)
        pts = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k)]
        return Polytope.from_points(pts)
    if kind < 0.8:
        den = rng.randint(2, 3)
        k = rng.randint(n + 1, n + 3)
        pts = [
            tuple(Fraction(rng.randint(-6, 6), den) for _ in range(n)) for _ in range(k)
        ]
        return Polytope.from_points(pts)
    a = tuple(rng.randint(0, 2) for _ in range(n + 1))
    if not any(a):
        a = (1,) * (n + 1)
    return from_framing(projective_fan_matrix(n), a)


def test_pruned_matches_direct_walk():
    rng = random.Random(91)
    for _ in range(25):
        P = random_polytope(rng)
        if P.is_empty():
            continue
        assert P.lattice_points() == P.lattice_points_direct()
        assert P.lattice_points(strict=True) == P.lattice_points_direct(strict=True)
