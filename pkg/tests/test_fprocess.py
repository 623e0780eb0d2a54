"""Partitioned framings, dualization, calibration, projective families."""

import pytest

import fproc.polytope as pt
from fproc.fprocess import (
    CaseWF,
    DualStage,
    InfeasibleDegrees,
    PartitionInvalid,
    PartitionedFraming,
    canonical_projective_framing,
    expected_dual_framing,
    f_dual,
    f_process,
    is_calibrated,
    projective_fan_matrix,
    validate,
    weak_projective_framing,
)


def test_projective_fan_matrix():
    assert projective_fan_matrix(2) == ((1, 0, -1), (0, 1, -1))
    assert projective_fan_matrix(3) == (
        (1, 0, 0, -1),
        (0, 1, 0, -1),
        (0, 0, 1, -1),
    )


def test_partitioned_framing_validation():
    V = projective_fan_matrix(2)
    with pytest.raises(PartitionInvalid):
        PartitionedFraming(V, (1, 1), ((0, 1),))  # wrong weight length
    with pytest.raises(PartitionInvalid):
        PartitionedFraming(V, (1, 1, 1), ((0, 1),))  # missing column
    with pytest.raises(PartitionInvalid):
        PartitionedFraming(V, (1, 1, 1), ((0, 1), (1, 2)))  # overlap
    with pytest.raises(PartitionInvalid):
        PartitionedFraming(V, (1, -1, 1), ((0, 1, 2),))  # negative weight
    with pytest.raises(PartitionInvalid):
        PartitionedFraming(V, (1, 1, 0), ((0, 1), (2,)))  # zero-weight part


def test_weight_parts_and_strictness():
    V = projective_fan_matrix(3)
    pf = PartitionedFraming(V, (1, 2, 1, 1), ((0, 1), (2, 3)))
    assert pf.weight_parts() == ((1, 2, 0, 0), (0, 0, 1, 1))
    assert pf.is_strict()
    weak = PartitionedFraming(V, (1, 0, 1, 1), ((0, 1), (2, 3)))
    assert not weak.is_strict()


def test_validate_diagnostics():
    pf = canonical_projective_framing(3, (4,))
    issues, case = validate(pf)
    assert issues == []
    assert case == "f"
    weak = weak_projective_framing(5, (2, 3))
    issues, case = validate(weak)
    assert issues == []
    assert case == "wf"
    bad = PartitionedFraming(((2, 0), (0, 1)), (1, 1), ((0, 1),))
    issues, _ = validate(bad)
    assert any("primitive" in msg for msg in issues)
    half = PartitionedFraming(((1, 0), (0, 1)), (1, 1), ((0, 1),))
    issues, _ = validate(half)
    assert any("positively span" in msg for msg in issues)


# --- canonical projective framings ------------------------------------------------


def test_canonical_framing_quintic():
    pf = canonical_projective_framing(4, (5,))
    assert pf.a == (1, 1, 1, 1, 1)
    assert pf.partition == ((0, 1, 2, 3, 4),)


def test_canonical_framing_y34():
    pf = canonical_projective_framing(5, (3, 4))
    assert pf.a == (1, 1, 1, 1, 1, 2)
    assert pf.partition == ((0, 1, 2), (3, 4, 5))


def test_canonical_framing_block_sums_match_degrees():
    for n, degrees in [(4, (6,)), (5, (2, 5)), (6, (2, 2, 3))]:
        pf = canonical_projective_framing(n, degrees)
        for block, d in zip(pf.partition, degrees):
            assert sum(pf.a[i] for i in block) == d


def test_canonical_framing_infeasible():
    with pytest.raises(InfeasibleDegrees):
        canonical_projective_framing(4, (1, 1, 1))  # Σd ≤ n
    with pytest.raises(InfeasibleDegrees):
        canonical_projective_framing(4, (9, 9, 9))  # forces a size-1 block of degree > 1
    with pytest.raises(InfeasibleDegrees):
        canonical_projective_framing(4, (2,) * 6)  # too many parts for n+1 columns
    # explicit sizes override the default sizing guard
    pf = canonical_projective_framing(4, (5, 1, 1), part_sizes=(3, 1, 1))
    assert pf.a == (1, 1, 3, 1, 1)


def test_weak_framing_layout():
    pf = weak_projective_framing(5, (2, 3))
    assert pf.a == (1, 1, 0, 1, 1, 1)
    assert pf.partition == ((0, 1, 2), (3, 4, 5))
    pf = weak_projective_framing(5, (1, 3))
    assert pf.a == (1, 0, 0, 1, 1, 1)
    with pytest.raises(InfeasibleDegrees):
        weak_projective_framing(5, (3, 3))  # Σd > n


# --- dualization --------------------------------------------------------------------


def test_f_dual_quintic():
    pf = canonical_projective_framing(4, (5,))
    fd = f_dual(pf)
    assert fd.case == "f"
    assert fd.h == 1
    assert fd.total == (1, 1, 1, 1, 1)
    assert fd.weight_patterns() == ((1, 1, 1, 1, 1),)
    assert len(fd.Lambda) == 4 and len(fd.Lambda[0]) == 5
    # all dual rays are primitive columns
    for j in range(5):
        col = tuple(row[j] for row in fd.Lambda)
        assert any(col)


def test_f_dual_weights_supported_on_blocks():
    fd = f_dual(canonical_projective_framing(5, (3, 4)))
    for w, block in zip(fd.weights, fd.blocks):
        inside = set(block)
        assert all(w[j] == 0 for j in range(len(w)) if j not in inside)
        assert all(w[j] > 0 for j in block)


def test_f_dual_weak_case():
    fd = f_dual(weak_projective_framing(5, (2, 3)))
    assert fd.case == "wf"
    with pytest.raises(CaseWF):
        f_process(weak_projective_framing(5, (2, 3)))


def test_dual_stage_framing_roundtrip():
    fd = f_dual(canonical_projective_framing(4, (5,)))
    pf2 = fd.framing
    assert isinstance(pf2, PartitionedFraming)
    assert pf2.a == fd.total
    fd2 = f_dual(pf2)
    assert fd2.case == "f"


def test_is_calibrated_quintic():
    pf = canonical_projective_framing(4, (5,))
    flag, perm = is_calibrated(pf)
    assert flag
    assert sorted(perm) == list(range(5))


def test_is_calibrated_reuses_data():
    pf = canonical_projective_framing(5, (3, 4))
    fp = f_process(pf)
    flag, perm = is_calibrated(pf, data=fp)
    assert flag
    assert sorted(perm) == list(range(6))


def test_expected_dual_framing_examples():
    # one block of size n+1 and degree n+1: n+1 dual columns of weight 1
    assert expected_dual_framing(4, (5,)) == ((1, 1, 1, 1, 1),)
    # block of size ≥ 3: n+1 columns carrying δ except for 1 on the last slot
    pats = expected_dual_framing(5, (3, 4))
    assert pats == ((1, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 1))
    # block of size 1 loses the zero vertex: n all-one columns
    pats = expected_dual_framing(5, (1, 5), part_sizes=(1, 5))
    assert pats[0] == (1, 1, 1, 1, 1)


def test_expected_dual_framing_matches_computed():
    for n, degrees in [(4, (5,)), (4, (6,)), (5, (3, 4)), (5, (2, 2, 2)), (6, (2, 5))]:
        fd = f_dual(canonical_projective_framing(n, degrees))
        assert fd.weight_patterns() == expected_dual_framing(n, degrees)


def test_hypersurface_dual_total():
    for n, delta in [(3, 1), (4, 2), (5, 1)]:
        d = n + delta
        fd = f_dual(canonical_projective_framing(n, (d,)))
        assert fd.total == (delta,) * n + (1,)
