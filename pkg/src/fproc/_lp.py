"""Exact two-phase simplex over Fractions, plus convex-position predicates.

Small dense problems only (dozens of variables): Bland's rule everywhere, so
termination is guaranteed and every answer is exact.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


def _pivot(T, basis, r, c):
    piv = T[r][c]
    T[r] = [x / piv for x in T[r]]
    row_r = T[r]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], row_r)]
    basis[r] = c


def _run(T, basis, cost, ncols):
    """Minimize cost over the tableau; returns objective row on exit."""
    m = len(T)
    obj = [Fraction(x) for x in cost] + [Fraction(0)]
    for i in range(m):
        if obj[basis[i]]:
            f = obj[basis[i]]
            obj = [a - f * b for a, b in zip(obj, T[i])]
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return obj
        best = None
        leave = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return None  # unbounded below
        f = obj[enter]
        _pivot(T, basis, leave, enter)
        if f:
            obj = [a - f * b for a, b in zip(obj, T[leave])]


def solve(c, A, b, sense="min"):
    """Optimize c·x subject to A·x = b, x ≥ 0.  Returns (status, value, x)."""
    m = len(A)
    n = len(c)
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    ncols = n + m

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    obj = _run(T, basis, phase1, ncols)
    if obj is None or -obj[-1] > 0:
        return INFEASIBLE, None, None

    # drive leftover artificials out of the basis, dropping redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            piv = next((j for j in range(n) if T[i][j]), None)
            if piv is None:
                continue
            _pivot(T, basis, i, piv)
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    sign = 1 if sense == "min" else -1
    cost = [sign * Fraction(x) for x in c]
    obj = _run(T, basis, cost, n)
    if obj is None:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = T[i][-1]
    value = sign * -obj[-1]
    return OPTIMAL, value, tuple(x)


def in_convex_hull(p, points):
    """Whether p is a convex combination of the given points."""
    if not points:
        return False
    d = len(p)
    A = [[pt[i] for pt in points] for i in range(d)]
    A.append([1] * len(points))
    b = list(p) + [1]
    status, _, _ = solve([0] * len(points), A, b)
    return status == OPTIMAL


def relint_margin(p, points):
    """max t with p = Σ λ_i v_i, Σ λ_i = 1, λ_i ≥ t; None if p ∉ conv.

    Positive exactly when p lies in the relative interior of conv(points).
    """
    if not points:
        return None
    d = len(p)
    k = len(points)
    shifted = [tuple(x - y for x, y in zip(pt, p)) for pt in points]
    s = [sum(pt[i] for pt in shifted) for i in range(d)]
    # variables: μ_1..μ_k, t   (λ_i = μ_i + t)
    A = [[pt[i] for pt in shifted] + [s[i]] for i in range(d)]
    A.append([1] * k + [k])
    b = [0] * d + [1]
    c = [0] * k + [-1]
    status, value, _ = solve(c, A, b)
    if status != OPTIMAL:
        return None
    return -value
