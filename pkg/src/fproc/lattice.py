"""Exact integer linear algebra on tuples.

Vectors are tuples of ints, matrices are tuples of row tuples.  Everything is
exact: Smith normal forms come with unimodular transforms, ranks are computed
fraction-free, and membership in integer column spans is decided by divisibility.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple
Mat = tuple


class ZeroVector(ValueError):
    """Raised when a primitive generator of the zero vector is requested."""


class RankDeficient(ValueError):
    """Raised when a matrix expected to have full row rank does not."""


def vector_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    """v divided by the gcd of its entries; errors on the zero vector."""
    g = vector_gcd(v)
    if g == 0:
        raise ZeroVector(f"no primitive generator: {v}")
    return tuple(x // g for x in v)


def transpose(A):
    return tuple(zip(*A)) if A else ()


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def mat_vec(A, v):
    return tuple(dot(row, v) for row in A)


def mat_mul(A, B):
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def column(A, j):
    return tuple(row[j] for row in A)


def columns(A):
    return list(zip(*A)) if A else []


def from_columns(cols, nrows=None):
    if not cols:
        return tuple(() for _ in range(nrows or 0))
    return tuple(zip(*cols))


def rank(A):
    """Rank of an integer (or Fraction) matrix, by fraction-free elimination."""
    M = [list(row) for row in A]
    if not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c] == 0:
                continue
            f = M[i][c]
            p = M[r][c]
            for j in range(c, cols):
                M[i][j] = M[i][j] * p - M[r][j] * f
        r += 1
        if r == rows:
            break
    return r


def smith_normal_form(A):
    """(U, D, W) with U·A·W = D diagonal, d_i | d_{i+1}, U and W unimodular."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(row) for row in A]
    U = [list(row) for row in identity(rows)]
    W = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in W:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row_dst += f*row_src
        for j in range(cols):
            M[dst][j] += f * M[src][j]
        for j in range(rows):
            U[dst][j] += f * U[src][j]

    def add_col(src, dst, f):
        for row in M:
            row[dst] += f * row[src]
        for row in W:
            row[dst] += f * row[src]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # find a smallest nonzero pivot in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(M[i][j])
                if x and (best is None or x < best):
                    best, piv = x, (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if M[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if M[i][t]:
                q = M[i][t] // M[t][t]
                add_row(t, i, -q)
                if M[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if M[t][j]:
                q = M[t][j] // M[t][t]
                add_col(t, j, -q)
                if M[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility: fold any bad entry into column t and retry
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if M[i][j] % M[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1

    D = tuple(tuple(M[i][j] if i == j else 0 for j in range(cols)) for i in range(rows))
    return tuple(tuple(r) for r in U), D, tuple(tuple(r) for r in W)


def snf_diagonal(A):
    _, D, _ = smith_normal_form(A)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)))


def solve_integer(A, y):
    """Some integer x with A·x = y, or None.  A is r×c, y length r."""
    r = len(A)
    c = len(A[0]) if r else 0
    U, D, W = smith_normal_form(A)
    z = mat_vec(U, y)
    t = [0] * c
    for i in range(min(r, c)):
        d = D[i][i]
        if d == 0:
            if z[i]:
                return None
        else:
            if z[i] % d:
                return None
            t[i] = z[i] // d
    if any(z[i] for i in range(min(r, c), r)):
        return None
    return mat_vec(W, tuple(t))


def in_image(A, y):
    """Whether y lies in the integer column span of A."""
    return solve_integer(A, y) is not None


class ClassGroup:
    """Cokernel of V^T : Z^n -> Z^m for an n×m fan matrix V of full row rank.

    rank        free rank (= m − n)
    torsion     invariant factors > 1
    degree_map  rows projecting Z^m onto the free part (each row kills im V^T)
    """

    def __init__(self, rank, torsion, degree_map):
        self.rank = rank
        self.torsion = torsion
        self.degree_map = degree_map

    def __repr__(self):
        return f"ClassGroup(rank={self.rank}, torsion={self.torsion})"


def class_group(V):
    n = len(V)
    m = len(V[0]) if n else 0
    A = transpose(V)  # m×n
    U, D, _ = smith_normal_form(A)
    diag = [D[i][i] for i in range(min(m, n))]
    r = sum(1 for d in diag if d)
    if r < n:
        raise RankDeficient(f"fan matrix has row rank {r} < {n}")
    torsion = tuple(d for d in diag if d > 1)
    deg = []
    for i in range(r, m):
        row = U[i]
        lead = next((x for x in row if x), 1)
        deg.append(tuple(-x for x in row) if lead < 0 else tuple(row))
    return ClassGroup(m - r, torsion, tuple(deg))


def columns_equal_up_to_permutation(A, B):
    """A permutation p with col_j(A) = col_{p[j]}(B) for all j, or None."""
    ca, cb = columns(A), columns(B)
    if len(ca) != len(cb) or (ca and cb and len(A) != len(B)):
        return None
    pool = {}
    for i, col in enumerate(cb):
        pool.setdefault(col, []).append(i)
    perm = []
    for col in ca:
        avail = pool.get(col)
        if not avail:
            return None
        perm.append(avail.pop(0))
    return tuple(perm)


# --- rational elimination helpers -----------------------------------------

def rref(A):
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c]
        M[r] = [x / inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [row for row in M[:r]], pivots


def nullspace(A):
    """Basis of the rational kernel of A, as integer-cleared tuples."""
    R, pivots = rref(A)
    ncols = len(A[0]) if A else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        w = tuple(int(x * den) for x in v)
        basis.append(primitive(w))
    return basis


def solve_rational(A, y):
    """The rational solution set of A·x = y: (particular, basis) or None."""
    aug = [list(row) + [y[i]] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    ncols = len(A[0]) if A else 0
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return tuple(x), nullspace(A)
