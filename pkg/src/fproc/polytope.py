"""Exact rational polytopes: framings, vertex/halfspace conversion, counting.

A polytope here is the region {x : A·x ≥ −b} of a framing (V, a) — rows of
A are the rays of V, b the weights — or a convex hull of explicit points.
Both descriptions are carried lazily and computed exactly:

  * vertex enumeration is incremental double description on gcd-reduced
    integer homogeneous coordinates, started from a box that provably
    contains every vertex (so unboundedness is detected, not guessed);
  * halfspaces of a hull come from the polar dual at the centroid, with a
    drop to the affine hull first when the hull is not full-dimensional;
  * lattice points are enumerated by interval propagation with pruning,
    and interior counts shift each non-implicit row by one (integer data,
    so strictness is exact).

Everything is deterministic: vertices, rows, and lattice points come out
lexicographically sorted.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd, isqrt
from operator import mul

from .lattice import (
    dot,
    nullspace,
    primitive,
    rank,
    rref,
    solve_rational,
    transpose,
    vector_gcd,
)


class Unbounded(ValueError):
    """The recession cone is nontrivial where a bounded polytope was needed."""


class DimensionMismatch(ValueError):
    pass


class IterationCap(RuntimeError):
    """A dilation search exceeded its cap (see FPROC_HCAP)."""


class OriginOutside(ValueError):
    pass


class NotFullDimensional(ValueError):
    pass


def _num(x):
    """Canonical scalar: int when integral, Fraction otherwise."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


def _introw(u, c):
    """Clear denominators and common factors of the halfspace u·x ≥ −c."""
    den = 1
    for x in list(u) + [c]:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    iu = [int(Fraction(x) * den) for x in u]
    ic = int(Fraction(c) * den)
    g = vector_gcd(iu + [ic])
    if g:
        iu = [x // g for x in iu]
        ic //= g
    return tuple(iu), ic


# --- vertex enumeration -----------------------------------------------------

_VERTEX_CACHE = {}


def _enum_vertices(irows, n):
    """Vertices of {x : u·x + c ≥ 0 for (u, c) in irows}.

    Returns (vertices, unbounded): vertices as Fraction tuples of the
    polytope intersected with a simplex large enough to strictly contain
    every true vertex; unbounded is True when the region leaks out of it.
    """
    key = (n, tuple(irows))
    hit = _VERTEX_CACHE.get(key)
    if hit is not None:
        return hit

    M = 1
    for u, c in irows:
        for x in u:
            M = max(M, abs(x))
        M = max(M, abs(c))
    # Cramer + Hadamard: any true vertex coordinate is a ratio of n×n minors
    # with entries bounded by M, hence at most n^(n/2)·M^n in absolute value.
    R = (isqrt(n**n) + 1) * M**n + 1

    # rows flattened to (c, u_1..u_n) so u·x + c on homogeneous (1, x) is a
    # plain dot product; the first n+1 rows bound the starting simplex
    # {x_i ≥ −R, Σx_i ≤ nR} ⊃ [−R, R]^n
    rows = [(R,) + tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rows.append((n * R,) + (-1,) * n)
    ninit = n + 1
    rows.extend((c,) + tuple(u) for u, c in irows)

    def mask_of(vals):
        m = 0
        for r, x in enumerate(vals):
            if not x:
                m |= 1 << r
        return m

    verts = [(1,) + (-R,) * n]
    for i in range(n):
        verts.append((1,) + tuple((2 * n - 1) * R if j == i else -R for j in range(n)))
    # vals[i][r] = rows[r] · verts[i]; kept in step so new-vertex values are
    # two-term combinations instead of fresh dot products
    vals = [[sum(map(mul, rows[r], v)) for r in range(ninit)] for v in verts]
    tights = [mask_of(va) for va in vals]
    initmask = (1 << ninit) - 1

    for t in range(len(irows)):
        k = ninit + t
        row = rows[k]
        bit = 1 << k
        s = [sum(map(mul, row, v)) for v in verts]
        if min(s, default=0) >= 0:
            for i, si in enumerate(s):
                vals[i].append(si)
                if si == 0:
                    tights[i] |= bit
            continue
        pos = [i for i, x in enumerate(s) if x > 0]
        neg = [i for i, x in enumerate(s) if x < 0]
        zero = [i for i, x in enumerate(s) if x == 0]
        comp = [~tm for tm in tights]
        new = {}
        for i in pos:
            ti, vi, vali, a = tights[i], verts[i], vals[i], s[i]
            for j in neg:
                common = ti & tights[j]
                if common.bit_count() < n - 1:
                    continue
                # combinatorial adjacency: exactly the two endpoints are
                # tight on all of the common constraints
                cnt = 0
                for cm in comp:
                    if not common & cm:
                        cnt += 1
                        if cnt > 2:
                            break
                if cnt > 2:
                    continue
                b = s[j]
                w = tuple(a * y - b * x for x, y in zip(vi, verts[j]))
                g = vector_gcd(w)
                wkey = tuple(x // g for x in w)
                if wkey not in new:
                    valj = vals[j]
                    wv = [(a * q - b * p) // g for p, q in zip(vali, valj)]
                    wv.append(0)
                    new[wkey] = wv
        keep = pos + zero
        nverts, ntights, nvals = [], [], []
        for i in keep:
            va = vals[i]
            va.append(s[i])
            nverts.append(verts[i])
            ntights.append(tights[i] | (bit if s[i] == 0 else 0))
            nvals.append(va)
        for wkey, wv in new.items():
            nverts.append(wkey)
            ntights.append(mask_of(wv))
            nvals.append(wv)
        verts, tights, vals = nverts, ntights, nvals
        if not verts:
            _VERTEX_CACHE[key] = ((), False)
            return (), False

    unbounded = any(ti & initmask for ti in tights)
    points = tuple(
        sorted(
            set(
                tuple(_num(Fraction(x, v[0])) for x in v[1:])
                for v, ti in zip(verts, tights)
                if not ti & initmask
            )
        )
    )
    if len(_VERTEX_CACHE) > 20000:
        _VERTEX_CACHE.clear()
    _VERTEX_CACHE[key] = (points, unbounded)
    return points, unbounded


# --- halfspaces of a hull ---------------------------------------------------

def _inv_rational(M):
    d = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(M)]
    R, piv = rref(aug)
    if piv[:d] != list(range(d)):
        raise DimensionMismatch("singular matrix")
    return [row[d:] for row in R]


_HREP_CACHE = {}


def _hrep_from_points(points, n):
    """(rows, eqs) cutting out conv(points): u·x ≥ −c rows, u·x = r equations."""
    points = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    key = (n, tuple(points))
    hit = _HREP_CACHE.get(key)
    if hit is not None:
        return hit
    res = _hrep_from_points_raw(points, n)
    if len(_HREP_CACHE) > 20000:
        _HREP_CACHE.clear()
    _HREP_CACHE[key] = res
    return res


def _hrep_from_points_raw(points, n):
    if not points:
        return (((0,) * n, -1),), ()
    p0 = points[0]
    diffs = [tuple(x - y for x, y in zip(p, p0)) for p in points[1:]]
    basis = []
    for dvec in diffs:
        if rank(basis + [dvec]) > len(basis):
            basis.append(dvec)
    d = len(basis)
    if d == 0:
        eqs = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            u, c = _introw(e, -p0[i])
            eqs.append((u, -c))
        return (), tuple(eqs)
    eqs = []
    for w in nullspace(basis) if d < n else []:
        r = dot(w, p0)
        u, c = _introw(w, -r)  # w·x = r, normalized
        eqs.append((u, -c))
    if d == n:
        k = len(points)
        cen = tuple(sum(p[i] for p in points) / k for i in range(n))
        shifted = [tuple(x - y for x, y in zip(p, cen)) for p in points]
        polar = [_introw(tuple(-x for x in q), 1) for q in shifted]
        pverts, unb = _enum_vertices(polar, n)
        assert not unb, "polar of a full-dimensional hull must be bounded"
        rows = []
        for y in pverts:
            # facet y·(x − cen) ≤ 1  ⇔  (−y)·x ≥ −(1 + y·cen)
            rows.append(_introw(tuple(-Fraction(t) for t in y), 1 + dot(y, cen)))
        return tuple(sorted(set(rows))), tuple(eqs)
    # positive codimension: work in coordinates on the affine hull
    B = basis  # d×n, full row rank
    Bt = transpose(B)
    tpoints = []
    for p in points:
        y = tuple(x - z for x, z in zip(p, p0))
        sol = solve_rational(Bt, y)
        assert sol is not None
        tpoints.append(sol[0])
    G = _inv_rational([[dot(r1, r2) for r2 in B] for r1 in B])
    G = [[sum(G[i][k] * B[k][j] for k in range(d)) for j in range(n)] for i in range(d)]
    rows = []
    sub, _ = _hrep_from_points(tpoints, d)
    for u, c in sub:
        ua = tuple(sum(Fraction(u[i]) * G[i][j] for i in range(d)) for j in range(n))
        rows.append(_introw(ua, Fraction(c) - dot(ua, p0)))
    return tuple(sorted(set(rows))), tuple(eqs)


# --- lattice point enumeration ----------------------------------------------

def _walk(allrows, lo, hi, out):
    """Append to out every integer point of the box satisfying all rows.

    Interval propagation: at depth i each row narrows the range of x_i
    using the fixed prefix and the worst case of the remaining box.
    """
    n = len(lo)
    if any(l > h for l, h in zip(lo, hi)):
        return
    rest = []
    for u, c in allrows:
        suffix = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            suffix[j] = suffix[j + 1] + max(u[j] * lo[j], u[j] * hi[j])
        rest.append(suffix)

    def rec(i, point, partial):
        if i == n:
            out.append(tuple(point))
            return
        lo_i, hi_i = lo[i], hi[i]
        for r, (u, c) in enumerate(allrows):
            slack = -c - partial[r] - rest[r][i + 1]
            ui = u[i]
            if ui > 0:
                lo_i = max(lo_i, -((-slack) // ui))  # ceil(slack/ui)
            elif ui < 0:
                hi_i = min(hi_i, slack // ui)  # floor for negative divisor
            elif slack > 0:
                return
        for x in range(lo_i, hi_i + 1):
            rec(i + 1, point + [x], [p + u[i] * x for p, (u, c) in zip(partial, allrows)])

    rec(0, [], [0] * len(allrows))


def _points_direct(allrows, lo, hi):
    """Unpruned reference count: test every box point against every row."""
    pts = []
    for p in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(dot(u, p) >= -c for u, c in allrows):
            pts.append(p)
    return pts


# --- the polytope type --------------------------------------------------------

class Polytope:
    """Bounded rational polytope with lazy H- and V-descriptions."""

    def __init__(self, n, rows=None, eqs=None, verts=None, framing=None, cand=None):
        self.n = n
        self._rows = rows
        self._eqs = eqs
        self._verts = verts
        self._cand = cand  # hull-spanning points, possibly non-extreme
        self._framing = framing
        self._points = None

    # construction ---------------------------------------------------------

    @staticmethod
    def from_hrep(A, b, framing=None):
        if len(A) != len(b):
            raise DimensionMismatch(f"{len(A)} rows vs {len(b)} weights")
        n = len(A[0]) if A else 0
        rows = []
        for arow, bj in zip(A, b):
            if len(arow) != n:
                raise DimensionMismatch("ragged rows")
            u, c = _introw(arow, bj)
            if any(u):
                rows.append((u, c))
            elif c < 0:
                return Polytope(n, rows=None, verts=())  # trivially empty
        return Polytope(n, rows=tuple(sorted(set(rows))), framing=framing)

    @staticmethod
    def from_points(points, n=None, assume_extreme=False):
        pts = sorted(set(tuple(_num(Fraction(x)) for x in p) for p in points))
        if pts:
            n = len(pts[0])
        if n is None:
            raise DimensionMismatch("dimension unknown for an empty point set")
        if not pts:
            return Polytope(n, verts=())
        if not assume_extreme and len(pts) > 1:
            p0 = pts[0]
            diffs = [tuple(x - y for x, y in zip(p, p0)) for p in pts[1:]]
            if rank(diffs) < len(pts) - 1:  # not affinely independent
                return Polytope(n, cand=tuple(pts))
        return Polytope(n, verts=tuple(pts))

    # descriptions -----------------------------------------------------------

    def hrep(self):
        """(rows, eqs): rows as (u, c) for u·x ≥ −c, eqs as (u, r) for u·x = r."""
        if self._rows is None:
            pts = self._verts if self._verts is not None else self._cand
            if not pts:
                self._rows, self._eqs = (((0,) * self.n, -1),), ()
            else:
                rows, eqs = _hrep_from_points(pts, self.n)
                self._rows, self._eqs = tuple(rows), tuple(eqs)
        elif self._eqs is None:
            verts = self.vertices()
            eqs, keep = [], []
            for u, c in self._rows:
                if verts and all(dot(u, v) == -c for v in verts):
                    eqs.append((u, -c))
                else:
                    keep.append((u, c))
            self._rows, self._eqs = tuple(keep), tuple(eqs)
        return self._rows, self._eqs

    def vertices(self):
        if self._verts is None:
            if self._cand is not None:
                rows, eqs = self.hrep()
                normals = [u for u, _ in eqs]
                self._verts = tuple(
                    p
                    for p in self._cand
                    if rank(normals + [u for u, c in rows if dot(u, p) == -c])
                    == self.n
                )
            else:
                verts, unbounded = _enum_vertices(
                    [(u, c) for u, c in self._rows], self.n
                )
                if unbounded:
                    raise Unbounded("recession cone is nontrivial")
                self._verts = tuple(verts)
        return self._verts

    def is_empty(self):
        if self._cand:
            return False
        return not self.vertices()

    def dim(self):
        pts = self._verts if self._verts is not None else self._cand
        if pts is None:
            pts = self.vertices()
        if not pts:
            return -1
        p0 = pts[0]
        return rank([tuple(x - y for x, y in zip(p, p0)) for p in pts[1:]])

    def is_lattice(self):
        return all(
            not isinstance(x, Fraction) or x.denominator == 1
            for v in self.vertices()
            for x in v
        )

    def contains(self, x):
        rows, eqs = self.hrep()
        return all(dot(u, x) >= -c for u, c in rows) and all(
            dot(u, x) == r for u, r in eqs
        )

    def interior_contains(self, x):
        """Membership in the topological interior (full-dimensional relint).

        A point strictly inside every stated halfspace has a neighbourhood
        inside all of them, so strictness on the rows is exact whether or not
        implicit equalities have been split off yet.
        """
        if self._rows is not None:
            if self._eqs:
                return False
            return all(dot(u, x) > -c for u, c in self._rows)
        rows, eqs = self.hrep()
        return not eqs and all(dot(u, x) > -c for u, c in rows)

    def relint_contains(self, x):
        """Membership in the interior relative to the affine hull."""
        rows, eqs = self.hrep()
        return all(dot(u, x) == r for u, r in eqs) and all(
            dot(u, x) > -c for u, c in rows
        )

    # lattice counting -------------------------------------------------------

    def _box(self):
        pts = self._verts if self._verts is not None else self._cand
        if pts is None:
            pts = self.vertices()
        lo = [ceil(min(v[i] for v in pts)) for i in range(self.n)]
        hi = [floor(max(v[i] for v in pts)) for i in range(self.n)]
        return lo, hi

    def _allrows(self, strict=False):
        rows, eqs = self.hrep()
        out = []
        for u, c in rows:
            out.append((u, c - 1) if strict else (u, c))
        for u, r in eqs:
            out.append((u, -r))
            out.append((tuple(-x for x in u), r))
        return out

    def lattice_points(self, strict=False):
        """Sorted integer points; strict=True keeps only relative-interior ones."""
        if not strict and self._points is not None:
            return self._points
        if self.is_empty():
            return ()
        lo, hi = self._box()
        out = []
        _walk(self._allrows(strict), lo, hi, out)
        pts = tuple(out)
        if not strict:
            self._points = pts
        return pts

    def lattice_points_direct(self, strict=False):
        """Independent unpruned route, for cross-checking the pruned walk."""
        if self.is_empty():
            return ()
        lo, hi = self._box()
        return tuple(_points_direct(self._allrows(strict), lo, hi))

    def count_l(self):
        return len(self.lattice_points())

    def count_l_star(self):
        return len(self.lattice_points(strict=True))


# --- module operations --------------------------------------------------------

def from_framing(V, a):
    """Δ_a = {x : V^T·x ≥ −a} for a fan matrix V (rays as columns)."""
    m = len(V[0]) if V else 0
    if len(a) != m:
        raise DimensionMismatch(f"{m} rays vs {len(a)} weights")
    rows = transpose(V)
    return Polytope.from_hrep(rows, tuple(a), framing=(V, tuple(a)))


def vertices(P):
    return P.vertices()


def minkowski_sum(P, Q):
    if P.n != Q.n:
        raise DimensionMismatch("ambient dimensions differ")
    if (
        P._framing is not None
        and Q._framing is not None
        and P._framing[0] == Q._framing[0]
    ):
        V = P._framing[0]
        a = tuple(x + y for x, y in zip(P._framing[1], Q._framing[1]))
        return from_framing(V, a)
    sums = [tuple(x + y for x, y in zip(p, q)) for p in P.vertices() for q in Q.vertices()]
    return Polytope.from_points(sums, n=P.n)


def conv_union(polys):
    pts = [v for P in polys for v in P.vertices()]
    return Polytope.from_points(pts, n=polys[0].n)


def dilate(P, k):
    k = Fraction(k)
    if k <= 0:
        raise ValueError("dilation factor must be positive")
    if P._framing is not None:
        V, a = P._framing
        return from_framing(V, tuple(k * Fraction(x) for x in a))
    if P._verts is not None or P._cand is not None:
        pts = P._verts if P._verts is not None else P._cand
        scaled = [tuple(k * Fraction(x) for x in v) for v in pts]
        return Polytope.from_points(scaled, n=P.n, assume_extreme=P._verts is not None)
    rows = [(u, Fraction(c) * k) for u, c in P._rows]
    return Polytope.from_hrep([u for u, c in rows], [c for u, c in rows])


def lattice_points(P):
    return P.lattice_points()


def count_l(P):
    return P.count_l()


def count_l_star(P):
    return P.count_l_star()


def _axis_extreme(pts, n):
    """Drop points that are axis midpoints of two others; hull unchanged.

    A point p with both p+e_i and p−e_i present is never extreme, and every
    vertex of the hull survives, so the convex hull of the survivors is the
    convex hull of the input.
    """
    S = set(pts)
    out = []
    for p in pts:
        for i in range(n):
            q = p[:i] + (p[i] + 1,) + p[i + 1 :]
            r = p[:i] + (p[i] - 1,) + p[i + 1 :]
            if q in S and r in S:
                break
        else:
            out.append(p)
    return out


def integer_part(P):
    """Convex hull of the lattice points of P (possibly empty)."""
    if P._verts is not None and P.is_lattice():
        return P
    verts = P.vertices()
    if verts and P.is_lattice():
        return Polytope(P.n, rows=P._rows, eqs=P._eqs, verts=verts, framing=P._framing)
    pts = P.lattice_points()
    if len(pts) > 4 * P.n:
        pts = _axis_extreme(pts, P.n)
    return Polytope.from_points(pts, n=P.n)


def _zero(n):
    return (0,) * n


def k0(P, cap=64):
    """Least k ≥ 1 with 0 interior to [kP]; (1, "wf") if 0 is on the boundary."""
    z = _zero(P.n)
    if not P.contains(z):
        raise OriginOutside("0 is not in the polytope")
    if not P.interior_contains(z):
        return 1, "wf"
    for k in range(1, cap + 1):
        Q = integer_part(dilate(P, k))
        if not Q.is_empty() and Q.dim() == P.n and Q.relint_contains(z):
            return k, "f"
    raise IterationCap(f"no dilation ≤ {cap} has an interior lattice point at 0")


def h0(parts, cap=64):
    """Least h with every [hΔ_k] positive-dimensional and 0 ∈ relint(Σ_k [hΔ_k]).

    Returns (h, case); the weak case (0 on the boundary of the total
    polytope) short-circuits to (1, "wf").
    """
    total = parts[0]
    for Q in parts[1:]:
        total = minkowski_sum(total, Q)
    z = _zero(total.n)
    if not total.contains(z):
        raise OriginOutside("0 is not in the total polytope")
    if not total.interior_contains(z):
        return 1, "wf"
    for h in range(1, cap + 1):
        hulls = [integer_part(dilate(P, h)) for P in parts]
        if any(Q.is_empty() or Q.dim() == 0 for Q in hulls):
            continue
        cands = [_zero(total.n)]
        for Q in hulls:
            cands = [tuple(x + y for x, y in zip(s, v)) for s in cands for v in Q.vertices()]
        if Polytope.from_points(cands, n=total.n).relint_contains(z):
            return h, "f"
    raise IterationCap(f"no dilation ≤ {cap} satisfies the interior condition")


def h_independent(parts, h):
    """Whether dim(Σ_{k∈S} Δ_k) ≥ |S| + h − 1 for every nonempty subset S."""
    dirs = []
    for P in parts:
        verts = P.vertices()
        p0 = verts[0] if verts else None
        dirs.append([tuple(x - y for x, y in zip(v, p0)) for v in verts[1:]])
    idx = range(len(parts))
    for mask in range(1, 1 << len(parts)):
        chosen = [i for i in idx if mask >> i & 1]
        stacked = [d for i in chosen for d in dirs[i]]
        if rank(stacked) < len(chosen) + h - 1:
            return False
    return True


def is_reflexive(P):
    """Integral vertices, 0 interior, and every facet at lattice distance 1."""
    verts = P.vertices()
    if not verts or not P.is_lattice() or P.dim() != P.n:
        return False
    rows, eqs = P.hrep()
    if eqs:
        return False
    z = _zero(P.n)
    if not P.interior_contains(z):
        return False
    for u, c in rows:
        tight = [v for v in verts if dot(u, v) == -c]
        if not tight:
            continue
        p0 = tight[0]
        if rank([tuple(x - y for x, y in zip(v, p0)) for v in tight[1:]]) != P.n - 1:
            continue  # supporting at a lower face only, not a facet
        if c != vector_gcd(u):
            return False
    return True


# --- serialization ------------------------------------------------------------

def _rat_str(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rat_parse(s):
    return _num(Fraction(s))


def to_dict(P, prefer="hrep"):
    if prefer == "vrep" or (P._rows is None and P._verts is not None):
        return {"vrep": [[_rat_str(x) for x in v] for v in P.vertices()]}
    rows, eqs = P.hrep()
    A = [list(u) for u, c in rows]
    b = [c for u, c in rows]
    for u, r in eqs:
        A.extend([list(u), [-x for x in u]])
        b.extend([-r, r])
    return {"hrep": {"A": A, "b": b}}


def from_dict(d):
    if "hrep" in d:
        A = [[_rat_parse(x) for x in row] for row in d["hrep"]["A"]]
        b = [_rat_parse(x) for x in d["hrep"]["b"]]
        return Polytope.from_hrep(A, b)
    if "vrep" in d:
        return Polytope.from_points([[_rat_parse(x) for x in v] for v in d["vrep"]])
    raise ValueError("polytope dict needs 'hrep' or 'vrep'")
