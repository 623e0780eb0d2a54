"""Face fans of lattice-framed polytopes and their canonical support functions."""

from __future__ import annotations

from fractions import Fraction

from .lattice import (
    columns,
    columns_equal_up_to_permutation,  # noqa: F401  (re-exported fan-layer op)
    dot,
    primitive,
    rank,
    solve_rational,
)
from .polytope import NotFullDimensional, OriginOutside, Polytope


class NotSimplicial(ValueError):
    pass


class NotComplete(ValueError):
    pass


class Fan:
    """Rays (primitive, lexicographically sorted) and maximal cones by ray index."""

    def __init__(self, rays, max_cones, complete):
        self.rays = tuple(rays)
        self.max_cones = tuple(sorted(tuple(sorted(c)) for c in set(map(tuple, max_cones))))
        self.complete = complete
        self._forms = None
        self._gauge_ok = None

    def is_simplicial(self):
        n = len(self.rays[0]) if self.rays else 0
        return all(
            len(c) == n and rank([self.rays[i] for i in c]) == n for c in self.max_cones
        )

    def to_dict(self):
        return {
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }

    @staticmethod
    def from_dict(d):
        rays = [tuple(r) for r in d["rays"]]
        cones = [tuple(c) for c in d["max_cones"]]
        # completeness is not re-derived from serialized data; assume complete
        return Fan(rays, cones, complete=True)


def face_fan(P):
    """Fan spanned by the proper faces of P, a polytope containing 0.

    Maximal cones sit over the facets not through 0; the fan is complete
    exactly when 0 is interior.
    """
    verts = P.vertices()
    n = P.n
    z = (0,) * n
    if not P.contains(z):
        raise OriginOutside("0 must lie in the polytope")
    if P.dim() != n:
        raise NotFullDimensional(f"polytope has dimension {P.dim()} < {n}")
    rays = sorted({primitive(v) for v in verts if any(v)})
    index = {r: i for i, r in enumerate(rays)}
    rows, _ = P.hrep()
    cones = []
    complete = True
    for u, c in rows:
        if c == 0:
            complete = False
            continue
        tight = [v for v in verts if dot(u, v) == -c]
        if not tight:
            continue
        p0 = tight[0]
        if rank([tuple(x - y for x, y in zip(v, p0)) for v in tight[1:]]) != n - 1:
            continue  # supports a lower face, not a facet
        cones.append(tuple(sorted(index[primitive(v)] for v in tight)))
    return Fan(rays, cones, complete)


def fan_matrix(F):
    """Rays as the columns of an n×m integer matrix, in the fan's ray order."""
    return tuple(tuple(r[i] for r in F.rays) for i in range(len(F.rays[0])))


def _cone_forms(F):
    """Per maximal cone, the integer pair (w, L) of the linear form ⟨w,·⟩/L
    taking value 1 on each of the cone's rays."""
    if F._forms is not None:
        return F._forms
    n = len(F.rays[0])
    forms = []
    for c in F.max_cones:
        if len(c) != n:
            raise NotSimplicial(f"cone {c} has {len(c)} rays in dimension {n}")
        A = [F.rays[i] for i in c]  # rows: solve A·w = 1 for the dual form
        sol = solve_rational(A, (1,) * n)
        if sol is None or sol[1]:
            raise NotSimplicial(f"cone {c} is degenerate")
        w = sol[0]
        den = 1
        for x in w:
            den = den * x.denominator // _gcd(den, x.denominator)
        forms.append((tuple(int(x * den) for x in w), den))
    F._forms = forms
    return forms


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def canonical_support_value(F, m):
    """Value at m of the support function that is 1 on every ray of F.

    F must be complete and simplicial; the value is independent of which
    maximal cone containing m is used.
    """
    if not F.complete:
        raise NotComplete("support function needs a complete fan")
    forms = _cone_forms(F)
    if F._gauge_ok is None:
        # when every maximal-cone form is ≤ 1 on all rays, the function is
        # convex and equals the max of the forms (a pure-integer fast path)
        F._gauge_ok = all(dot(w, r) <= L for (w, L) in forms for r in F.rays)
    if F._gauge_ok:
        best = None
        for w, L in forms:
            val = Fraction(dot(w, m), L)
            if best is None or val > best:
                best = val
        return int(best) if best.denominator == 1 else best
    # general route: locate a cone containing m and evaluate its form
    n = len(F.rays[0])
    for c, (w, L) in zip(F.max_cones, forms):
        A = [[F.rays[i][j] for i in c] for j in range(n)]
        sol = solve_rational(A, m)
        if sol is not None and all(x >= 0 for x in sol[0]):
            val = Fraction(dot(w, m), L)
            return int(val) if val.denominator == 1 else val
    raise NotComplete(f"no maximal cone contains {m}")


def support_value_resolved(n, d, m):
    """Support value at m on the crepant subdivision for degree-d hypersurface
    framings of projective n-space: integral at every lattice point.
    """
    delta = d - n
    s = sum(m)
    mu = min(m)
    if delta * mu + s >= 0:
        return s + (delta - 1) * min(0, mu)
    return -mu
