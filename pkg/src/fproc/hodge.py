"""Closed-form invariants: Hodge numbers, stringy coefficients, moduli counts.

Everything here reduces to lattice-point counts of framed polytopes and to
binomial identities; every count is exact integer arithmetic.  Where a value
admits two independent derivations (a direct count and a closed form), both
are computed and compared, and a mismatch raises instead of returning.
"""

from itertools import combinations
from math import comb

from .fan import support_value_resolved
from .fprocess import PartitionedFraming, f_dual, projective_fan_matrix
from . import polytope as pt


class OutOfHypotheses(ValueError):
    """The requested invariant is not covered by the implemented formulas."""


class PremiseFailed(ValueError):
    """A lattice-count premise of a theorem fails for this input."""


class CrossCheckMismatch(ValueError):
    """Two routes to the same number disagree."""


class NotGorenstein(ValueError):
    """Stringy diagonal coefficients need a weight total of n+1."""


def _lstar(V, w):
    return pt.from_framing(V, w).count_l_star()


def _vec_sum(vectors, m):
    return tuple(sum(v[i] for v in vectors) for i in range(m))


class HodgeReport:
    """Hodge numbers of a general complete intersection in projective space.

    h_O       h^p(O_Y) for p = 0..dim Y
    h_Omega   h^p(Ω_Y) for p = 0..dim Y
    K_a       the subset-sum count correction (the reported headline value
              excludes the h^{dim}(O_Y) part, which is listed separately)
    K_table   K(a, J) per subset J of parts, as the theorem's summand
    """

    def __init__(self, n, l, h_O, h_Omega, K_a, K_table):
        self.n = n
        self.l = l
        self.h_O = h_O
        self.h_Omega = h_Omega
        self.K_a = K_a
        self.K_table = K_table

    def to_dict(self):
        return {
            "n": self.n,
            "l": self.l,
            "h_O": list(self.h_O),
            "h_Omega": list(self.h_Omega),
            "K_a": self.K_a,
            "K_table": {",".join(str(j + 1) for j in J): v for J, v in self.K_table.items()},
        }


def hodge_projective_ci(pf):
    """Hodge numbers h^p(O_Y) and h^p(Ω_Y) of the general intersection.

    Only the framing polytopes enter: with Σ_J the Minkowski sum of the part
    polytopes over J ⊆ {1..l},

        h^{n-l}(O_Y)   = Σ_{J≠∅} (-1)^{l-|J|} l*(Σ_J)
        h^{n-l-1}(Ω_Y) = Σ_J (-1)^{l-|J|} K(a, J)
        K(a, J) = l*(Σ_J) + Σ_k l*(Δ_{a_k}+Σ_J) - Σ_i l*(Δ_i+Σ_J)

    with Δ_i the polytope of the i-th prime divisor, h^0(O_Y) = 1,
    h^1(Ω_Y) = 1 (absorbed into the K sum when dim Y = 2) and all other
    entries zero.
    """
    V = pf.V
    n, m, l = pf.n, pf.m, len(pf.partition)
    dim = n - l
    if n < 4 or dim < 2:
        raise OutOfHypotheses(f"need n ≥ 4 and n−l ≥ 2, got n={n}, l={l}")
    wparts = pf.weight_parts()

    subsets = []
    for size in range(l + 1):
        subsets.extend(combinations(range(l), size))

    sums = {J: _vec_sum([wparts[j] for j in J], m) for J in subsets}
    lstar_sum = {J: _lstar(V, w) if J else 0 for J, w in sums.items()}

    h_top_O = sum((-1) ** (l - len(J)) * lstar_sum[J] for J in subsets if J)

    K_table = {}
    for J in subsets:
        w = sums[J]
        val = lstar_sum[J]
        for ak in wparts:
            val += _lstar(V, tuple(x + y for x, y in zip(ak, w)))
        for i in range(m):
            ei = tuple(1 if j == i else 0 for j in range(m))
            val -= _lstar(V, tuple(x + y for x, y in zip(ei, w)))
        K_table[J] = val
    K_sum = sum((-1) ** (l - len(J)) * v for J, v in K_table.items())

    h_O = [0] * (dim + 1)
    h_O[0] = 1
    h_O[dim] = h_top_O
    h_Omega = [0] * (dim + 1)
    if dim >= 3:
        h_Omega[1] = 1
        h_Omega[dim - 1] = K_sum
    else:
        h_Omega[1] = 1 + K_sum
    if any(v < 0 for v in h_O) or any(v < 0 for v in h_Omega):
        raise CrossCheckMismatch(f"negative Hodge number: {h_O}, {h_Omega}")
    return HodgeReport(n, l, tuple(h_O), tuple(h_Omega), K_sum - h_top_O, K_table)


def hodge_mirror_O(fdual):
    """h^p(O) of the mirror intersection, premises verified by counting.

    Requires the dual total polytope to have a single interior lattice point
    and every proper partial Minkowski sum of dual part polytopes to have
    none; then the vector is 1 at p = 0 and p = n−l, zero in between.
    """
    if fdual.case != "f":
        raise PremiseFailed("the mirror Hodge vector needs a strict dual framing")
    L = fdual.Lambda
    m = len(L[0])
    l = len(fdual.weights)
    n = len(L)
    total = _lstar(L, fdual.total)
    if total != 1:
        raise PremiseFailed(f"l*(Δ_b̌) = {total}, expected 1")
    for size in range(1, l):
        for J in combinations(range(l), size):
            w = _vec_sum([fdual.weights[j] for j in J], m)
            c = _lstar(L, w)
            if c != 0:
                raise PremiseFailed(f"l*(Σ_{tuple(j + 1 for j in J)} Δ̌) = {c}, expected 0")
    dim = n - l
    if dim < 2:
        raise OutOfHypotheses(f"need n−l ≥ 2, got {dim}")
    vec = [0] * (dim + 1)
    vec[0] = 1
    vec[dim] = 1
    return tuple(vec)


def mirror_hypersurface_h(n, d, r):
    """Hodge data of the transformed mirror hypersurface of degree d in P^n.

    Returns (h¹, level_sum, h_top):
      h¹          = r, the class-group rank of the chosen resolution (n ≥ 4)
      level_sum   = l*(2Δ_{b_0}) − Σ_i l*(Δ_i + Δ_{b_0}), the alternating
                    h^{n-2} − h^{n-1} + h^n on the unresolved dual (+1 if n=3)
      h_top       = h^{n-2} under smoothness: l*(2Δ_{b_0}) + 2r − 5 for n=3,
                    l*(2Δ_{b_0}) − n + r − 2 for n > 3
    """
    if n < 3 or d < n + 1 or r < 1:
        raise OutOfHypotheses(f"need n ≥ 3, d ≥ n+1, r ≥ 1, got ({n}, {d}, {r})")
    delta = d - n
    V = projective_fan_matrix(n)
    a0 = (1,) * n + (delta,)
    fd = f_dual(PartitionedFraming(V, a0, (tuple(range(n + 1)),)))
    L = fd.Lambda
    b0 = fd.total
    m = len(L[0])
    two_b0 = tuple(2 * x for x in b0)
    l2 = _lstar(L, two_b0)
    div_sum = 0
    for i in range(m):
        w = tuple(b0[j] + (1 if j == i else 0) for j in range(m))
        div_sum += _lstar(L, w)
    level_sum = l2 - div_sum + (1 if n == 3 else 0)
    if n == 3:
        h_top = l2 + 2 * r - 5
        h1 = h_top
    else:
        h_top = l2 - n + r - 2
        h1 = r
    return h1, level_sum, h_top


class StringyData:
    """Shell counts of a framed polytope and the coefficients built on them.

    psi   ψ(h) = l(hΔ_a) − l((h−1)Δ_a), the h-th dilation shell
    c     c_h = Σ_j (−1)^{n−h−j} C(n, h+j) ψ(j), the diagonal stringy numbers
    """

    def __init__(self, n, psi, c):
        self.n = n
        self.psi = psi
        self.c = c

    def to_dict(self):
        return {"n": self.n, "psi": list(self.psi), "c": list(self.c) if self.c else None}


def psi_shells(V, a, h_max):
    """Dilation shell counts ψ(0..h_max) of the framing polytope."""
    P = pt.from_framing(V, a)
    counts = [pt.dilate(P, h).count_l() if h else 1 for h in range(h_max + 1)]
    return tuple(counts[h] - counts[h - 1] if h else 1 for h in range(h_max + 1))


def stringy_c(n, psi):
    """Diagonal stringy coefficients from shell counts ψ(0..n)."""
    if len(psi) < n + 1:
        raise ValueError(f"need ψ(0..{n}), got {len(psi)} values")
    return tuple(
        sum((-1) ** (n - h - j) * comb(n, h + j) * psi[j] for j in range(n - h + 1))
        for h in range(n + 1)
    )


def stringy_data(V, a):
    """Shell counts and stringy coefficients of a Gorenstein framing."""
    n = len(V)
    if sum(a) != n + 1:
        raise NotGorenstein(f"|a| = {sum(a)} ≠ {n + 1}")
    psi = psi_shells(V, a, n)
    return StringyData(n, psi, stringy_c(n, psi))


def _binom(a, b):
    """C(a, b) extended by zero to negative upper arguments."""
    return comb(a, b) if a >= 0 else 0


def _shell_class_count(n, s, mu):
    """Lattice points of Z^n with coordinate minimum mu and coordinate sum s."""
    return _binom(s - n * mu + n - 1, n - 1) - _binom(s - n * (mu + 1) + n - 1, n - 1)


def _phi_direct(n, d, h_max):
    """Level counts of the resolved support function by (min, sum) classes.

    On the orbifold cone the support value is Σm + (δ−1)·min(0, min m); off
    it, −min m.  Both depend on m only through (min m, Σm), so each level set
    decomposes into finitely many classes counted by binomials.
    """
    delta = d - n
    out = [1]
    for h in range(1, h_max + 1):
        total = comb(h + n - 1, n - 1)
        for mu in range(-h, 0):
            total += _shell_class_count(n, h - (delta - 1) * mu, mu)
        for s in range(-n * h, delta * h):
            total += _shell_class_count(n, s, -h)
        out.append(total)
    return out


def _phi_recursion(n, d, h_max):
    """The same counts by the closed-form recursion."""
    out = [1]
    for h in range(1, h_max + 1):
        val = comb(n + h * d, n)
        for j in range(1, h + 1):
            for i in range(1, d - n):
                val -= comb(j * d - j + h - i, n - 1)
        val -= sum(out)
        out.append(val)
    return out


def phi_scan(n, d, h_max):
    """Brute-force level counts: walk a box and evaluate the support value.

    The box [−h, (d−1)h]^n contains every lattice point of level ≤ h_max;
    intended for small cross-checks only.
    """
    counts = [0] * (h_max + 1)
    lo, hi = -h_max, (d - 1) * h_max

    def rec(prefix):
        if len(prefix) == n:
            v = support_value_resolved(n, d, prefix)
            if v <= h_max:
                counts[v] += 1
            return
        for x in range(lo, hi + 1):
            rec(prefix + (x,))

    rec(())
    return counts


def phi_a0(n, d, h_max):
    """Support-level counts φ(0..h_max), cross-checked between two routes."""
    if d < n + 1:
        raise OutOfHypotheses(f"need d ≥ n+1, got d = {d}")
    direct = _phi_direct(n, d, h_max)
    rec = _phi_recursion(n, d, h_max)
    if direct != rec:
        raise CrossCheckMismatch(f"φ({n},{d}): direct {direct} vs recursion {rec}")
    return tuple(direct)


def c_prime(n, d):
    """Diagonal stringy coefficients of the resolved weighted quotient.

    Built from φ like c is from ψ; c'_1 must reproduce C(d+n,n) − C(d,n).
    """
    phi = phi_a0(n, d, n)
    c = tuple(
        sum((-1) ** (n - p - h) * comb(n, p + h) * phi[h] for h in range(n - p + 1))
        for p in range(n + 1)
    )
    expect = comb(d + n, n) - comb(d, n)
    if c[1] != expect:
        raise CrossCheckMismatch(f"c'_1 = {c[1]} ≠ C({d + n},{n}) − C({d},{n}) = {expect}")
    return c


def identity_A(n, d):
    """Whether C(2d−1,n) − (n+1)C(d−1,n) equals its binomial expansion."""
    lhs = comb(2 * d - 1, n) - (n + 1) * comb(d - 1, n)
    rhs = sum(
        (-1) ** (n - i) * comb(n + 1, i + 1) * comb(i * d - d + n, n)
        for i in range(1, n + 1)
    )
    return lhs == rhs


def m_Y_hypersurface(n, d):
    """Complex moduli of degree-d hypersurfaces in P^n."""
    return comb(n + d, d) - (n + 1) ** 2


def calabi_yau_h11(n):
    """Kähler count of the resolved anticanonical mirror hypersurface.

    Evaluates the binomial expansion and checks it against the moduli count
    of degree n+1 hypersurfaces, which it must reproduce.
    """
    val = -(n + 1) * comb(n, n - 1) + sum(
        (-1) ** (n - i) * comb(n + 1, i + 1) * comb(i * n + i - 1, n)
        for i in range(1, n + 1)
    )
    expect = m_Y_hypersurface(n, n + 1)
    if val != expect:
        raise CrossCheckMismatch(f"h11({n}) = {val} ≠ m_Y({n},{n + 1}) = {expect}")
    return val


def blow_up_points(n, d):
    """Points blown up by the B-side partial resolution construction."""
    return comb(d, n) - (n + 1) ** 2


def facet_interior_count(n, d):
    """l* of a facet of the degree-d framing simplex: C(d−1, n−1)."""
    return comb(d - 1, n - 1)


def y34_report():
    """The end-to-end worked intersection of degrees (3,4) in P^5."""
    from .reports import build_y34_report

    return build_y34_report()
