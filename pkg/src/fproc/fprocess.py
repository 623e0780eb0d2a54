"""The partitioned f-process: dualization of framed fan matrices.

A partitioned framing is a complete fan matrix V (rays as columns), a
non-negative weight vector a, and a partition of the columns; part k carries
the weights a_k (a restricted to the k-th block).  Dualizing builds the
polytopes Δ_{a_k} = {x : V^T x ≥ −a_k}, takes the convex hull of their union,
dilates until the origin condition holds, and reads off a new framed fan
matrix Λ̌ with induced weights b_k.  Running the construction twice and
comparing with (V, a) is the calibration test.
"""

from __future__ import annotations

from math import gcd

from . import polytope as pt
from .lattice import dot, primitive


class PartitionInvalid(ValueError):
    pass


class CaseWF(ValueError):
    """The construction step requires a framing with 0 interior."""


class InfeasibleDegrees(ValueError):
    pass


class PartitionedFraming:
    """(V, a, partition): weights a ≥ 0 on the columns of V, split into blocks."""

    def __init__(self, V, a, partition):
        self.V = tuple(tuple(row) for row in V)
        self.a = tuple(a)
        self.partition = tuple(tuple(block) for block in partition)
        m = len(self.V[0]) if self.V else 0
        if len(self.a) != m:
            raise PartitionInvalid(f"{m} columns vs {len(self.a)} weights")
        seen = sorted(i for block in self.partition for i in block)
        if seen != list(range(m)):
            raise PartitionInvalid("blocks must partition the column indices")
        if any(x < 0 for x in self.a):
            raise PartitionInvalid("weights must be non-negative")
        for block in self.partition:
            if not any(self.a[i] for i in block):
                raise PartitionInvalid(f"zero weight part {block}")

    @property
    def n(self):
        return len(self.V)

    @property
    def m(self):
        return len(self.a)

    def weight_parts(self):
        """The a_k as full-length vectors (zero off their block)."""
        out = []
        for block in self.partition:
            out.append(tuple(self.a[i] if i in set(block) else 0 for i in range(self.m)))
        return tuple(out)

    def is_strict(self):
        return all(x > 0 for x in self.a)


def validate(pf):
    """Structural diagnostics: primitive spanning rays, complete fan, case tag."""
    issues = []
    cols = list(zip(*pf.V))
    for j, col in enumerate(cols):
        if not any(col):
            issues.append(f"column {j} is zero")
        elif primitive(col) != col:
            issues.append(f"column {j} is not primitive")
    if len({tuple(c) for c in cols}) != len(cols):
        issues.append("duplicate columns")
    import fproc.lattice as la

    if la.rank(pf.V) < pf.n:
        issues.append("rays do not span")
    else:
        hull = pt.Polytope.from_points(cols, n=pf.n)
        if not hull.interior_contains((0,) * pf.n):
            issues.append("rays do not positively span (fan not complete)")
    case = "f" if pf.is_strict() else "wf"
    return issues, case


class DualStage:
    """One dualization: the framed dual fan matrix with induced weights.

    Lambda      n×m̌ fan matrix, columns grouped by part
    blocks      index blocks of Lambda's columns, one per part
    weights     induced weight vectors b_k (length m̌, supported on block k)
    total       b̌ = Σ_k b_k
    h, case     dilation used and case tag ("f" or "wf")
    """

    def __init__(self, Lambda, blocks, weights, h, case, parts, total_polytope, hull):
        self.Lambda = Lambda
        self.blocks = blocks
        self.weights = weights
        self.total = tuple(sum(w[j] for w in weights) for j in range(len(weights[0])))
        self.h = h
        self.case = case
        self.part_polytopes = parts
        self.total_polytope = total_polytope
        self.hull = hull

    @property
    def framing(self):
        return PartitionedFraming(self.Lambda, self.total, self.blocks)

    def weight_patterns(self):
        """b_k restricted to its own block, in column order."""
        return tuple(
            tuple(w[j] for j in block) for w, block in zip(self.weights, self.blocks)
        )


def _column(V, i):
    return tuple(row[i] for row in V)


def _dual_stage(V, blocks, wparts, cap, h_rule):
    n = len(V)
    m = len(V[0])
    parts = [pt.from_framing(V, w) for w in wparts]
    total = pt.from_framing(V, tuple(sum(w[i] for w in wparts) for i in range(m)))

    if h_rule == "parts":
        h, case = pt.h0(parts, cap)
    else:
        h, case = pt.k0(total, cap)

    union = pt.conv_union(parts)
    hull = pt.integer_part(pt.dilate(union, h))
    rays = []
    for v in hull.vertices():
        if any(v):
            r = primitive(v)
            if r not in rays:
                rays.append(r)

    cols = [_column(V, i) for i in range(m)]
    binduced = []  # binduced[j][k]
    for r in rays:
        row = []
        for block in blocks:
            worst = min(dot(cols[i], r) for i in block)
            row.append(max(0, -worst))
        binduced.append(row)

    assignment = []
    for j, r in enumerate(rays):
        ks = [k for k in range(len(blocks)) if binduced[j][k] > 0]
        if len(ks) > 1:
            raise PartitionInvalid(f"ray {r} has positive weight in parts {ks}")
        if ks:
            assignment.append(ks[0])
            continue
        k = next((k for k, P in enumerate(parts) if P.contains(r)), None)
        if k is None:
            raise PartitionInvalid(f"ray {r} belongs to no part")
        assignment.append(k)

    def order_key(j):
        r = rays[j]
        k = assignment[j]
        w = wparts[k]
        nontight = tuple(i for i in range(m) if dot(cols[i], r) != -w[i])
        return (k, nontight, r)

    order = sorted(range(len(rays)), key=order_key)
    Lambda = tuple(tuple(rays[j][i] for j in order) for i in range(n))
    new_blocks = []
    pos = 0
    weights = []
    for k in range(len(blocks)):
        size = sum(1 for j in order if assignment[j] == k)
        new_blocks.append(tuple(range(pos, pos + size)))
        pos += size
        weights.append(tuple(binduced[j][k] for j in order))
    return DualStage(
        Lambda, tuple(new_blocks), tuple(weights), h, case, parts, total, hull
    )


def f_dual(pf, cap=64):
    """Steps (A)–(D): the framed dual (Λ̌_a, b_k) of a partitioned framing."""
    return _dual_stage(pf.V, pf.partition, pf.weight_parts(), cap, h_rule="parts")


class FProcessData:
    def __init__(self, first, second):
        self.first = first
        self.second = second


def f_process(pf, cap=64):
    """Both dualizations; only defined for framings with 0 interior."""
    first = f_dual(pf, cap)
    if first.case != "f":
        raise CaseWF("the second dualization needs a strict framing")
    second = _dual_stage(first.Lambda, first.blocks, first.weights, cap, h_rule="total")
    return FProcessData(first, second)


def is_calibrated(pf, cap=64, data=None):
    """Whether the twice-dualized framing reproduces (V, a) up to column order.

    Returns (flag, perm): perm maps the columns of the second dual onto the
    columns of V, matching both the ray and its weight tuple across parts.
    Pass a precomputed f_process result as data to skip recomputing it.
    """
    fp = data if data is not None else f_process(pf, cap)
    second = fp.second
    m = pf.m
    mm = len(second.total)
    if m != mm:
        return False, None
    wparts = pf.weight_parts()
    targets = {}
    for i in range(m):
        key = (_column(pf.V, i), tuple(w[i] for w in wparts))
        targets.setdefault(key, []).append(i)
    perm = []
    for j in range(mm):
        key = (
            _column(second.Lambda, j),
            tuple(w[j] for w in second.weights),
        )
        avail = targets.get(key)
        if not avail:
            return False, None
        perm.append(avail.pop(0))
    return True, tuple(perm)


# --- projective-space framings ----------------------------------------------


def projective_fan_matrix(n):
    """Rays of projective n-space: the standard basis and their negative sum."""
    return tuple(tuple(1 if i == j else 0 for j in range(n)) + (-1,) for i in range(n))


def _split_sizes(n, degrees, part_sizes, minimum):
    l = len(degrees)
    if any(d < 1 for d in degrees):
        raise InfeasibleDegrees("degrees must be positive")
    if part_sizes is not None:
        sizes = list(part_sizes)
        if len(sizes) != l or sum(sizes) != n + 1:
            raise InfeasibleDegrees(f"part sizes must have length {l} and sum {n + 1}")
        for s, lo in zip(sizes, minimum):
            if s < lo:
                raise InfeasibleDegrees(f"part of size {s} cannot hold its weights")
        return sizes
    return None


def canonical_projective_framing(n, degrees, part_sizes=None):
    """The standard framing of degrees (d_1..d_l) on projective n-space.

    Block k has size m_k (greedy: as large as d_k allows while reserving two
    slots for every later part whose degree permits), weights 1 on all but
    the last block entry, which gets δ_k = d_k − m_k + 1 ≥ 1, so |a_k| = d_k.

    The default sizing never produces a block of size 1 with degree > 1: the
    dual rays of such a block are primitive regardless of the degree, so the
    double dual returns weight 1 where the original had d_k and the process
    cannot be calibrated.  When every size assignment would be of that kind
    (i.e. Σ min(2, d_k) > n+1) this raises InfeasibleDegrees; pass explicit
    part_sizes to build such a framing anyway.
    """
    l = len(degrees)
    if sum(degrees) <= n or l > n + 1:
        raise InfeasibleDegrees(f"need Σd ≥ {n + 1} and at most {n + 1} parts")
    sizes = _split_sizes(n, degrees, part_sizes, minimum=[1] * l)
    if sizes is None:
        lows = [min(2, d) for d in degrees]
        if sum(lows) > n + 1:
            raise InfeasibleDegrees(
                f"degrees {degrees} force a size-1 part of degree > 1, which the"
                " double dual cannot recover; pass part_sizes to override"
            )
        sizes = []
        used = 0
        for k, d in enumerate(degrees):
            reserve = sum(lows[k + 1 :])
            mk = min(d, n + 1 - used - reserve)
            sizes.append(mk)
            used += mk
        if used != n + 1:
            raise InfeasibleDegrees(f"degrees {degrees} cannot fill {n + 1} columns")
    if any(mk > d for mk, d in zip(sizes, degrees)):
        raise InfeasibleDegrees("a part exceeds its degree")
    a = []
    partition = []
    pos = 0
    for mk, d in zip(sizes, degrees):
        delta = d - mk + 1
        a.extend([1] * (mk - 1) + [delta])
        partition.append(tuple(range(pos, pos + mk)))
        pos += mk
    return PartitionedFraming(projective_fan_matrix(n), tuple(a), tuple(partition))


def weak_projective_framing(n, degrees, part_sizes=None):
    """The weak framing for Σd_k ≤ n: d_k ones at the start of block k.

    Leftover room (n+1−Σd) is absorbed by the first block unless part_sizes
    says otherwise.
    """
    l = len(degrees)
    if sum(degrees) > n or l > n + 1:
        raise InfeasibleDegrees(f"need Σd ≤ {n} and at most {n + 1} parts")
    sizes = _split_sizes(n, degrees, part_sizes, minimum=list(degrees))
    if sizes is None:
        sizes = list(degrees)
        sizes[0] += n + 1 - sum(degrees)
    a = []
    partition = []
    pos = 0
    for mk, d in zip(sizes, degrees):
        a.extend([1] * d + [0] * (mk - d))
        partition.append(tuple(range(pos, pos + mk)))
        pos += mk
    return PartitionedFraming(projective_fan_matrix(n), tuple(a), tuple(partition))


def expected_dual_framing(n, degrees, part_sizes=None):
    """Closed-form dual weight patterns for the canonical framing.

    Per part (in dual column order): all ones when m_k = 1 (the zero vertex
    drops out, leaving n columns); otherwise n+1 columns carrying δ_k except
    for value 1 on the marked positions — all of block k when m_k = 2, only
    its last position when m_k ≥ 3.
    """
    pf = canonical_projective_framing(n, degrees, part_sizes)
    patterns = []
    for block, d in zip(pf.partition, degrees):
        mk = len(block)
        delta = d - mk + 1
        if mk == 1:
            patterns.append((1,) * n)
            continue
        marked = set(block) if mk == 2 else {block[-1]}
        patterns.append(tuple(1 if j in marked else delta for j in range(n + 1)))
    return tuple(patterns)
