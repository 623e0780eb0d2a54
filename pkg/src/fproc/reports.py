"""Golden end-to-end reports for the worked example families.

Each builder runs the full pipeline — framing, dual, mirror polynomials,
Landau-Ginzburg model, Hodge and stringy invariants — and assembles one
deterministic dict.  Every numeric entry is recomputed on the spot; the
builders raise instead of emitting a report that contradicts itself.
"""

from fractions import Fraction
from math import comb

from . import hodge as hg
from . import mirror as mr
from . import polytope as pt
from .fprocess import (
    canonical_projective_framing,
    f_dual,
    f_process,
    is_calibrated,
    weak_projective_framing,
)
from .lattice import class_group


class ReportMismatch(ValueError):
    """An internal consistency check of a report builder failed."""


def _check(cond, what):
    if not cond:
        raise ReportMismatch(what)


def _frac(x):
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _vertices(P):
    verts = sorted(tuple(Fraction(c) for c in v) for v in P.vertices())
    return [[_frac(c) for c in v] for v in verts]


def _mirror_parts(pf, fd):
    """The dual-part polynomials, by the route matching the dual case."""
    if fd.case == "f":
        return [mr.mirror_polynomial_f(fd.Lambda, w) for w in fd.weights]
    return [
        mr.mirror_polynomial_wf(pf.V, block, fd.Lambda, w)
        for block, w in zip(pf.partition, fd.weights)
    ]


def _poly_section(pf, fd):
    polys = _mirror_parts(pf, fd)
    classes = [mr.check_homogeneous(f, fd.Lambda) for f in polys]
    lg = mr.lg_model(polys, fd.weights)
    _check(lg.q_total == (0,) * lg.num_vars, f"q exponents sum to {lg.q_total}")
    return polys, {
        "polynomials": [f.to_dict() for f in polys],
        "classes": [[list(c[0]), list(c[1])] for c in classes],
        "classes_distinct": len(set(classes)) == len(classes),
        "lg": lg.to_dict(),
        "modulus_count": mr.modulus_count(polys),
    }


def _dual_section(fd):
    return {
        "case": fd.case,
        "h": fd.h,
        "fan_matrix": [list(r) for r in fd.Lambda],
        "blocks": [[j + 1 for j in b] for b in fd.blocks],
        "weights": [list(w) for w in fd.weights],
        "weight_patterns": [list(w) for w in fd.weight_patterns()],
        "total": list(fd.total),
        "class_rank": class_group(fd.Lambda).rank,
    }


def build_y34_report():
    """Degrees (3,4) in P^5: the complete worked intersection."""
    n, degrees = 5, (3, 4)
    pf = canonical_projective_framing(n, degrees)
    fp = f_process(pf)
    fd = fp.first
    flag, _ = is_calibrated(pf, data=fp)
    _check(flag, "the (3,4) framing must calibrate")
    _check(fd.total == (1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1), f"b̌ = {fd.total}")

    duals = [pt.from_framing(fd.Lambda, w) for w in fd.weights]
    dims = tuple(P.dim() for P in duals)
    sum_dim = pt.minkowski_sum(duals[0], duals[1]).dim()
    indep = max(
        h for h in range(1, 7) if pt.h_independent(duals, h)
    )

    rep = hg.hodge_projective_ci(pf)
    _check(rep.h_O[3] == 6 and rep.h_Omega[2] == 224 and rep.K_a == 218, "Hodge table")

    # the seven lattice counts of the working table
    V, a = pf.V, pf.a
    a1, a2 = pf.weight_parts()
    counts = {
        "l*(Delta_a)": pt.from_framing(V, a).count_l_star(),
        "l*(2Delta_a1)": pt.from_framing(V, tuple(2 * x for x in a1)).count_l_star(),
        "l*(2Delta_a2)": pt.from_framing(V, tuple(2 * x for x in a2)).count_l_star(),
        "l*(Delta_i+Delta_a)": [
            pt.from_framing(
                V, tuple(x + (1 if j == i else 0) for j, x in enumerate(a))
            ).count_l_star()
            for i in range(6)
        ],
        "l*(Delta_a1+Delta_a)": pt.from_framing(
            V, tuple(x + y for x, y in zip(a1, a))
        ).count_l_star(),
        "l*(Delta_a2+Delta_a)": pt.from_framing(
            V, tuple(x + y for x, y in zip(a2, a))
        ).count_l_star(),
    }
    _check(counts["l*(Delta_a)"] == 6, "l*(Δ_a)")
    _check(counts["l*(2Delta_a1)"] == 1 and counts["l*(2Delta_a2)"] == 21, "l*(2Δ)")
    _check(counts["l*(Delta_i+Delta_a)"] == [21] * 6, "l*(Δ_i+Δ_a)")
    _check(counts["l*(Delta_a1+Delta_a)"] == 126, "l*(Δ_a1+Δ_a)")
    _check(counts["l*(Delta_a2+Delta_a)"] == 252, "l*(Δ_a2+Δ_a)")

    mirror_O = hg.hodge_mirror_O(fd)
    polys, poly_sec = _poly_section(pf, fd)
    _check(poly_sec["modulus_count"] == 1, "mirror modulus count")

    cp = hg.c_prime(5, 7)
    m_components = (
        comb(3 + 5, 3) - 1,
        comb(4 + 5, 4) - 1,
        comb(1 + 5, 1),
        (5 + 1) ** 2 - 1,
    )
    m_Y = m_components[0] + m_components[1] - m_components[2] - m_components[3]
    _check(m_Y == 139, f"m_Y = {m_Y}")

    dual_sec = _dual_section(fd)
    _check(dual_sec["class_rank"] == 7, "dual class rank")

    return {
        "name": "y34",
        "problem": {"n": n, "degrees": list(degrees), "a": list(a),
                    "partition": [[i + 1 for i in b] for b in pf.partition]},
        "calibrated": flag,
        "dual": dual_sec,
        "dual_part_polytopes": {
            "vertices": [_vertices(P) for P in duals],
            "dims": list(dims),
            "sum_dim": sum_dim,
            "max_h_independence": indep,
        },
        "lattice_counts": counts,
        "hodge": rep.to_dict(),
        "mirror_h_O": list(mirror_O),
        "mirror": poly_sec,
        "c_prime_5_7": list(cp),
        "m_Y": {"components": list(m_components), "value": m_Y},
        "b_side_gap": {
            "h1_mirror": cp[1],
            "m_Y": m_Y,
            "open": cp[1] > m_Y,
        },
    }


def _build_wf_report(name, degrees):
    """Shared builder for the weak-framing bi-degree examples in P^5."""
    pf = weak_projective_framing(5, degrees)
    fd = f_dual(pf)
    _check(fd.case == "wf", f"{name} should be a weak dual")
    polys, poly_sec = _poly_section(pf, fd)
    _check(poly_sec["modulus_count"] == 1, "modulus count")
    return {
        "name": name,
        "problem": {"n": 5, "degrees": list(degrees), "a": list(pf.a),
                    "partition": [[i + 1 for i in b] for b in pf.partition]},
        "dual": _dual_section(fd),
        "mirror": poly_sec,
    }


def build_y23_report():
    """Degrees (2,3) in P^5: the weak-framing worked example."""
    rep = _build_wf_report("y23", (2, 3))
    want = {
        (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
        (2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0),
        (0, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0),
        (1, 1, 3, 1, 1, 1, 0, 0, 3, 0, 0, 0),
    }
    got = {tuple(e) for e in rep["mirror"]["polynomials"][0]["monomials"]}
    _check(got == want, "y23 first mirror polynomial")
    return rep


def build_y13_report():
    """Degrees (1,3) in P^5: the weak-framing example with a zero column."""
    rep = _build_wf_report("y13", (1, 3))
    want = {
        (1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
        (2, 1, 1, 1, 1, 0, 3, 0, 0, 0, 0),
        (1, 2, 1, 1, 1, 0, 0, 3, 0, 0, 0),
        (0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0),
    }
    got = {tuple(e) for e in rep["mirror"]["polynomials"][0]["monomials"]}
    _check(got == want, "y13 first mirror polynomial")
    return rep


def _build_hypersurface_report(name, n, d):
    """Shared builder for the degree-d hypersurface in P^n."""
    delta = d - n
    pf = canonical_projective_framing(n, (d,))
    fp = f_process(pf)
    fd = fp.first
    flag, _ = is_calibrated(pf, data=fp)
    _check(flag, "hypersurface framings calibrate")
    _check(fd.total == (delta,) * n + (1,), f"b = {fd.total}")
    polys, poly_sec = _poly_section(pf, fd)
    _check(poly_sec["modulus_count"] == 1, "modulus count")

    phi = hg.phi_a0(n, d, n)
    cp = hg.c_prime(n, d)
    r = cp[1]
    h1, level_sum, h_top = hg.mirror_hypersurface_h(n, d, r)
    out = {
        "name": name,
        "problem": {"n": n, "degrees": [d], "a": list(pf.a),
                    "partition": [[i + 1 for i in b] for b in pf.partition]},
        "calibrated": flag,
        "dual": _dual_section(fd),
        "mirror": poly_sec,
        "phi": list(phi),
        "c_prime": list(cp),
        "identity_A": hg.identity_A(n, d),
        "m_Y": hg.m_Y_hypersurface(n, d),
        "facet_interior_count": hg.facet_interior_count(n, d),
        "mirror_h": {"h1": h1, "level_sum": level_sum, "h_top": h_top},
    }
    return out


def build_quintic_report():
    """The quintic threefold: the Calabi-Yau hypersurface in P^4."""
    rep = _build_hypersurface_report("quintic", 4, 5)
    pf = canonical_projective_framing(4, (5,))
    hrep = hg.hodge_projective_ci(pf)
    _check(hrep.h_Omega[2] == 101 and hrep.K_a == 100, "quintic Hodge numbers")
    _check(rep["m_Y"] == 101 == hg.calabi_yau_h11(4), "m_Y two ways")
    sd = hg.stringy_data(pf.V, pf.a)
    rep["hodge"] = hrep.to_dict()
    rep["mirror_h_O"] = list(hg.hodge_mirror_O(f_dual(pf)))
    rep["stringy"] = sd.to_dict()
    return rep


def build_hyp_n4_d6_report():
    """The degree-6 hypersurface in P^4: the first non-reflexive case."""
    rep = _build_hypersurface_report("hyp-n4-d6", 4, 6)
    _check(rep["c_prime"] == [1, 195, 645, 195, 1], "c' table")
    _check(rep["facet_interior_count"] == comb(5, 3), "facet count")
    return rep


BUILDERS = {
    "y34": build_y34_report,
    "y23": build_y23_report,
    "y13": build_y13_report,
    "quintic": build_quintic_report,
    "hyp-n4-d6": build_hyp_n4_d6_report,
}


def build_report(name):
    """Build the named golden report; raises KeyError for unknown names."""
    return BUILDERS[name]()
