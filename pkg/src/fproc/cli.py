"""Command-line front end: problem files in, deterministic JSON or markdown out.

Exit codes: 0 on success, 1 when a computation refuses (infeasible degrees,
failed premise, cross-check mismatch, wrong case), 2 on malformed input.
Problem files are JSON or TOML with 1-based column indices; everything is
0-based internally and converted only at this boundary.
"""

import argparse
import json
import os
import sys

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - Python < 3.11
    import tomli as tomllib

from . import hodge as hg
from . import mirror as mr
from . import polytope as pt
from .fprocess import (
    CaseWF,
    InfeasibleDegrees,
    PartitionInvalid,
    PartitionedFraming,
    canonical_projective_framing,
    f_dual,
    is_calibrated,
    weak_projective_framing,
)
from .lattice import class_group
from .reports import BUILDERS, ReportMismatch, build_report

COMPUTE_ERRORS = (
    CaseWF,
    InfeasibleDegrees,
    ReportMismatch,
    hg.CrossCheckMismatch,
    hg.NotGorenstein,
    hg.OutOfHypotheses,
    hg.PremiseFailed,
    mr.EmptyNewton,
    mr.NotHomogeneous,
    pt.IterationCap,
    pt.OriginOutside,
    pt.Unbounded,
)

INPUT_ERRORS = (
    PartitionInvalid,
    pt.DimensionMismatch,
    KeyError,
    TypeError,
    ValueError,
)


class InputError(ValueError):
    """Malformed problem file or flags."""


class ProblemFile:
    """A parsed problem: fan matrix, framing, partition, optional flags."""

    def __init__(self, data):
        try:
            self.name = data.get("name", "problem")
            V = tuple(tuple(int(x) for x in row) for row in data["fan_matrix"])
            a = tuple(int(x) for x in data["framing"])
            partition = tuple(
                tuple(int(i) - 1 for i in block) for block in data["partition"]
            )
            self.expect_case = data.get("expect_case")
            self.h_cap = int(data["h_cap"]) if "h_cap" in data else None
            self.pf = PartitionedFraming(V, a, partition)
        except INPUT_ERRORS as e:
            raise InputError(f"bad problem file: {e}") from e
        if self.expect_case not in (None, "f", "wf"):
            raise InputError(f"expect_case must be 'f' or 'wf', not {self.expect_case!r}")


def _read_source(path):
    if path == "-":
        return sys.stdin.read(), "json"
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(str(e)) from e
    kind = "toml" if path.endswith(".toml") else "json"
    return raw.decode("utf-8"), kind


def load_problem(path):
    """Parse a JSON or TOML problem file (``-`` reads JSON from stdin)."""
    text, kind = _read_source(path)
    try:
        data = tomllib.loads(text) if kind == "toml" else json.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as e:
        raise InputError(f"cannot parse {path}: {e}") from e
    if not isinstance(data, dict):
        raise InputError("problem file must be a table/object")
    return ProblemFile(data)


def _cap(prob):
    if prob is not None and prob.h_cap is not None:
        return prob.h_cap
    env = os.environ.get("FPROC_HCAP")
    return int(env) if env else 64


def _dual_dict(fd):
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


def _checked_dual(prob):
    fd = f_dual(prob.pf, cap=_cap(prob))
    if prob.expect_case is not None and fd.case != prob.expect_case:
        raise CaseWF(f"expected case {prob.expect_case}, computed {fd.case}")
    return fd


def cmd_dual(args):
    prob = load_problem(args.file)
    return _dual_dict(_checked_dual(prob))


def cmd_calibrate(args):
    prob = load_problem(args.file)
    flag, perm = is_calibrated(prob.pf, cap=_cap(prob))
    return {
        "calibrated": flag,
        "perm": [p + 1 for p in perm] if perm is not None else None,
    }


def _mirror_polys(prob, fd):
    if fd.case == "f":
        return [mr.mirror_polynomial_f(fd.Lambda, w) for w in fd.weights]
    return [
        mr.mirror_polynomial_wf(prob.pf.V, block, fd.Lambda, w)
        for block, w in zip(prob.pf.partition, fd.weights)
    ]


def cmd_mirror(args):
    prob = load_problem(args.file)
    fd = _checked_dual(prob)
    polys = _mirror_polys(prob, fd)
    classes = [mr.check_homogeneous(f, fd.Lambda) for f in polys]
    return {
        "case": fd.case,
        "polynomials": [f.to_dict() for f in polys],
        "classes": [[list(c[0]), list(c[1])] for c in classes],
        "modulus_count": mr.modulus_count(polys),
    }


def cmd_lg(args):
    prob = load_problem(args.file)
    fd = _checked_dual(prob)
    lg = mr.lg_model(_mirror_polys(prob, fd), fd.weights)
    return lg.to_dict()


def cmd_hodge(args):
    prob = load_problem(args.file)
    out = {"projective": hg.hodge_projective_ci(prob.pf).to_dict()}
    fd = _checked_dual(prob)
    if fd.case == "f":
        out["mirror_h_O"] = list(hg.hodge_mirror_O(fd))
    return out


def cmd_stringy(args):
    n, d = args.n, args.d
    h_max = args.h_max if args.h_max is not None else n
    phi = hg.phi_a0(n, d, h_max)
    out = {"n": n, "d": d, "phi": list(phi)}
    if h_max >= n:
        out["c_prime"] = list(hg.c_prime(n, d))
    if d == n + 1:
        from .fprocess import projective_fan_matrix

        sd = hg.stringy_data(projective_fan_matrix(n), (1,) * (n + 1))
        out["psi"] = list(sd.psi)
        out["c"] = list(sd.c)
    return out


def cmd_count(args):
    text, kind = _read_source(args.file)
    try:
        data = tomllib.loads(text) if kind == "toml" else json.loads(text)
        P = pt.from_dict(data)
    except INPUT_ERRORS + (json.JSONDecodeError, tomllib.TOMLDecodeError) as e:
        raise InputError(f"bad polytope file: {e}") from e
    if args.expr == "l":
        return {"l": P.count_l()}
    if args.expr == "lstar":
        return {"l_star": P.count_l_star()}
    return {"l": P.count_l(), "l_star": P.count_l_star()}


def cmd_projective(args):
    try:
        degrees = tuple(int(x) for x in args.degrees.split(","))
        sizes = (
            tuple(int(x) for x in args.part_sizes.split(","))
            if args.part_sizes
            else None
        )
    except ValueError as e:
        raise InputError(f"bad degree list: {e}") from e
    build = weak_projective_framing if args.weak else canonical_projective_framing
    pf = build(args.n, degrees, sizes)
    return {
        "name": f"p{args.n}-{'x'.join(str(d) for d in degrees)}",
        "fan_matrix": [list(r) for r in pf.V],
        "framing": list(pf.a),
        "partition": [[i + 1 for i in b] for b in pf.partition],
    }


def cmd_report(args):
    if args.id not in BUILDERS:
        raise InputError(f"unknown report {args.id!r}; choose from {sorted(BUILDERS)}")
    return build_report(args.id)


def _markdown(value, title=None, depth=2):
    """A deterministic, flat-ish markdown rendering of a report dict."""
    lines = []
    if title:
        lines.append("#" * depth + f" {title}")
    if isinstance(value, dict):
        scalars = [(k, v) for k, v in value.items() if not isinstance(v, (dict, list))]
        if scalars:
            lines.append("| key | value |")
            lines.append("| --- | --- |")
            for k, v in scalars:
                lines.append(f"| {k} | {v} |")
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                lines.append("")
                lines.extend(_markdown(v, title=k, depth=depth + 1))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"- `{json.dumps(item, sort_keys=True)}`")
            else:
                lines.append(f"- {item}")
    else:
        lines.append(str(value))
    return lines


def emit(result, fmt):
    if fmt == "markdown":
        return "\n".join(_markdown(result, title=result.get("name") if isinstance(result, dict) else None)) + "\n"
    return json.dumps(result, indent=2, sort_keys=True) + "\n"


def build_parser():
    p = argparse.ArgumentParser(
        prog="fproc",
        description="framed toric varieties: f-duality, mirrors, lattice invariants",
    )
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON (default)")
    fmt.add_argument("--markdown", action="store_true", help="render tables instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("dual", cmd_dual, "framed dual of a problem file").add_argument(
        "file", help="problem file (JSON/TOML, - for stdin)"
    )
    add("calibrate", cmd_calibrate, "double-dual calibration check").add_argument("file")
    add("mirror", cmd_mirror, "mirror Cox polynomials").add_argument("file")
    add("lg", cmd_lg, "Landau-Ginzburg model of the mirror").add_argument("file")
    add("hodge", cmd_hodge, "Hodge numbers of the intersection and its mirror").add_argument("file")

    sp = add("stringy", cmd_stringy, "support-level counts and stringy coefficients")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--h-max", type=int, default=None)

    sp = add("count", cmd_count, "lattice-point counts of a polytope file")
    sp.add_argument("file")
    sp.add_argument("--expr", choices=["l", "lstar", "both"], default="both")

    sp = add("projective", cmd_projective, "emit a projective-space problem file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--degrees", required=True, help="comma-separated part degrees")
    sp.add_argument("--part-sizes", default=None, help="comma-separated block sizes")
    sp.add_argument("--weak", action="store_true", help="weak framing (Σd ≤ n)")

    add("report", cmd_report, "golden worked-example report").add_argument(
        "id", help="|".join(sorted(BUILDERS))
    )
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except COMPUTE_ERRORS as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(emit(result, "markdown" if args.markdown else "json"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
