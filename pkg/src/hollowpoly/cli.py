"""``hollowpoly`` command line: exact JSON in, deterministic JSON reports out.

Exit codes: 0 success, 1 malformed input, 2 a precondition of the requested
operation fails (the report then carries the witness), 64 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from hollowpoly import constructions as C
from hollowpoly.classify import classify
from hollowpoly.exactgeo import DegenerateHullError, PreconditionError, convex_hull
from hollowpoly.lattice import enumerate_lattice_points
from hollowpoly.reduce import ReductionError, reduce_to_empty
from hollowpoly.search import (
    TheoremViolation,
    approx,
    ball_scaling_experiment,
    bound_audit_suite,
    extremal_hollow_search,
)
from hollowpoly.segments import longest_lattice_segment, modk_witness, translate_avoiding_sublattice
from hollowpoly.serialize import (
    SCHEMA_VERSION,
    DocumentError,
    dumps,
    hull_summary,
    parse_point_set,
    point_set_document,
    to_jsonable,
)
from hollowpoly.width import flatness_audit, lattice_width

EXIT_OK, EXIT_MALFORMED, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _k_spec(text: str):
    """``--k`` takes an integer or a range ``lo:hi``."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return int(lo), int(hi)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo:hi, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hollowpoly", description="Exact tools for hollow and empty lattice polytopes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, with_input=True):
        sp = sub.add_parser(name, help=help_)
        if with_input:
            sp.add_argument("input", help="point-set JSON document, or - for stdin")
        sp.add_argument("--out", help="write the report here (atomically) instead of stdout")
        return sp

    add("classify", "emptiness, hollowness, simpliciality, general position")
    add("width", "lattice width with its pruning certificate")
    add("reduce", "swap a hollow simplicial polytope down to an empty one")
    sp = add("segments", "longest lattice segment; with --k also a mod-k witness")
    sp.add_argument("--k", type=_k_spec)

    sp = add("construct", "emit a named construction as a point-set document", with_input=False)
    sp.add_argument("name", choices=C.NAMES)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--k", type=_k_spec)
    sp.add_argument("--n", type=int, help="polygon size for polygon_lift")

    sp = add("search", "extremal hollow-simplicial search or the ball scaling fit", with_input=False)
    sp.add_argument("--mode", choices=("exhaustive", "stochastic", "scaling"), required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--box", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--k", type=_k_spec, help="k range lo:hi for --mode scaling")

    sp = sub.add_parser("audit", help="bound audit table, or a flatness audit of one input")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--dim", type=int, help="largest dimension in the bound table")
    sp.add_argument("--k", type=_k_spec, help="largest k in the bound table")
    sp.add_argument("--out")
    return p


def _read_points(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse_point_set(text)


def _cmd_classify(args):
    d, pts, name = _read_points(args.input)
    rep = classify(pts)
    return {"name": name, "d": d, **to_jsonable(rep), "vertices": len(rep.vertices),
            "vertex_list": rep.vertices}


def _cmd_width(args):
    d, pts, name = _read_points(args.input)
    hull = convex_hull(pts)
    if not hull.full_dimensional:
        raise PreconditionError("lattice width needs a full-dimensional hull",
                                {"affine_dim": hull.affine_dim, "equations": hull.equations})
    res = lattice_width(hull)
    return {"name": name, "d": d, "lattice_width": res.value, "direction": res.direction,
            "hyperplanes": res.hyperplane_count, "argmin_vertex": res.argmin_vertex,
            "argmax_vertex": res.argmax_vertex, "certificate": res.certificate}


def _cmd_reduce(args):
    d, pts, name = _read_points(args.input)
    hull = convex_hull(pts)
    final, trace = reduce_to_empty(hull)
    return {"name": name, "d": d, "initial_vertices": trace.initial_vertices,
            "initial_lattice_points": trace.initial_lattice_points,
            "final_vertices": trace.final_vertices, "final": hull_summary(final),
            "steps": trace.steps, "all_simplicial": trace.all_simplicial,
            "findings": trace.findings, "backtracks": trace.backtracks,
            "within_2^d": trace.final_vertices <= 2 ** d}


def _cmd_segments(args):
    d, pts, name = _read_points(args.input)
    hull = convex_hull(pts)
    lattice = enumerate_lattice_points(hull)
    seg = longest_lattice_segment(hull)
    out = {"name": name, "d": d, "lattice_points": len(lattice),
           "longest_segment": {"x": seg.x, "y": seg.y, "step": seg.step, "length": seg.length}}
    if args.k is not None:
        if not isinstance(args.k, int) or args.k < 1:
            raise UsageError("segments --k takes a single positive integer")
        k = args.k
        w = modk_witness(lattice, k)
        out["modk"] = {"k": k, "exceeds_k^d": len(lattice) > k ** d,
                       "witness": None if w is None else
                       {"x": w.x, "y": w.y, "step": w.step, "length": w.length}}
        if k >= 2:
            moved = translate_avoiding_sublattice(hull, k)
            out["modk"]["avoiding_translation"] = None if moved is None else moved[0]
    return out


def _cmd_construct(args):
    params = {"d": args.dim}
    if args.name in ("hypercube_k", "ball_polytope"):
        if not isinstance(args.k, int):
            raise UsageError(f"{args.name} needs --k with a single integer")
        params["k"] = args.k
    if args.name == "polygon_lift":
        if args.n is None:
            raise UsageError("polygon_lift needs --n")
        params["n"] = args.n
    try:
        c = C.build(args.name, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    meta = {"construction": c.name, "params": c.params, "certified_claims": c.certified_claims}
    return point_set_document(c.points, name=f"{c.name}", metadata=meta)


def _cmd_search(args):
    if args.mode == "scaling":
        if not isinstance(args.k, tuple):
            raise UsageError("--mode scaling needs --k lo:hi")
        try:
            return ball_scaling_experiment(args.dim, *args.k).to_dict()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.mode == "stochastic" and args.seed is None:
        raise UsageError("--mode stochastic requires --seed")
    if args.box is None:
        raise UsageError(f"--mode {args.mode} requires --box")
    dump = Path(args.out).resolve().parent if args.out else Path.cwd()
    try:
        rep = extremal_hollow_search(args.dim, args.box, args.mode, args.budget, args.seed, dump)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return rep.to_dict()


def _cmd_audit(args):
    if args.input is None:
        k = args.k if args.k is not None else 6
        if not isinstance(k, int):
            raise UsageError("audit --k takes a single integer")
        try:
            return bound_audit_suite(args.dim if args.dim is not None else 4, k).to_dict()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    d, pts, name = _read_points(args.input)
    hull = convex_hull(pts)
    rep = flatness_audit(hull)
    out = to_jsonable(rep)
    # the reference constant is irrational; keep floats out of the report
    out["reference_approx"] = approx(out.pop("reference"))
    ratio = out.pop("ratio")
    out["ratio_approx"] = None if ratio is None else approx(ratio)
    out["name"] = name
    return out


COMMANDS = {
    "classify": _cmd_classify,
    "width": _cmd_width,
    "reduce": _cmd_reduce,
    "segments": _cmd_segments,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "audit": _cmd_audit,
}


def write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.resolve().parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(report: dict, out: str | None) -> None:
    text = dumps(report)
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status = EXIT_OK
    try:
        body = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hollowpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        print(f"hollowpoly {args.command}: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PreconditionError, DegenerateHullError) as exc:
        status = EXIT_PRECONDITION
        body = {"error": {"kind": "precondition", "message": str(exc),
                          "witness": getattr(exc, "witness", None)}}
    except ReductionError as exc:
        status = EXIT_PRECONDITION
        body = {"error": {"kind": "reduction", "message": str(exc),
                          "findings": exc.trace.findings if exc.trace else []}}
    except TheoremViolation as exc:
        status = EXIT_PRECONDITION
        body = {"error": {"kind": "theorem_violation", "message": str(exc),
                          "points": exc.points,
                          "dump": None if exc.dump_path is None else str(exc.dump_path)}}
        print(f"hollowpoly: {exc}", file=sys.stderr)
    if args.command == "construct" and status == EXIT_OK:
        report = body  # a point-set document, not a report
    else:
        report = {"schema_version": SCHEMA_VERSION, "command": args.command, **body}
    _emit(report, args.out)
    return status


def main(argv=None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
