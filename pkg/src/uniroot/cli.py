"""Command-line front end.

Exit status: 0 when the analysed property holds, 1 when it fails (equivalence
fails, several roots, inadmissible profile, ...), 2 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys as _sys
import tempfile

from . import handles
from .colors import profile_admissible
from .errors import CycleDetected, UnirootError
from .generate import demo_system, gen_random_dag
from .report import format_report, format_roots
from .roots import find_counterexample, roots, verify_theorem
from .system import ReductionSystem, format_system, parse_system, relabel

OK, FAIL, BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out is None:
        _sys.stdout.write(text)
        _sys.stdout.flush()
        return
    # whole report or nothing: write beside the target, then rename
    d = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".uniroot-")
    with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    os.replace(tmp, out)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _load_system(args) -> ReductionSystem:
    text = _read(args.file)
    if args.handles:
        g = handles.parse_handle_graph(text)
        return relabel(handles.to_reduction_system(g, args.bound))
    return parse_system(text)


def cmd_check(args) -> int:
    sys = _load_system(args)
    report = verify_theorem(sys)
    _emit(format_report(sys, report, args.format, roots=args.format == "machine"), args.out)
    return OK if report.cf.holds and report.ee.holds else FAIL


def cmd_verify(args) -> int:
    sys = _load_system(args)
    report = verify_theorem(sys)
    _emit(format_report(sys, report, args.format), args.out)
    return OK if report.all_unique and report.theorem_holds else FAIL


def cmd_root(args) -> int:
    sys = _load_system(args)
    if args.vertex not in sys:
        raise UsageError(f"unknown vertex {args.vertex!r}")
    try:
        rs = roots(sys, args.vertex)
    except CycleDetected as exc:
        _emit(f"no root: {exc}\n", args.out)
        return FAIL
    if len(rs) == 1:
        _emit(f"{next(iter(rs))}\n", args.out)
        return OK
    _emit(format_roots(rs) + "\n", args.out)
    return FAIL


def cmd_counterexample(args) -> int:
    sys = _load_system(args)
    try:
        found = find_counterexample(sys)
    except CycleDetected as exc:
        _emit(f"no complexity function: {exc}\n", args.out)
        return FAIL
    if found is None:
        _emit("none\n", args.out)
        return OK
    v, rs = found
    _emit(f"{v} {format_roots(rs)}\n", args.out)
    return FAIL


def cmd_cut(args) -> int:
    g = handles.parse_handle_graph(_read(args.file))
    classes = handles.edge_classes_at(g, args.green)
    if len(classes) < 2:
        _emit(f"# {args.green} does not admit cutting\n", args.out)
        return FAIL
    try:
        picked = {int(i) for i in args.part.split(",")}
    except ValueError:
        raise UsageError(f"--part must list class indices, got {args.part!r}") from None
    if not picked <= set(range(len(classes))):
        raise UsageError(f"class indices must lie in 0..{len(classes) - 1}")
    a = [i for k in sorted(picked) for i in classes[k]]
    b = [i for k in range(len(classes)) if k not in picked for i in classes[k]]
    h = handles.cut(g, handles.CutMove.of(args.green, a, b))
    _emit(f"# code {h.code.decode()}\n" + handles.format_handle_graph(h), args.out)
    return OK


def cmd_fullcut(args) -> int:
    g = handles.parse_handle_graph(_read(args.file))
    h = handles.full_cut(g)
    _emit(f"# code {h.code.decode()}\n" + handles.format_handle_graph(h), args.out)
    return OK


def cmd_color_check(args) -> int:
    ok = profile_admissible(args.colors)
    _emit(("admissible" if ok else "inadmissible") + "\n", args.out)
    return OK if ok else FAIL


def cmd_gen(args) -> int:
    if args.kind == "random":
        sys = gen_random_dag(args.vertices, args.p, args.seed)
        header = f"random DAG v={args.vertices} p={args.p} seed={args.seed}"
    else:
        if args.kind == "factor" and (args.n is None or args.n < 1):
            raise UsageError("gen factor needs --n >= 1")
        sys = demo_system(args.kind, args.n)
        header = f"demo {args.kind}" + (f" n={args.n}" if args.kind == "factor" else "")
    _emit(format_system(sys, header), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "machine"], default="text")
    common.add_argument("--out", help="write the report to this path instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=10_000, help="limit on graphs reachable by cutting")

    parser = argparse.ArgumentParser(prog="uniroot", description="Root existence and uniqueness checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def system_cmd(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file")
        p.add_argument("--handles", action="store_true", help="input is a handle-graph file; analyse its cutting system")
        p.set_defaults(func=func)
        return p

    system_cmd("check", cmd_check, "complexity and edge-equivalence verdicts")
    system_cmd("root", cmd_root, "root(s) of one vertex").add_argument("vertex")
    system_cmd("verify", cmd_verify, "full report with every vertex's roots")
    system_cmd("counterexample", cmd_counterexample, "least multi-root vertex")

    p = sub.add_parser("cut", parents=[common], help="cut a handle graph at one green vertex")
    p.add_argument("file")
    p.add_argument("green")
    p.add_argument("--part", default="0", help="comma-separated class indices moved to the first new vertex")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("fullcut", parents=[common], help="maximal cutting of a handle graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_fullcut)

    p = sub.add_parser("color-check", parents=[common], help="admissibility of an intersection profile")
    p.add_argument("colors", nargs="*", type=int)
    p.set_defaults(func=cmd_color_check)

    p = sub.add_parser("gen", parents=[common], help="write a demo or random system")
    p.add_argument("kind", choices=["diamond", "fork", "factor", "handle-demo", "ee-failure", "random"])
    p.add_argument("--n", type=int, help="start value for the factor demo")
    p.add_argument("--vertices", type=int, default=7)
    p.add_argument("--p", type=float, default=0.3)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, UnirootError, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    _sys.exit(main())
