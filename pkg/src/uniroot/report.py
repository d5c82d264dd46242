"""Text and machine renderings of analysis results."""

from __future__ import annotations

from .errors import MultipleRoots
from .roots import RootReport
from .system import ReductionSystem, ordered, vertex_name


def format_roots(rs) -> str:
    return "{" + ", ".join(vertex_name(r) for r in ordered(rs)) + "}"


def _edge(sys: ReductionSystem, eid: int) -> str:
    e = sys.edge(eid)
    return f"{vertex_name(e.src)}->{vertex_name(e.dst)} [{eid}]"


def cf_lines(report: RootReport) -> list[str]:
    if not report.cf.holds:
        return ["CF fails: cycle " + " -> ".join(map(vertex_name, report.cf.cycle))]
    c = report.cf.complexity
    return ["CF holds", "complexity " + " ".join(f"{vertex_name(v)}={c[v]}" for v in ordered(c))]


def ee_lines(sys: ReductionSystem, report: RootReport) -> list[str]:
    if report.ee is None:
        return ["EE not evaluated (no complexity function)"]
    if report.ee.holds:
        return ["EE holds"]
    v, e, d = report.ee.witness
    return [f"EE fails at {vertex_name(v)}: {_edge(sys, e)} and {_edge(sys, d)} are not equivalent"]


def root_cell(r) -> str:
    return format_roots(r.roots) if isinstance(r, MultipleRoots) else vertex_name(r)


def format_report(sys: ReductionSystem, report: RootReport, fmt: str = "text", roots: bool = True) -> str:
    if fmt == "machine":
        lines = [f"# {line}" for line in cf_lines(report)[:1] + ee_lines(sys, report)]
        for v, r in report.unique.items():
            names = [vertex_name(x) for x in ordered(r.roots)] if isinstance(r, MultipleRoots) else [vertex_name(r)]
            lines.append(f"{vertex_name(v)}\t{','.join(names)}\t{report.classes[v]}")
        return "\n".join(lines) + "\n"
    lines = cf_lines(report) + ee_lines(sys, report)
    if roots:
        for v, r in report.unique.items():
            lines.append(f"root {vertex_name(v)}: {root_cell(r)}")
        if report.violations:
            lines.append("THEOREM VIOLATION at " + ", ".join(map(vertex_name, report.violations)))
    return "\n".join(lines) + "\n"
