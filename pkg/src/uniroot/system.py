"""Oriented reduction graphs and complexity functions.

A :class:`ReductionSystem` is a finite directed multigraph whose vertices are
objects and whose edges are simplifying moves.  A complexity map assigns each
vertex a tuple of non-negative integers (compared lexicographically) that
strictly decreases along every edge; on a finite system one exists iff the
graph is acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Hashable, Iterable, Mapping, NamedTuple

from .errors import (
    CycleDetected,
    DanglingEndpoint,
    DuplicateVertex,
    MissingVertex,
    ParseError,
    SelfLoop,
    UnknownVertex,
)

VertexId = Hashable


class Edge(NamedTuple):
    id: int
    src: VertexId
    dst: VertexId


@dataclass(frozen=True, eq=False)
class ReductionSystem:
    """Immutable finite reduction graph.

    Vertices keep their declaration order; edge ids are positions in
    ``edges``.  Parallel edges are distinct moves.  Build instances through
    :func:`build_system`, which validates endpoints.
    """

    vertices: tuple
    edges: tuple[Edge, ...]
    labels: Mapping[VertexId, Any] = field(default_factory=dict)
    _out: Mapping[VertexId, tuple[Edge, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        out: dict[VertexId, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        object.__setattr__(self, "_out", MappingProxyType({v: tuple(es) for v, es in out.items()}))
        object.__setattr__(self, "labels", MappingProxyType(dict(self.labels)))

    def __contains__(self, v) -> bool:
        return v in self._out

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ReductionSystem):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and dict(self.labels) == dict(other.labels)
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def out_edges(self, v) -> tuple[Edge, ...]:
        try:
            return self._out[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]

    def is_sink(self, v) -> bool:
        return not self.out_edges(v)

    def sinks(self) -> list:
        return [v for v in self.vertices if not self._out[v]]


def build_system(vertices: Iterable, edges: Iterable[tuple], labels: Mapping | None = None) -> ReductionSystem:
    vs = tuple(vertices)
    seen = set()
    for v in vs:
        if v in seen:
            raise DuplicateVertex(v)
        seen.add(v)
    es = []
    for i, (src, dst) in enumerate(edges):
        if src == dst:
            raise SelfLoop(src)
        if src not in seen or dst not in seen:
            raise DanglingEndpoint(src, dst)
        es.append(Edge(i, src, dst))
    return ReductionSystem(vs, tuple(es), labels or {})


def ordered(vertices: Iterable) -> list:
    """Deterministic order for vertex ids: natural order when comparable."""
    vs = list(vertices)
    try:
        return sorted(vs)
    except TypeError:
        return sorted(vs, key=lambda v: (type(v).__name__, repr(v)))


def successors(sys: ReductionSystem, v) -> list[tuple[int, VertexId]]:
    """Out-edges of ``v`` as ``(edge id, target)`` pairs, ordered by edge id."""
    return [(e.id, e.dst) for e in sys.out_edges(v)]


def find_cycle(sys: ReductionSystem, start=None) -> list | None:
    """Return a closed walk ``[v0, ..., v0]`` if a cycle is reachable.

    With ``start`` only the part of the graph reachable from it is searched;
    otherwise the whole system.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    state = {}
    roots = [start] if start is not None else sys.vertices
    if start is not None:
        sys.out_edges(start)
    for root in roots:
        if state.get(root, WHITE) != WHITE:
            continue
        # stack holds one out-edge iterator per grey vertex on path
        path = [root]
        stack = [iter(sys.out_edges(root))]
        state[root] = GREY
        while stack:
            e = next(stack[-1], None)
            if e is None:
                stack.pop()
                state[path.pop()] = BLACK
                continue
            s = state.get(e.dst, WHITE)
            if s == GREY:
                i = path.index(e.dst)
                return path[i:] + [e.dst]
            if s == WHITE:
                state[e.dst] = GREY
                path.append(e.dst)
                stack.append(iter(sys.out_edges(e.dst)))
    return None


def topological_order(sys: ReductionSystem) -> list:
    """Vertices ordered so that every edge points forward; raises on cycles."""
    indeg = {v: 0 for v in sys.vertices}
    for e in sys.edges:
        indeg[e.dst] += 1
    ready = [v for v in reversed(sys.vertices) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for e in reversed(sys.out_edges(v)):
            indeg[e.dst] -= 1
            if indeg[e.dst] == 0:
                ready.append(e.dst)
    if len(order) != len(sys.vertices):
        raise CycleDetected(find_cycle(sys))
    return order


def synthesize_complexity(sys: ReductionSystem) -> dict:
    """Length of the longest directed path starting at each vertex.

    Zero exactly on sinks.  Raises :class:`CycleDetected` when the system has
    no complexity function.
    """
    c = {}
    for v in reversed(topological_order(sys)):
        c[v] = max((c[e.dst] + 1 for e in sys.out_edges(v)), default=0)
    return c


class ComplexityVerdict(NamedTuple):
    valid: bool
    violations: list[Edge]

    def __bool__(self):
        return self.valid


def _as_tuple(value, v) -> tuple[int, ...]:
    t = (value,) if isinstance(value, int) else tuple(value)
    if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in t):
        raise ValueError(f"complexity of {v!r} must be non-negative integers, got {value!r}")
    return t


def check_complexity(sys: ReductionSystem, c: Mapping) -> ComplexityVerdict:
    """Check that ``c`` strictly decreases along every edge.

    Values are ints or equal-length tuples of non-negative ints, ordered
    lexicographically.
    """
    values = {}
    for v in sys.vertices:
        if v not in c:
            raise MissingVertex(v)
        values[v] = _as_tuple(c[v], v)
    if len({len(t) for t in values.values()}) > 1:
        raise ValueError("complexity tuples must all have the same length")
    bad = [e for e in sys.edges if not values[e.src] > values[e.dst]]
    return ComplexityVerdict(not bad, bad)


# -- text format ---------------------------------------------------------------

def vertex_name(v) -> str:
    if isinstance(v, bytes):
        name = v.decode("ascii")
    else:
        name = str(v)
    if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
        raise ValueError(f"vertex {v!r} has no whitespace-free file name")
    return name


def parse_system(text: str) -> ReductionSystem:
    """Parse ``v <name>`` / ``e <src> <dst>`` records; ``#`` starts a comment line."""
    vertices, edges, known = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v" and len(parts) == 2:
            if parts[1] in known:
                raise ParseError(f"vertex {parts[1]!r} declared twice", lineno)
            known[parts[1]] = lineno
            vertices.append(parts[1])
        elif kind == "e" and len(parts) == 3:
            src, dst = parts[1:]
            if src == dst:
                raise ParseError(f"self-loop at {src!r}", lineno)
            edges.append((src, dst, lineno))
        else:
            raise ParseError(f"cannot parse record {line!r}", lineno)
    for src, dst, lineno in edges:
        for x in (src, dst):
            if x not in known:
                raise ParseError(f"edge references undeclared vertex {x!r}", lineno)
    return build_system(vertices, [(s, d) for s, d, _ in edges])


def format_system(sys: ReductionSystem, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(f"v {vertex_name(v)}" for v in sys.vertices)
    lines.extend(f"e {vertex_name(e.src)} {vertex_name(e.dst)}" for e in sys.edges)
    return "\n".join(lines) + "\n"


def relabel(sys: ReductionSystem, name=vertex_name) -> ReductionSystem:
    """Copy of ``sys`` with vertices renamed to strings; old ids move to labels."""
    m = {v: name(v) for v in sys.vertices}
    if len(set(m.values())) != len(m):
        raise ValueError("renaming is not injective")
    labels = {m[v]: sys.labels.get(v, v) for v in sys.vertices}
    return build_system(m.values(), [(m[e.src], m[e.dst]) for e in sys.edges], labels)
