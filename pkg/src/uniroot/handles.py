"""Red/green handle graphs and the cutting calculus.

Red vertices stand for root components, green vertices for handle pieces;
each link attaches a green vertex to a red one.  Cutting splits a green
vertex in two so that the graph gains a component.  The links at a green
vertex ``x`` fall into classes by the component of ``G - x`` that holds their
red end, and a cut is legal exactly when each side is a union of classes.
Splitting every green vertex by its classes, repeated to a fixpoint, gives
the same graph as any maximal sequence of single cuts.

Green vertices left without links are dropped; isolated red vertices stay.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .canon import canonical_code, decode_code
from .errors import BoundExceeded, InvalidCut, NotGreen, ParseError
from .system import ReductionSystem, build_system

RED, GREEN = 0, 1


@dataclass(frozen=True, eq=False)
class HandleGraph:
    """Bipartite red/green multigraph, compared up to isomorphism.

    ``links`` holds ``(green, red)`` pairs; a link is addressed by its index.
    """

    reds: tuple[str, ...]
    greens: tuple[str, ...]
    links: tuple[tuple[str, str], ...]

    def __post_init__(self):
        names = self.reds + self.greens
        if len(set(names)) != len(names):
            raise ValueError("vertex names must be distinct")
        gs, rs = set(self.greens), set(self.reds)
        for g, r in self.links:
            if g not in gs or r not in rs:
                raise ValueError(f"link ({g}, {r}) must join a green vertex to a red one")
        used = {g for g, _ in self.links}
        if used != gs:
            object.__setattr__(self, "greens", tuple(g for g in self.greens if g in used))

    @classmethod
    def build(cls, reds: Iterable[str], greens: Iterable[str], links: Iterable[tuple[str, str]]) -> HandleGraph:
        return cls(tuple(reds), tuple(greens), tuple((g, r) for g, r in links))

    @cached_property
    def code(self) -> bytes:
        index = {v: i for i, v in enumerate(self.reds + self.greens)}
        colors = [RED] * len(self.reds) + [GREEN] * len(self.greens)
        return canonical_code(colors, [(index[g], index[r]) for g, r in self.links])

    def __eq__(self, other):
        if not isinstance(other, HandleGraph):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def links_at(self, x: str) -> list[int]:
        return [i for i, (g, _) in enumerate(self.links) if g == x]

    def component_count(self) -> int:
        parent = {v: v for v in self.reds + self.greens}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for g, r in self.links:
            parent[find(g)] = find(r)
        return sum(1 for v in parent if find(v) == v)


@dataclass(frozen=True)
class CutMove:
    at: str
    split: tuple[frozenset, frozenset] = field()

    @classmethod
    def of(cls, at: str, part: Iterable[int], rest: Iterable[int]) -> CutMove:
        return cls(at, (frozenset(part), frozenset(rest)))


def canonical_form(g: HandleGraph) -> bytes:
    return g.code


def from_code(code: bytes) -> HandleGraph:
    colors, edges = decode_code(code)
    names = [("r" if c == RED else "g") + str(i) for i, c in enumerate(colors)]
    links = []
    for u, v in edges:
        g, r = (u, v) if colors[u] == GREEN else (v, u)
        links.append((names[g], names[r]))
    return HandleGraph.build(
        [n for n, c in zip(names, colors) if c == RED],
        [n for n, c in zip(names, colors) if c == GREEN],
        links,
    )


def _check_green(g: HandleGraph, x: str):
    if x not in g.greens:
        raise NotGreen(x)


def edge_classes_at(g: HandleGraph, x: str) -> tuple[tuple[int, ...], ...]:
    """Link indices at ``x`` grouped by the component of ``G - x`` of their red end."""
    _check_green(g, x)
    parent = {r: r for r in g.reds}
    parent.update((y, y) for y in g.greens if y != x)

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for y, r in g.links:
        if y != x:
            parent[find(y)] = find(r)
    groups: dict[str, list[int]] = {}
    for i in g.links_at(x):
        groups.setdefault(find(g.links[i][1]), []).append(i)
    return tuple(sorted(tuple(c) for c in groups.values()))


def admits_cutting(g: HandleGraph, x: str) -> bool:
    return len(edge_classes_at(g, x)) >= 2


def _fresh(taken: set, base: str) -> str:
    i = 1
    while f"{base}.{i}" in taken:
        i += 1
    name = f"{base}.{i}"
    taken.add(name)
    return name


def _split_greens(g: HandleGraph, parts: dict[str, list[Iterable[int]]]) -> HandleGraph:
    # parts maps a green vertex to the link groups it is split into
    taken = set(g.reds + g.greens)
    owner = {}
    greens = []
    for x in g.greens:
        if x not in parts:
            greens.append(x)
            continue
        for group in parts[x]:
            name = _fresh(taken, x)
            greens.append(name)
            owner.update((i, name) for i in group)
    links = [(owner.get(i, y), r) for i, (y, r) in enumerate(g.links)]
    return HandleGraph.build(g.reds, greens, links)


def cut(g: HandleGraph, m: CutMove) -> HandleGraph:
    """Split ``m.at`` into two green vertices carrying the two link groups."""
    x = m.at
    classes = edge_classes_at(g, x)
    a, b = m.split
    at_x = set(g.links_at(x))
    if not a or not b or a & b or (a | b) != at_x:
        raise InvalidCut(f"split at {x!r} must partition its links {sorted(at_x)} into two non-empty parts")
    for c in classes:
        if not (set(c) <= a or set(c) <= b):
            raise InvalidCut(f"split at {x!r} separates links {list(c)} that stay connected without {x!r}")
    out = _split_greens(g, {x: [sorted(a), sorted(b)]})
    assert out.component_count() == g.component_count() + 1
    return out


def cut_moves(g: HandleGraph) -> list[CutMove]:
    """Every legal single cut of ``g``."""
    moves = []
    for x in g.greens:
        classes = edge_classes_at(g, x)
        k = len(classes)
        # class 0 stays on the first side; any non-empty subset of the rest moves
        for mask in range(1, 1 << (k - 1)):
            b = [i for j in range(1, k) if mask >> (j - 1) & 1 for i in classes[j]]
            a = [i for j in range(k) if not (j and mask >> (j - 1) & 1) for i in classes[j]]
            moves.append(CutMove.of(x, a, b))
    return moves


def full_cut(g: HandleGraph) -> HandleGraph:
    """Split every green vertex by its link classes until none admits cutting."""
    while True:
        parts = {}
        for x in g.greens:
            classes = edge_classes_at(g, x)
            if len(classes) > 1:
                parts[x] = classes
        if not parts:
            return g
        g = _split_greens(g, parts)


def to_reduction_system(g: HandleGraph, bound: int = 10_000) -> ReductionSystem:
    """Reduction system of all graphs reachable from ``g`` by single cuts.

    Vertices are canonical codes (in breadth-first order from ``g``), one edge
    per legal cut move, and ``labels`` maps each code to a representative
    graph.
    """
    start = g.code
    graphs = {start: g}
    queue = deque([start])
    edges = []
    while queue:
        src = queue.popleft()
        for m in cut_moves(graphs[src]):
            h = cut(graphs[src], m)
            if h.code not in graphs:
                if len(graphs) >= bound:
                    raise BoundExceeded(bound)
                graphs[h.code] = h
                queue.append(h.code)
            edges.append((src, h.code))
    return build_system(list(graphs), edges, graphs)


def random_handle_graph(rng: random.Random, max_vertices: int = 8, max_links: int = 10) -> HandleGraph:
    n = rng.randint(2, max_vertices)
    n_red = rng.randint(1, n - 1)
    reds = [f"r{i}" for i in range(n_red)]
    greens = [f"g{i}" for i in range(n - n_red)]
    links = [(rng.choice(greens), rng.choice(reds)) for _ in range(rng.randint(0, max_links))]
    return HandleGraph.build(reds, greens, links)


# -- text format ---------------------------------------------------------------

def parse_handle_graph(text: str) -> HandleGraph:
    """Parse ``r <name>``, ``g <name>`` and ``l <green> <red>`` records."""
    reds, greens, links = [], [], []
    color = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] in ("r", "g") and len(parts) == 2:
            if parts[1] in color:
                raise ParseError(f"vertex {parts[1]!r} declared twice", lineno)
            color[parts[1]] = parts[0]
            (reds if parts[0] == "r" else greens).append(parts[1])
        elif parts[0] == "l" and len(parts) == 3:
            links.append((parts[1], parts[2], lineno))
        else:
            raise ParseError(f"cannot parse record {line!r}", lineno)
    for gname, rname, lineno in links:
        if color.get(gname) != "g":
            raise ParseError(f"{gname!r} is not a declared green vertex", lineno)
        if color.get(rname) != "r":
            raise ParseError(f"{rname!r} is not a declared red vertex", lineno)
    return HandleGraph.build(reds, greens, [(gn, rn) for gn, rn, _ in links])


def format_handle_graph(g: HandleGraph) -> str:
    lines = [f"r {r}" for r in g.reds] + [f"g {x}" for x in g.greens]
    lines += [f"l {x} {r}" for x, r in g.links]
    return "\n".join(lines) + "\n"
