"""Canonical codes for small vertex-colored undirected multigraphs.

Each connected component is labeled by individualization-refinement: colour
refinement to an equitable ordered partition, then a search over
individualized vertices keeping the least leaf code.  Interchangeable twin
vertices are branched on once.  The graph code is the sorted sequence of
component codes, so equal codes mean isomorphic graphs and vice versa.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _refine(cells: list[list[int]], adj: list[dict[int, int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                counts: dict[int, int] = {}
                for w, m in adj[v].items():
                    counts[cell_of[w]] = counts.get(cell_of[w], 0) + m
                sig.setdefault(tuple(sorted(counts.items())), []).append(v)
            new.extend(sig[k] for k in sorted(sig))
        if len(new) == len(cells):
            return new
        cells = new


def _leaf(cells, colors, adj) -> tuple:
    order = [c[0] for c in cells]
    return (
        tuple(colors[v] for v in order),
        tuple(adj[order[i]].get(order[j], 0) for i in range(len(order)) for j in range(i, len(order))),
    )


def _swappable(u: int, v: int, adj: list[dict[int, int]]) -> bool:
    if adj[u].get(u, 0) != adj[v].get(v, 0):
        return False
    keys = (adj[u].keys() | adj[v].keys()) - {u, v}
    return all(adj[u].get(w, 0) == adj[v].get(w, 0) for w in keys)


def _search(cells, colors, adj) -> tuple:
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        return _leaf(cells, colors, adj)
    cell = cells[target]
    # a transposition automorphism maps one subtree onto the other
    reps: list[int] = []
    for v in cell:
        if not any(_swappable(r, v, adj) for r in reps):
            reps.append(v)
    best = None
    for v in reps:
        split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
        code = _search(_refine(split, adj), colors, adj)
        if best is None or code < best:
            best = code
    return best


def _component_code(verts: list[int], colors, adj) -> str:
    local = {v: i for i, v in enumerate(verts)}
    ladj = [{local[w]: m for w, m in adj[v].items()} for v in verts]
    lcol = [colors[v] for v in verts]
    by_color: dict[int, list[int]] = {}
    for i, c in enumerate(lcol):
        by_color.setdefault(c, []).append(i)
    cells = _refine([by_color[c] for c in sorted(by_color)], ladj)
    cols, tri = _search(cells, lcol, ladj)
    return f"{len(verts)}:{'.'.join(map(str, cols))}:{'.'.join(map(str, tri))}"


def _adjacency(n: int, edges: Iterable[tuple[int, int]]) -> list[dict[int, int]]:
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        if u != v:
            adj[v][u] = adj[v].get(u, 0) + 1
    return adj


def components(n: int, adj: list[dict[int, int]]) -> list[list[int]]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def canonical_code(colors: Sequence[int], edges: Iterable[tuple[int, int]]) -> bytes:
    """Isomorphism-invariant code of a colored multigraph.

    ``colors[i]`` is the non-negative integer colour of vertex ``i``; each
    ``(u, v)`` in ``edges`` is one undirected edge (repeat for multiplicity,
    ``u == v`` for a loop).  The code is ASCII without whitespace.
    """
    n = len(colors)
    adj = _adjacency(n, edges)
    codes = sorted(_component_code(c, colors, adj) for c in components(n, adj))
    return "|".join(codes).encode("ascii")


def decode_code(code: bytes) -> tuple[list[int], list[tuple[int, int]]]:
    """Rebuild one representative ``(colors, edges)`` from a canonical code."""
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    text = code.decode("ascii")
    for part in text.split("|") if text else []:
        n_s, col_s, tri_s = part.split(":")
        n = int(n_s)
        base = len(colors)
        colors.extend(int(x) for x in col_s.split("."))
        tri = [int(x) for x in tri_s.split(".")]
        k = 0
        for i in range(n):
            for j in range(i, n):
                edges.extend([(base + i, base + j)] * tri[k])
                k += 1
    return colors, edges
