"""Roots, edge equivalence and the unique-root check.

A root of ``v`` is a sink reachable from ``v``.  Two out-edges of a vertex are
elementarily equivalent when their targets share a root; edge equivalence is
the transitive closure.  On an acyclic system where every vertex has a single
equivalence class of out-edges, every vertex has exactly one root.
:func:`verify_theorem` checks that implication on a concrete system by brute
force instead of trusting it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import CyclicSystem, CycleDetected, MultipleRoots, SourceMismatch
from .system import ReductionSystem, find_cycle, ordered, synthesize_complexity, topological_order


@dataclass(frozen=True)
class RootSet:
    source: object
    roots: frozenset

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(ordered(self.roots))

    def __contains__(self, v):
        return v in self.roots


def _require_acyclic_from(sys: ReductionSystem, v):
    cycle = find_cycle(sys, v)
    if cycle is not None:
        raise CyclicSystem(cycle)


def roots(sys: ReductionSystem, v) -> RootSet:
    """All sinks reachable from ``v`` by forward search."""
    _require_acyclic_from(sys, v)
    seen = {v}
    queue = deque([v])
    found = set()
    while queue:
        u = queue.popleft()
        out = sys.out_edges(u)
        if not out:
            found.add(u)
        for e in out:
            if e.dst not in seen:
                seen.add(e.dst)
                queue.append(e.dst)
    return RootSet(v, frozenset(found))


def root_table(sys: ReductionSystem) -> dict:
    """Root sets of every vertex by well-founded recursion on the edges.

    A sink is its own root; any other vertex collects the roots of its
    successors.  Independent of :func:`roots`, which searches forward.
    """
    table = {}
    for v in reversed(topological_order(sys)):
        out = sys.out_edges(v)
        if not out:
            table[v] = frozenset([v])
        else:
            table[v] = frozenset().union(*(table[e.dst] for e in out))
    return table


def unique_root(sys: ReductionSystem, v):
    rs = roots(sys, v)
    if len(rs) != 1:
        raise MultipleRoots(v, rs.roots)
    (r,) = rs.roots
    return r


def elementary_equivalent(sys: ReductionSystem, e: int, d: int) -> bool:
    """True iff the targets of edges ``e`` and ``d`` have a common root."""
    ee, dd = sys.edge(e), sys.edge(d)
    if ee.src != dd.src:
        raise SourceMismatch(e, d)
    return bool(roots(sys, ee.dst).roots & roots(sys, dd.dst).roots)


@dataclass(frozen=True)
class EdgeEquivalence:
    vertex: object
    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)


def _classes(out, root_of) -> tuple[tuple[int, ...], ...]:
    # union-find over out-edges; sharing a root links two edges
    parent = list(range(len(out)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}
    for i, e in enumerate(out):
        for r in root_of(e.dst):
            j = owner.setdefault(r, i)
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i, e in enumerate(out):
        groups.setdefault(find(i), []).append(e.id)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def edge_equivalence(sys: ReductionSystem, v) -> EdgeEquivalence:
    out = sys.out_edges(v)
    _require_acyclic_from(sys, v)
    return EdgeEquivalence(v, _classes(out, lambda w: roots(sys, w).roots))


class EEVerdict(NamedTuple):
    holds: bool
    witness: tuple | None = None  # (vertex, edge id, edge id)

    def __bool__(self):
        return self.holds


def _ee_from_table(sys, table) -> tuple[EEVerdict, dict]:
    counts = {}
    witness = None
    for v in ordered(sys.vertices):
        classes = _classes(sys.out_edges(v), table.__getitem__)
        counts[v] = len(classes)
        if witness is None and len(classes) > 1:
            # least edge overall, then least edge outside its class
            witness = (v, classes[0][0], min(c[0] for c in classes[1:]))
    return EEVerdict(witness is None, witness), counts


def check_EE(sys: ReductionSystem) -> EEVerdict:
    """Whether all out-edges at every vertex are equivalent.

    On failure the witness is the least vertex with two classes and the
    lexicographically least pair of inequivalent edges there.
    """
    return _ee_from_table(sys, root_table(sys))[0]


class CFVerdict(NamedTuple):
    holds: bool
    complexity: dict | None = None
    cycle: list | None = None

    def __bool__(self):
        return self.holds


@dataclass
class RootReport:
    cf: CFVerdict
    ee: EEVerdict | None
    unique: dict = field(default_factory=dict)  # vertex -> root, or MultipleRoots
    classes: dict = field(default_factory=dict)  # vertex -> number of edge classes
    violations: list = field(default_factory=list)

    @property
    def theorem_holds(self) -> bool:
        return not self.violations

    @property
    def all_unique(self) -> bool:
        return self.cf.holds and not any(isinstance(r, MultipleRoots) for r in self.unique.values())


def verify_theorem(sys: ReductionSystem) -> RootReport:
    """Analyse ``sys`` and cross-check the unique-root implication.

    Root sets come from independent forward searches per vertex; the
    equivalence check uses the recursive root table.  If both properties hold
    but some vertex has several roots, the vertex is listed in
    ``violations`` -- that would mean a bug, not a property of the input.
    """
    try:
        c = synthesize_complexity(sys)
    except CycleDetected as exc:
        return RootReport(CFVerdict(False, cycle=exc.cycle), None)
    ee, counts = _ee_from_table(sys, root_table(sys))
    unique = {}
    for v in ordered(sys.vertices):
        rs = roots(sys, v)
        if len(rs) == 1:
            (unique[v],) = rs.roots
        else:
            unique[v] = MultipleRoots(v, rs.roots)
    violations = []
    if ee.holds:
        violations = [v for v, r in unique.items() if isinstance(r, MultipleRoots)]
    return RootReport(CFVerdict(True, complexity=c), ee, unique, counts, violations)


def find_counterexample(sys: ReductionSystem) -> tuple | None:
    """Multi-root vertex of least synthesized complexity, or ``None``.

    Ties go to the least vertex id.
    """
    c = synthesize_complexity(sys)
    table = root_table(sys)
    bad = [v for v in ordered(sys.vertices) if len(table[v]) > 1]
    if not bad:
        return None
    v = min(bad, key=lambda u: c[u])
    return v, RootSet(v, table[v])
