"""Demo and random reduction systems."""

from __future__ import annotations

import random
from collections import deque
from math import isqrt

from .handles import HandleGraph, to_reduction_system
from .system import ReductionSystem, build_system, relabel


def multiset_name(ms: tuple[int, ...]) -> str:
    return "*".join(map(str, ms)) if ms else "1"


def gen_factor_system(n: int) -> ReductionSystem:
    """Multisets of integers >= 2 reachable from ``{n}`` by splitting ``a*b`` into ``a, b``.

    A factorization analogue of decomposing an object into prime pieces:
    the sinks are exactly the multisets of primes.  Vertex ids are names
    such as ``"2*2*3"`` (``"1"`` for the empty multiset); ``labels`` maps
    them back to sorted tuples.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    start = (n,) if n > 1 else ()
    seen = {start}
    queue = deque([start])
    order, edges = [start], []
    while queue:
        ms = queue.popleft()
        for k, m in enumerate(ms):
            if k and ms[k - 1] == m:
                continue
            rest = ms[:k] + ms[k + 1:]
            for a in range(2, isqrt(m) + 1):
                if m % a:
                    continue
                nxt = tuple(sorted(rest + (a, m // a)))
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    queue.append(nxt)
                edges.append((ms, nxt))
    names = {ms: multiset_name(ms) for ms in order}
    return build_system(
        [names[ms] for ms in order],
        [(names[s], names[d]) for s, d in edges],
        {names[ms]: ms for ms in order},
    )


def gen_random_dag(v: int, p: float, seed: int) -> ReductionSystem:
    """Random DAG on ``v`` vertices; edge ``i -> j`` for ``i < j`` with probability ``p``."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    width = len(str(max(v - 1, 0)))
    names = [f"v{i:0{width}d}" for i in range(v)]
    edges = [(names[i], names[j]) for i in range(v) for j in range(i + 1, v) if rng.random() < p]
    return build_system(names, edges)


def diamond() -> ReductionSystem:
    return build_system("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def fork() -> ReductionSystem:
    return build_system("abc", [("a", "b"), ("a", "c")])


def ee_failure() -> ReductionSystem:
    """An object with two reductions that end at different roots.

    ``pair`` can be reduced along an allowed or a forbidden surface; the two
    branches never meet again, so ``pair`` and its predecessor ``start``
    both have two roots.
    """
    return build_system(
        ["start", "pair", "allowed", "forbidden", "root-a", "root-b"],
        [
            ("start", "pair"),
            ("pair", "allowed"),
            ("pair", "forbidden"),
            ("allowed", "root-a"),
            ("forbidden", "root-b"),
        ],
    )


def handle_demo_graph() -> HandleGraph:
    """Green ``x`` with three link classes; ``y`` and ``z`` hang off single reds."""
    return HandleGraph.build(
        ["r1", "r2", "r3"],
        ["x", "y", "z"],
        [("x", "r1"), ("x", "r2"), ("x", "r3"), ("x", "r3"), ("y", "r1"), ("z", "r2")],
    )


def handle_demo() -> ReductionSystem:
    return relabel(to_reduction_system(handle_demo_graph()))


def demo_system(kind: str, n: int | None = None) -> ReductionSystem:
    if kind == "diamond":
        return diamond()
    if kind == "fork":
        return fork()
    if kind == "ee-failure":
        return ee_failure()
    if kind == "handle-demo":
        return handle_demo()
    if kind == "factor":
        if n is None:
            raise ValueError("factor demo needs n")
        return gen_factor_system(n)
    raise ValueError(f"unknown demo kind {kind!r}")
