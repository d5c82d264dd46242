"""Exit criteria.  Every check runs at its full stated size and tolerance."""

import itertools
import random
import time

import pytest

from uniroot import (
    CycleDetected,
    MultipleRoots,
    build_system,
    canonical_form,
    check_complexity,
    check_EE,
    find_counterexample,
    full_cut,
    profile_admissible,
    synthesize_complexity,
    to_reduction_system,
    unique_root,
    verify_theorem,
)
from uniroot.canon import canonical_code
from uniroot.generate import gen_factor_system, gen_random_dag
from uniroot.handles import random_handle_graph

from acceptance_log import criterion
from oracles import all_dags, brute_roots, isomorphic, maximal_cut_outcomes, trial_division

def exhaustive_dags():
    for n in range(1, 6):
        for edges in all_dags(n):
            yield build_system(range(n), edges)


def random_corpus():
    rng = random.Random(20240501)
    for i in range(10_000):
        v = rng.randint(7, 12)
        p = (0.1, 0.3, 0.6)[i % 3]
        yield gen_random_dag(v, p, rng.randrange(2**32))


def handle_corpus():
    rng = random.Random(777)
    return [random_handle_graph(rng, max_vertices=8, max_links=10) for _ in range(1000)]


def multi_root_vertices(sys):
    return [v for v, r in brute_roots(sys).items() if len(r) > 1]


@criterion(1, "unique roots under EE, all DAGs on <= 5 vertices")
def test_exhaustive_small_dags():
    start = time.perf_counter()
    count = ee_count = 0
    for sys in exhaustive_dags():
        count += 1
        rep = verify_theorem(sys)
        assert rep.theorem_holds
        if check_EE(sys).holds:
            ee_count += 1
            assert all(len(r) == 1 for r in brute_roots(sys).values())
            assert not any(isinstance(r, MultipleRoots) for r in rep.unique.values())
    assert count == 1 + 3 + 25 + 543 + 29281
    assert time.perf_counter() - start < 60
    return f"{count} DAGs, {ee_count} with EE, 0 violations"


@criterion(2, "unique roots under EE and contrapositive, 10^4 random DAGs")
def test_random_dags():
    start = time.perf_counter()
    ee_count = multi = 0
    for sys in random_corpus():
        ee = check_EE(sys)
        bad = multi_root_vertices(sys)
        if ee.holds:
            ee_count += 1
            assert not bad
        if bad:
            multi += 1
            assert not ee.holds
    assert time.perf_counter() - start < 60
    return f"{ee_count} with EE, {multi} with a multi-root vertex"


@criterion(3, "least counterexample has least complexity among multi-root vertices")
def test_least_counterexample():
    failing = 0
    for sys in random_corpus():
        bad = multi_root_vertices(sys)
        found = find_counterexample(sys)
        if not bad:
            assert found is None
            continue
        failing += 1
        v, rs = found
        c = synthesize_complexity(sys)
        assert v in bad and len(rs) >= 2
        assert all(c[v] <= c[u] for u in bad)
    assert failing > 0
    return f"{failing} failing systems"


@criterion(4, "handle-graph confluence over 10^3 random graphs")
def test_handle_confluence():
    start = time.perf_counter()
    cuttable = 0
    for g in handle_corpus():
        outcomes = maximal_cut_outcomes(g)
        full = canonical_form(full_cut(g))
        assert outcomes == {full}
        cuttable += full != canonical_form(g)
    assert time.perf_counter() - start < 300
    return f"{cuttable} graphs admit at least one cut"


@criterion(5, "cutting systems satisfy EE and root at the full cut")
def test_handle_framework():
    for g in handle_corpus():
        sys = to_reduction_system(g, bound=10_000)
        assert check_EE(sys).holds
        assert unique_root(sys, canonical_form(g)) == canonical_form(full_cut(g))


def _perturbed(rng, cols, edges):
    cols, edges = list(cols), list(edges)
    if edges and rng.random() < 0.7:
        i = rng.randrange(len(edges))
        u, v = edges[i]
        edges[i] = (u, rng.randrange(len(cols)))
    else:
        k = rng.randrange(len(cols))
        cols[k] = rng.randrange(3)
    return cols, edges


def _relabel(rng, cols, edges):
    n = len(cols)
    perm = list(range(n))
    rng.shuffle(perm)
    new_cols = [None] * n
    for i, c in enumerate(cols):
        new_cols[perm[i]] = c
    return new_cols, [(perm[v], perm[u]) for u, v in edges]


@criterion(6, "canonical code equality iff isomorphism, 10^3 pairs on <= 6 vertices")
def test_canonical_labeling():
    rng = random.Random(6)
    equal = 0
    for i in range(1000):
        n = rng.randint(1, 6)
        cols = [rng.randrange(3) for _ in range(n)]
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 10))]
        other = (cols, edges) if i % 2 == 0 else _perturbed(rng, cols, edges)
        other = _relabel(rng, *other)
        same_code = canonical_code(cols, edges) == canonical_code(*other)
        assert same_code == isomorphic(cols, edges, *other)
        equal += same_code
    return f"{equal} isomorphic pairs, {1000 - equal} non-isomorphic"


@criterion(7, "colour admissibility table, colours 2..12")
def test_color_table():
    start = time.perf_counter()
    colors = range(2, 13)
    assert profile_admissible([])
    assert not any(profile_admissible([a]) for a in colors)
    for a, b in itertools.product(colors, repeat=2):
        assert profile_admissible([a, b]) == (a == b)
    cases = 0
    for t in itertools.product(colors, repeat=3):
        s = tuple(sorted(t))
        expected = s[:2] == (2, 2) or (s[:2] == (2, 3) and 3 <= s[2] <= 5)
        assert profile_admissible(t) == expected
        cases += 1
    assert time.perf_counter() - start < 1
    return f"{cases} triples"


@criterion(8, "factor demo roots equal trial division for n <= 10^4")
def test_factor_demo():
    start = time.perf_counter()
    for n in range(1, 10_001):
        sys = gen_factor_system(n)
        root = unique_root(sys, sys.vertices[0])
        assert sys.labels[root] == trial_division(n)
        if n <= 200:
            assert check_EE(sys).holds
        assert time.perf_counter() - start < 120


@criterion(9, "synthesized complexity valid; cycles reported with genuine witnesses")
def test_complexity_synthesis():
    acyclic = 0
    systems = itertools.chain(
        exhaustive_dags(),
        random_corpus(),
        (to_reduction_system(g) for g in handle_corpus()),
        (gen_factor_system(n) for n in range(1, 201)),
    )
    for sys in systems:
        assert check_complexity(sys, synthesize_complexity(sys)).valid
        acyclic += 1
    rng = random.Random(99)
    cyclic = 0
    while cyclic < 1000:
        n = rng.randint(2, 10)
        edges = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < 0.25]
        sys = build_system(range(n), edges)
        try:
            synthesize_complexity(sys)
        except CycleDetected as exc:
            cyclic += 1
            w = exc.cycle
            assert w[0] == w[-1] and len(set(w[:-1])) == len(w) - 1
            assert all((a, b) in edges for a, b in zip(w, w[1:]))
    return f"{acyclic} acyclic, {cyclic} cyclic"
