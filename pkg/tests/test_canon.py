import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uniroot.canon import canonical_code, decode_code

from oracles import isomorphic


def random_multigraph(rng, n, colors=3, max_edges=9, loops=True):
    cols = [rng.randrange(colors) for _ in range(n)]
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    return cols, edges


def permuted(rng, cols, edges):
    n = len(cols)
    perm = list(range(n))
    rng.shuffle(perm)
    new_cols = [0] * n
    for i, c in enumerate(cols):
        new_cols[perm[i]] = c
    new_edges = [(perm[u], perm[v]) if rng.random() < 0.5 else (perm[v], perm[u]) for u, v in edges]
    rng.shuffle(new_edges)
    return new_cols, new_edges


def test_single_vertex_ignores_names():
    assert canonical_code([0], []) == canonical_code([0], [])
    assert canonical_code([0], []) != canonical_code([1], [])


def test_path_vs_double_edge():
    # red-green-red path against green linked twice to one red (plus a spare red)
    path = canonical_code([0, 1, 0], [(1, 0), (1, 2)])
    double = canonical_code([0, 1, 0], [(1, 0), (1, 0)])
    assert path != double


def test_empty_graph():
    assert canonical_code([], []) == b""
    assert decode_code(b"") == ([], [])


@pytest.mark.parametrize("seed", range(5))
def test_scrambled_five_vertex_graphs(seed):
    rng = random.Random(seed)
    cols, edges = random_multigraph(rng, 5)
    assert canonical_code(cols, edges) == canonical_code(*permuted(rng, cols, edges))


def test_code_has_no_whitespace():
    rng = random.Random(1)
    for _ in range(50):
        code = canonical_code(*random_multigraph(rng, rng.randint(1, 7)))
        assert not any(chr(b).isspace() for b in code)


def test_decode_round_trip():
    rng = random.Random(2)
    for _ in range(200):
        cols, edges = random_multigraph(rng, rng.randint(1, 7))
        code = canonical_code(cols, edges)
        c2, e2 = decode_code(code)
        assert isomorphic(cols, edges, c2, e2)
        assert canonical_code(c2, e2) == code


def test_symmetric_graphs_stay_fast():
    # twelve interchangeable leaves and a 6-cycle of pendant pairs
    star = canonical_code([0] + [1] * 12, [(0, i) for i in range(1, 13)])
    assert star
    n = 12
    ring = [(i, (i + 1) % n) for i in range(n)]
    assert canonical_code([0, 1] * 6, ring) == canonical_code([1, 0] * 6, ring)


def test_regular_graphs_of_same_degree():
    # 6-cycle vs two triangles: refinement alone cannot split them
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    triangles = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    assert canonical_code([0] * 6, hexagon) != canonical_code([0] * 6, triangles)
    # the 3-prism vs K_{3,3}: both connected and 3-regular
    prism = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    k33 = [(i, j) for i in range(3) for j in range(3, 6)]
    assert canonical_code([0] * 6, prism) != canonical_code([0] * 6, k33)
    assert not isomorphic([0] * 6, prism, [0] * 6, k33)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=200)
def test_invariant_under_relabeling_up_to_ten_vertices(seed):
    rng = random.Random(seed)
    cols, edges = random_multigraph(rng, rng.randint(1, 10), colors=2, max_edges=14)
    assert canonical_code(cols, edges) == canonical_code(*permuted(rng, cols, edges))
