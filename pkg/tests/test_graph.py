from __future__ import annotations

import random
from itertools import combinations

import pytest

from t1p.families import catalog_small
from t1p.graph import (
    Graph,
    GraphError,
    build_graph,
    components_after_removal,
    is_connected,
    vertex_connectivity_at_least,
)


def k(n):
    return build_graph(combinations(range(n), 2))


def exhaustive_connectivity(g: Graph) -> int:
    """Smallest vertex cut by brute force; n - 1 for complete graphs."""
    verts = g.vertices()
    n = len(verts)
    for size in range(n - 1):
        for cut in combinations(verts, size):
            if len(components_after_removal(g, cut)) > 1:
                return size
    return n - 1


def union_find_parts(g: Graph, removed, cut):
    parent = {v: v for v in g.adj if v not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if u in parent and v in parent and (u, v) not in cut:
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(sorted(p) for p in groups.values())


def random_graph(rng, n, p):
    g = build_graph([e for e in combinations(range(n), 2) if rng.random() < p], range(n))
    return g


def test_build_empty():
    g = build_graph([])
    assert g.n == 0 and g.m == 0


def test_build_k4_dedup():
    g = build_graph([(0, 1), (1, 0), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert g.m == 6
    assert not g.marked
    assert all(g.label(e) == 1 for e in g.edges())


def test_build_h7_degrees():
    g = build_graph([e for e in combinations(range(6), 2) if e not in {(0, 2), (1, 3)}])
    assert sorted(g.degree(v) for v in g.vertices()) == [4, 4, 4, 4, 5, 5]


def test_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        build_graph([(0, 1), (2, 2)])


def test_adjacency_symmetric():
    g = catalog_small("H6")
    for u in g.adj:
        for w in g.adj[u]:
            assert u in g.adj[w]


@pytest.mark.parametrize("kk,expect", [(3, True), (4, False)])
def test_connectivity_k4(kk, expect):
    assert vertex_connectivity_at_least(k(4), kk) is expect


def test_connectivity_octahedron_and_h7():
    assert vertex_connectivity_at_least(catalog_small("H5"), 4)
    assert vertex_connectivity_at_least(catalog_small("H7"), 4)
    assert not vertex_connectivity_at_least(catalog_small("H5"), 5)


def test_connectivity_k_out_of_range():
    with pytest.raises(GraphError):
        vertex_connectivity_at_least(k(4), 8)


def test_connectivity_matches_exhaustive():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(3, 9)
        g = random_graph(rng, n, rng.choice([0.4, 0.6, 0.8]))
        kappa = exhaustive_connectivity(g) if is_connected(g) else 0
        for kk in range(1, 8):
            assert vertex_connectivity_at_least(g, kk) == (kappa >= kk), (g.edges(), kk)


def test_components_examples():
    assert components_after_removal(k(4), [0]) == [[1, 2, 3]]
    path = build_graph([(0, 1), (1, 2)])
    assert components_after_removal(path, [1]) == [[0], [2]]
    h7 = catalog_small("H7")  # x=4, y=5, cycle 0-1-2-3
    parts = components_after_removal(h7, [4, 5], [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert parts == [[0], [1], [2], [3]]


def test_components_match_union_find():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, 0.35)
        removed = set(rng.sample(range(n), rng.randint(0, n // 3)))
        edges = g.edges()
        cut = set(rng.sample(edges, rng.randint(0, len(edges)))) if edges else set()
        assert components_after_removal(g, removed, cut) == union_find_parts(g, removed, cut)


def test_components_order_by_smallest_vertex():
    g = build_graph([(5, 6), (0, 1), (3, 4)])
    assert components_after_removal(g) == [[0, 1], [3, 4], [5, 6]]


def test_label_rules():
    g = k(4)
    g.set_label((0, 1), 4)
    assert g.label((0, 1)) == 4
    g.set_label((0, 2), 2)
    with pytest.raises(GraphError):
        g.set_label((0, 2), 2)
    with pytest.raises(GraphError):
        g.set_label((1, 2), 0)


def test_mark_is_sticky_and_copied():
    g = k(5)
    g.mark_edge((1, 0))
    assert g.is_marked((0, 1))
    h = g.copy()
    assert h.is_marked((0, 1))
    h.mark_edge((2, 3))
    assert not g.is_marked((2, 3))


def test_vertex_ids_stable_after_removal():
    g = k(5)
    g.remove_vertex(2)
    assert g.vertices() == [0, 1, 3, 4]
    assert g.m == 6
