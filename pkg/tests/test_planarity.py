from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from t1p.families import catalog_small, gen_planar_triangulation, gen_two_star
from t1p.graph import build_graph
from t1p.planarity import (
    EmbeddingError,
    check_rotation,
    euler_genus_zero,
    faces_of,
    is_triangulated_planar,
    planarity_check,
)

CUBE = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7),
        (0, 4), (1, 5), (2, 6), (3, 7)]


def test_k4_planar_with_four_triangles():
    ok, rot = planarity_check(catalog_small("K4"))
    assert ok
    faces = faces_of(rot)
    assert sorted(len(f) for f in faces) == [3, 3, 3, 3]


def test_k5_not_planar():
    ok, rot = planarity_check(catalog_small("K5"))
    assert not ok and rot is None


def test_cube_faces():
    ok, rot = planarity_check(build_graph(CUBE))
    assert ok
    assert sorted(len(f) for f in faces_of(rot)) == [4] * 6


def test_octahedron_faces():
    ok, rot = planarity_check(catalog_small("H5"))
    assert [len(f) for f in faces_of(rot)] == [3] * 8


def test_full_two_star_skeleton_is_cube_plus_poles():
    # dropping one edge of every crossing pair of fG2S_6 leaves a planar graph
    g = gen_two_star("full", 6)
    arches = [(u, v) for u, v in g.edges() if u >= 2 and v >= 2 and
              (v - u) % 6 not in (1, 5)]
    h = build_graph([e for e in g.edges() if e not in arches])
    ok, rot = planarity_check(h)
    assert ok and euler_genus_zero(rot)


def test_doubled_edge_identity_random():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(4, 40)
        g = gen_planar_triangulation(n, seed=rng.randrange(1000))
        ok, rot = planarity_check(g)
        assert ok
        assert sum(len(f) for f in faces_of(rot)) == 2 * g.m


def test_agrees_with_minor_search():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(5, 8)
        g = build_graph([e for e in combinations(range(n), 2) if rng.random() < 0.5], range(n))
        ok, _ = planarity_check(g)
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(n))
        kuratowski = any(_has_minor(h, s) for s in
                         (nx.complete_graph(5), nx.complete_bipartite_graph(3, 3)))
        assert ok == (not kuratowski), g.edges()


def _has_minor(h: nx.Graph, sub: nx.Graph) -> bool:
    """Exhaustive deletion/contraction search down to |sub| vertices."""
    target, need = sub.number_of_nodes(), sub.number_of_edges()
    stack, seen = [h], set()
    while stack:
        cur = stack.pop()
        if cur.number_of_nodes() < target or cur.number_of_edges() < need:
            continue
        key = (frozenset(cur.nodes()), frozenset(frozenset(e) for e in cur.edges()))
        if key in seen:
            continue
        seen.add(key)
        if cur.number_of_nodes() == target:
            if nx.algorithms.isomorphism.GraphMatcher(cur, sub).subgraph_is_monomorphic():
                return True
            continue
        for u, v in list(cur.edges()):
            stack.append(nx.contracted_nodes(cur, u, v, self_loops=False))
        for v in list(cur.nodes()):
            c = cur.copy()
            c.remove_node(v)
            stack.append(c)
    return False


def test_is_triangulated_planar_examples():
    assert is_triangulated_planar(catalog_small("H5"))
    assert not is_triangulated_planar(build_graph(CUBE))
    assert is_triangulated_planar(catalog_small("K4"))
    assert not is_triangulated_planar(catalog_small("K5"))


def test_rotation_deterministic():
    g = gen_planar_triangulation(60, seed=3)
    assert planarity_check(g)[1] == planarity_check(g)[1]


def test_check_rotation_rejects_asymmetric():
    with pytest.raises(EmbeddingError):
        check_rotation({0: [1, 2], 1: [0], 2: [1]})
