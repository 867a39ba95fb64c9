from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from t1p.enumeration import (
    bridge_pattern,
    bridge_set,
    canonical_cycle,
    cliques_up_to,
    crossable_index,
    crossable_set,
    list_induced_cycles,
    list_maximal_cliques_4_5,
    triangles,
)
from t1p.families import catalog_small, gen_planted_t1p, gen_two_star
from t1p.graph import build_graph, ekey

H7_X, H7_Y = 4, 5
H7_CYCLE = (0, 1, 2, 3)


def brute_cycles(g, k):
    found = set()
    for vs in combinations(g.vertices(), k):
        for perm in permutations(vs):
            if perm[0] != min(vs):
                continue
            ok = all(g.has_edge(perm[i], perm[(i + 1) % k]) for i in range(k))
            if not ok:
                continue
            chords = [
                (perm[i], perm[j]) for i in range(k) for j in range(i + 2, k)
                if not (i == 0 and j == k - 1)
            ]
            if any(g.has_edge(*c) for c in chords):
                continue
            found.add(canonical_cycle(perm))
    return sorted(found)


def brute_maximal(g, size):
    cl = [c for c in combinations(g.vertices(), size)
          if all(g.has_edge(u, v) for u, v in combinations(c, 2))]
    out = []
    for c in cl:
        ext = set(g.vertices()) - set(c)
        if not any(all(g.has_edge(w, v) for v in c) for w in ext):
            out.append(c)
    return out


def random_graph(rng, n, p):
    return build_graph([e for e in combinations(range(n), 2) if rng.random() < p], range(n))


def test_cycles_k4():
    g = catalog_small("K4")
    assert len(list_induced_cycles(g, 3)) == 4
    assert list_induced_cycles(g, 4) == []


def test_cycles_octahedron():
    g = catalog_small("H5")
    assert len(list_induced_cycles(g, 3)) == 8
    assert len(list_induced_cycles(g, 4)) == 3


def test_cycles_match_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 8), rng.choice([0.4, 0.6]))
        for kk in (3, 4, 5):
            assert list_induced_cycles(g, kk) == brute_cycles(g, kk)


def test_cycle_canonical_form():
    assert canonical_cycle((3, 1, 2, 0)) == canonical_cycle((0, 2, 1, 3))
    c = canonical_cycle((4, 2, 7, 1))
    assert c[0] == 1


def test_cycles_bad_k():
    with pytest.raises(ValueError):
        list_induced_cycles(catalog_small("K4"), 6)


def test_triangles_match_cliques():
    g = gen_two_star("full", 8)
    assert triangles(g) == cliques_up_to(g, 3)[3]


def test_maximal_cliques_k5():
    cl = list_maximal_cliques_4_5(catalog_small("K5"))
    assert cl.k4 == [] and cl.k5 == [(0, 1, 2, 3, 4)] and not cl.oversize


def test_maximal_cliques_h7():
    # each 4-clique holds both degree-5 vertices and one end of each missing edge
    cl = list_maximal_cliques_4_5(catalog_small("H7"))
    assert len(cl.k4) == 4 and cl.k5 == []
    assert sorted(cl.k4) == brute_maximal(catalog_small("H7"), 4)


def test_maximal_cliques_k6_oversize():
    assert list_maximal_cliques_4_5(catalog_small("K6")).oversize


def test_maximal_cliques_match_brute_force():
    rng = random.Random(8)
    for _ in range(40):
        g = random_graph(rng, rng.randint(5, 9), 0.6)
        cl = list_maximal_cliques_4_5(g)
        if cl.oversize:
            continue
        assert sorted(cl.k4) == brute_maximal(g, 4)
        assert sorted(cl.k5) == brute_maximal(g, 5)


def test_crossable_h7():
    g = catalog_small("H7")
    assert sorted(crossable_set(g, (H7_X, H7_Y))) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_crossable_k5_and_octahedron_empty():
    k5 = catalog_small("K5")
    assert all(crossable_set(k5, e) == [] for e in k5.edges())
    octa = catalog_small("H5")
    assert all(crossable_set(octa, e) == [] for e in octa.edges())


def test_crossable_marked_empty():
    g = catalog_small("H7")
    g.mark_edge((H7_X, H7_Y))
    assert crossable_set(g, (H7_X, H7_Y)) == []


def test_crossable_index_symmetric_on_corpus():
    graphs = [gen_planted_t1p(n, c, seed=s).graph
              for s, (n, c) in enumerate([(10, 3), (14, 6), (20, 9), (30, 12)])]
    graphs += [gen_two_star(v, 8) for v in ("handle", "circle", "x", "semi", "full")]
    for g in graphs:
        idx = crossable_index(g)
        for e, es in idx.items():
            for f in es:
                assert not set(e) & set(f)
                assert e in idx[f]


def test_bridge_set_h7():
    g = catalog_small("H7")
    bridges, parts = bridge_set(g, {H7_X, H7_Y}, crossable_set(g, (H7_X, H7_Y)))
    assert sorted(bridges) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert parts == [[0], [1], [2], [3]]


def test_bridge_set_no_edges():
    g = catalog_small("H7")
    bridges, parts = bridge_set(g, {0}, [])
    assert bridges == [] and len(parts) == 1


def test_bridge_pattern_h7():
    assert bridge_pattern(catalog_small("H7"), H7_CYCLE) == [(1, 1, 1, 1)] * 4


def test_bridge_pattern_octahedron():
    g = catalog_small("H5")
    for cyc in list_induced_cycles(g, 4):
        assert bridge_pattern(g, cyc) == [(0, 0, 0, 0)] * 4


def test_bridge_pattern_chord_rejected():
    with pytest.raises(ValueError):
        bridge_pattern(catalog_small("K4"), (0, 1, 2, 3))


def _shift(t):
    return None if t is None else t[1:] + t[:1]


def test_bridge_pattern_rotation_invariant():
    # rotating the start vertex rotates both the list and every tuple
    for seed in range(6):
        g = gen_planted_t1p(12, 6, seed=seed).graph
        for cyc in list_induced_cycles(g, 4)[:6]:
            base = bridge_pattern(g, cyc)
            rot = bridge_pattern(g, cyc[1:] + cyc[:1])
            assert rot == [_shift(t) for t in base[1:] + base[:1]]


def test_edges_are_normalized():
    assert ekey(5, 2) == (2, 5)
