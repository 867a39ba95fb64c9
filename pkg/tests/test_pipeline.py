from __future__ import annotations

import json
import random

import pytest

from t1p.embedding import validate_t1p
from t1p.families import catalog_small, gen_planar_triangulation, gen_planted_t1p, gen_two_star
from t1p.graph import build_graph
from t1p.oracle import OracleConstraints, oracle_count, oracle_enumerate
from t1p.pipeline import (
    SearchBudgetExceeded,
    count_embeddings,
    mark_non_clique_edges,
    preprocess,
    recognize,
)


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


@pytest.mark.parametrize("g,reason", [
    (cycle(6), "edge count"),
    (catalog_small("K7"), "contains K7"),
    (catalog_small("H3"), "not 3-connected"),
    (build_graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]), "disconnected"),
])
def test_preprocess_reasons(g, reason):
    assert preprocess(g) == reason


def test_preprocess_accepts():
    assert preprocess(catalog_small("H5")) is None
    assert preprocess(gen_planar_triangulation(30, seed=1)) is None


def test_mark_octahedron_all():
    g = catalog_small("H5")
    delta = mark_non_clique_edges(g)
    assert len(delta.marked_edges) == 12 and len(g.marked) == 12


def test_mark_k5_none():
    g = catalog_small("K5")
    assert mark_non_clique_edges(g).marked_edges == []


@pytest.mark.parametrize("name,count", [
    ("K3", 1), ("K4", 4), ("K5e", 1), ("K5", 15), ("H2", 1), ("H5", 1), ("H6", 6), ("H7", 4),
    ("K6", 60), ("K6e", 24),
])
def test_catalog_counts(name, count):
    res = recognize(catalog_small(name))
    assert res.is_t1p and res.count == count
    assert validate_t1p(catalog_small(name), res.witness).ok


@pytest.mark.parametrize("name", ["H1", "H4"])
def test_catalog_rejections(name):
    res = recognize(catalog_small(name))
    assert not res.is_t1p and res.count == 0 and res.witness is None
    assert res.reason == "no T1P embedding"


def test_k5_witness_has_one_crossing():
    res = recognize(catalog_small("K5"))
    assert len(res.witness.crossing_set()) == 1


def test_planted_thirty():
    for seed in range(5):
        inst = gen_planted_t1p(30, 8, seed=seed)
        res = recognize(inst.graph)
        assert res.is_t1p and res.count >= 1
        assert validate_t1p(inst.graph, res.witness).ok


def test_planar_triangulation_unique():
    g = gen_planar_triangulation(60, seed=3)
    res = recognize(g)
    assert res.count == 1 and res.witness.crossing_set() == []


@pytest.mark.parametrize("variant,k", [("handle", 9), ("circle", 10), ("x", 9), ("full", 10)])
def test_two_star_templates_in_pipeline(variant, k):
    # oracle-verified at k <= 8, constant beyond
    expected = {"handle": 8, "circle": 2, "x": 2, "full": 2}[variant]
    assert count_embeddings(gen_two_star(variant, k)) == expected


def test_counts_match_oracle_on_random_graphs():
    rng = random.Random(21)
    for _ in range(25):
        n = rng.randint(7, 10)
        g = gen_planted_t1p(n, rng.randint(0, n - 2), seed=rng.randrange(10**6)).graph
        if rng.random() < 0.4:
            h = g.copy()
            h.remove_edge(*rng.choice(h.edges()))
            g = build_graph(h.edges())
        assert recognize(g).count == oracle_count(g), g.edges()


def test_marked_edges_match_oracle():
    rng = random.Random(2)
    for name in ("H6", "H7", "K6e", "K6"):
        g = catalog_small(name)
        marks = rng.sample(g.edges(), 2)
        assert recognize(g, marked=marks).count == oracle_count(g, OracleConstraints.of(marks))
    for seed in range(6):
        g = gen_planted_t1p(9, 3, seed=seed).graph
        marks = rng.sample(g.edges(), 3)
        res = recognize(g, marked=marks)
        assert res.count == oracle_count(g, OracleConstraints.of(marks))
        if res.is_t1p:
            assert validate_t1p(g, res.witness, marks).ok


def test_marked_edge_missing():
    res = recognize(catalog_small("K5"), marked=[(0, 9)])
    assert not res.is_t1p and "not in graph" in res.reason


def test_witness_is_an_oracle_embedding():
    g = gen_planted_t1p(10, 4, seed=11).graph
    res = recognize(g)
    sets = {tuple(e.crossing_set()) for e in oracle_enumerate(g)}
    assert tuple(res.witness.crossing_set()) in sets


def test_trace_json_lines():
    small = recognize(catalog_small("H7"))
    assert [d.kind for d in small.trace.deltas] == ["SmallLeaf"]
    res = recognize(gen_planted_t1p(20, 6, seed=3).graph)
    lines = res.trace.to_json_lines().splitlines()
    assert len(lines) == len(res.trace) > 1
    kinds = [json.loads(x)["kind"] for x in lines]
    assert kinds[0] == "MarkNonClique"
    obj = json.loads(res.to_json())
    assert obj["count"] == res.count and obj["schema"] == 1 and obj["trace_len"] == len(lines)


def test_rejection_json():
    obj = recognize(catalog_small("K7")).to_json_obj()
    assert obj["is_t1p"] is False and obj["witness"] is None and obj["reason"] == "contains K7"


def test_node_budget():
    with pytest.raises(SearchBudgetExceeded):
        recognize(gen_planted_t1p(40, 15, seed=1).graph, node_budget=2)


def test_time_budget():
    with pytest.raises(SearchBudgetExceeded):
        recognize(gen_planted_t1p(40, 15, seed=1).graph, time_budget=0.0)


def test_deterministic():
    g = gen_planted_t1p(25, 7, seed=4).graph
    a, b = recognize(g), recognize(g)
    assert a.to_json() == b.to_json()
    assert a.trace.to_json_lines() == b.trace.to_json_lines()


def test_relabel_invariant_count():
    g = gen_planted_t1p(12, 5, seed=6).graph
    perm = list(range(g.n))
    random.Random(0).shuffle(perm)
    h = build_graph([(perm[u], perm[v]) for u, v in g.edges()])
    assert recognize(g).count == recognize(h).count


def test_ablations_agree():
    for seed in range(6):
        g = gen_planted_t1p(11, 4, seed=seed).graph
        full = recognize(g).count
        assert recognize(g, use_separators=False).count == full
        assert recognize(g, use_families=False).count == full
