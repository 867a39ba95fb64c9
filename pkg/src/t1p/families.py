"""Named graph families and seeded instance generators.

Randomness comes from ``random.Random(seed)`` (Mersenne Twister MT19937),
so a seed fully determines every generated graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .embedding import T1PEmbedding, embedding_from_crossings
from .graph import Edge, Graph, GraphError, build_graph, ekey

RNG_ALGORITHM = "python-random-MT19937"

VARIANTS = {
    "base": "base", "G2S": "base",
    "handle": "handle", "hG2S": "handle",
    "circle": "circle", "cG2S": "circle",
    "x": "x", "xG2S": "x",
    "semi": "semi", "sG2S": "semi",
    "full": "full", "fG2S": "full",
}

POLE_P, POLE_Q = 0, 1


def two_star_vertex(i: int) -> int:
    """Vertex id of v_i (1-based) in a generated two-star."""
    return i + 1


def two_star_edges(variant: str, k: int) -> list[Edge]:
    var = VARIANTS.get(variant)
    if var is None:
        raise GraphError(f"unknown two-star variant {variant!r}")
    if k < 5:
        raise GraphError(f"two-star needs k >= 5, got {k}")
    if var == "semi" and k % 2:
        raise GraphError("semi two-star needs even k")
    v = two_star_vertex
    edges = []
    for i in range(1, k + 1):
        edges.append((POLE_P, v(i)))
        edges.append((POLE_Q, v(i)))
        if i + 1 <= k:
            edges.append((v(i), v(i + 1)))
        if i + 2 <= k:
            edges.append((v(i), v(i + 2)))
    if var in ("handle", "x"):
        edges.append((POLE_P, POLE_Q))
    if var in ("circle", "x", "semi", "full"):
        edges.append((v(1), v(k)))
    if var in ("semi", "full"):
        edges.append((v(2), v(k)))
    if var == "full":
        edges.append((v(1), v(k - 1)))
    return sorted({ekey(*e) for e in edges})


def gen_two_star(variant: str, k: int) -> Graph:
    return build_graph(two_star_edges(variant, k))


def _k(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


def _minus(n: int, removed: list[Edge]) -> list[Edge]:
    gone = {ekey(*e) for e in removed}
    return [e for e in _k(n) if e not in gone]


CATALOG: dict[str, list[Edge]] = {
    "K3": _k(3),
    "K4": _k(4),
    "K5e": _minus(5, [(0, 1)]),
    "K5": _k(5),
    "H1": _minus(6, [(0, 1), (1, 2), (0, 2)]),
    "H2": _minus(6, [(0, 1), (1, 2), (2, 3)]),
    "H3": _minus(6, [(0, 1), (0, 2), (0, 3)]),
    "H4": _minus(6, [(0, 1), (1, 2), (3, 4)]),
    "H5": _minus(6, [(0, 1), (2, 3), (4, 5)]),
    "H6": _minus(6, [(0, 1), (0, 2)]),
    "H7": _minus(6, [(0, 2), (1, 3)]),
    "K6e": _minus(6, [(0, 1)]),
    "K6": _k(6),
    "K7": _k(7),
}


def catalog_small(name: str) -> Graph:
    if name not in CATALOG:
        raise GraphError(f"unknown catalog graph {name!r}")
    return build_graph(CATALOG[name])


# -- random triangulations ---------------------------------------------------

class _Triangulation:
    """Faces of a planar triangulation with edge-to-face incidence."""

    def __init__(self) -> None:
        self.faces: list[tuple[int, int, int]] = []
        self.alive: list[bool] = []
        self.edge_faces: dict[Edge, list[int]] = {}
        self.adj: dict[int, set[int]] = {}

    def add_face(self, a: int, b: int, c: int) -> int:
        fid = len(self.faces)
        self.faces.append((a, b, c))
        self.alive.append(True)
        for x, y in ((a, b), (b, c), (a, c)):
            self.edge_faces.setdefault(ekey(x, y), []).append(fid)
            self.adj.setdefault(x, set()).add(y)
            self.adj.setdefault(y, set()).add(x)
        return fid

    def kill_face(self, fid: int) -> None:
        self.alive[fid] = False
        a, b, c = self.faces[fid]
        for x, y in ((a, b), (b, c), (a, c)):
            self.edge_faces[ekey(x, y)].remove(fid)

    def live_faces(self) -> list[int]:
        return [i for i, ok in enumerate(self.alive) if ok]

    def edges(self) -> list[Edge]:
        return sorted(e for e, fs in self.edge_faces.items() if fs)

    def other_vertex(self, fid: int, e: Edge) -> int:
        (w,) = set(self.faces[fid]) - set(e)
        return w


def _random_triangulation(n: int, rng: random.Random, flips: int) -> _Triangulation:
    if n < 4:
        raise GraphError("triangulation needs n >= 4")
    t = _Triangulation()
    for a, b, c in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        t.add_face(a, b, c)
    live = t.live_faces()
    for v in range(4, n):
        i = rng.randrange(len(live))
        fid = live[i]
        a, b, c = t.faces[fid]
        t.kill_face(fid)
        live[i] = live[-1]
        live.pop()
        for x, y in ((a, b), (b, c), (a, c)):
            live.append(t.add_face(x, y, v))
    for _ in range(flips):
        edges = t.edges()
        a, b = edges[rng.randrange(len(edges))]
        f1, f2 = list(t.edge_faces[(a, b)])
        x, y = t.other_vertex(f1, (a, b)), t.other_vertex(f2, (a, b))
        if y in t.adj[x] or len(t.adj[a]) <= 3 or len(t.adj[b]) <= 3:
            continue
        t.kill_face(f1)
        t.kill_face(f2)
        t.adj[a].discard(b)
        t.adj[b].discard(a)
        t.add_face(a, x, y)
        t.add_face(b, x, y)
    return t


def gen_planar_triangulation(n: int, seed: int = 0, flips: Optional[int] = None) -> Graph:
    """Stacked triangulation followed by ``flips`` random edge flips (default n)."""
    rng = random.Random(seed)
    t = _random_triangulation(n, rng, n if flips is None else flips)
    return build_graph(t.edges())


@dataclass
class PlantedInstance:
    graph: Graph
    embedding: T1PEmbedding
    crossings: list[tuple[Edge, Edge]]
    requested: int

    @property
    def complete(self) -> bool:
        return len(self.crossings) == self.requested


def gen_planted_t1p(n: int, crossings: int, seed: int = 0, flips: Optional[int] = None) -> PlantedInstance:
    """Triangulation plus X-quadrangles planted over pairs of adjacent faces."""
    rng = random.Random(seed)
    t = _random_triangulation(n, rng, n if flips is None else flips)
    g = build_graph(t.edges())
    placed: list[tuple[Edge, Edge]] = []
    candidates = t.edges()
    rng.shuffle(candidates)
    for e in candidates:
        if len(placed) >= crossings:
            break
        fs = list(t.edge_faces[e])
        if len(fs) != 2:
            continue
        x, y = t.other_vertex(fs[0], e), t.other_vertex(fs[1], e)
        if g.has_edge(x, y):
            continue
        g.add_edge(x, y)
        # both flanking faces now hold the X-quadrangle; retire them
        t.kill_face(fs[0])
        t.kill_face(fs[1])
        placed.append((e, ekey(x, y)))
    emb = embedding_from_crossings(g, placed)
    if emb is None:
        raise GraphError("planted instance is not planar; generator bug")
    return PlantedInstance(graph=g, embedding=emb, crossings=placed, requested=crossings)


def gen_tripod_t1p(n: int, seed: int = 0, singleton: bool = False) -> PlantedInstance:
    """Every edge of one triangle crossed by an edge joining its two sides.

    With ``singleton`` the inner side is a single degree-3 vertex, which
    ends with degree six; otherwise the triangle is a separating triangle
    of a stacked triangulation with at least two vertices inside.
    """
    rng = random.Random(seed)
    t = _random_triangulation(n, rng, 0)
    g = build_graph(t.edges())
    tris = sorted(
        tuple(sorted(f)) for i, f in enumerate(t.faces) if not t.alive[i]
    )
    rng.shuffle(tris)
    for a, b, c in tris:
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            continue
        rest = [v for v in g.adj if v not in (a, b, c)]
        inner = _side_of(g, (a, b, c), rest)
        if inner is None:
            continue
        if singleton != (len(inner) == 1):
            continue
        plan = []
        for e in ((a, b), (b, c), (a, c)):
            fs = list(t.edge_faces[ekey(*e)])
            x, y = t.other_vertex(fs[0], ekey(*e)), t.other_vertex(fs[1], ekey(*e))
            plan.append((ekey(*e), ekey(x, y), fs))
        if len({f for _, f, _ in plan}) < 3 or any(g.has_edge(*f) for _, f, _ in plan):
            continue
        for e, f, fs in plan:
            g.add_edge(*f)
            for fid in fs:
                t.kill_face(fid)
        placed = [(e, f) for e, f, _ in plan]
        emb = embedding_from_crossings(g, placed)
        if emb is None:
            raise GraphError("tripod instance is not planar; generator bug")
        return PlantedInstance(graph=g, embedding=emb, crossings=placed, requested=3)
    raise GraphError(f"no suitable triangle for a tripod with n={n}, seed={seed}")


def _side_of(g: Graph, tri: tuple, rest: list) -> Optional[set]:
    """Smaller component of g minus a separating triangle, or None."""
    from .graph import components_after_removal

    parts = components_after_removal(g, tri)
    if len(parts) != 2:
        return None
    return set(min(parts, key=len))
