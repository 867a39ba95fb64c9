"""Brute-force enumeration of all T1P embeddings of a small graph.

An embedding is identified with its set of crossing pairs. The enumerator
walks matchings of candidate pairs (independent edges spanning a 4-clique)
of the forced size and keeps those whose planarization is a triangulation.
It shares no code with the recognition pipeline beyond the graph type,
the planarity wrapper and the embedding validator.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .embedding import T1PEmbedding, embedding_from_crossings, has_face, validate_t1p
from .graph import Edge, Graph, ekey, is_connected, vertex_connectivity_at_least
from .planarity import is_planar_edges


class OracleTimeout(RuntimeError):
    """The time budget ran out before enumeration finished."""


class OracleError(RuntimeError):
    """Input outside the oracle's limits or a violated structural assumption."""


@dataclass(frozen=True)
class OracleConstraints:
    """Marked edges stay uncrossed; each required face must bound a face.

    Virtual edges are bookkeeping chords: uncrossed, and never usable as
    the kite edge of a crossing.
    """

    uncrossed_edges: frozenset = frozenset()
    required_faces: tuple = ()
    max_vertices: int = 12
    time_budget: float = 10.0
    virtual_edges: frozenset = frozenset()

    @staticmethod
    def of(
        uncrossed: Iterable[Edge] = (),
        faces: Iterable[Iterable[int]] = (),
        max_vertices: int = 12,
        time_budget: float = 10.0,
        virtual: Iterable[Edge] = (),
    ) -> "OracleConstraints":
        virt = frozenset(ekey(*e) for e in virtual)
        return OracleConstraints(
            frozenset(ekey(*e) for e in uncrossed) | virt,
            tuple(tuple(f) for f in faces),
            max_vertices,
            time_budget,
            virt,
        )


DEFAULT = OracleConstraints()


def candidate_pairs(
    g: Graph, uncrossed: Iterable[Edge] = (), virtual: Iterable[Edge] = ()
) -> list[tuple[Edge, Edge]]:
    """Independent edge pairs whose endpoints induce a 4-clique."""
    banned = {ekey(*e) for e in uncrossed}
    virt = {ekey(*e) for e in virtual}
    banned |= virt
    adj = g.adj
    out = []
    for quad in _four_cliques(g):
        a, b, c, d = quad
        for e, f in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            if e in banned or f in banned:
                continue
            if virt and any(k in virt for k in _kites(e, f)):
                continue
            out.append((e, f) if e < f else (f, e))
    assert all(f[0] in adj[e[0]] for e, f in out)
    return sorted(set(out))


UNDECIDED, UNCROSSED, CROSSED = 0, 1, 2


def _kites(e: Edge, f: Edge) -> list[Edge]:
    return [ekey(x, y) for x in e for y in f]


def _independent_pairs(q: tuple[int, ...]) -> list[tuple[Edge, Edge]]:
    out = []
    for e in combinations(q, 2):
        for f in combinations(q, 2):
            if e < f and not set(e) & set(f):
                out.append((e, f))
    return out


def _five_cliques(g: Graph) -> list[tuple[int, ...]]:
    adj = g.adj
    out = []
    for a, b, c, d in _four_cliques(g):
        for x in adj[a] & adj[b] & adj[c] & adj[d]:
            if x > d:
                out.append((a, b, c, d, x))
    return out


def _four_cliques(g: Graph) -> list[tuple[int, int, int, int]]:
    adj = g.adj
    out = []
    for a in sorted(adj):
        up = sorted(w for w in adj[a] if w > a)
        for b, c, d in combinations(up, 3):
            if c in adj[b] and d in adj[b] and d in adj[c]:
                out.append((a, b, c, d))
    return out


def _crossing_sizes(g: Graph) -> list[int]:
    n, m = g.n, g.m
    k = m - (3 * n - 6)
    if n == 4 and m == 6:
        return [0, 1]
    return [k] if k >= 0 else []


def oracle_enumerate(g: Graph, c: OracleConstraints = DEFAULT) -> list[T1PEmbedding]:
    """All T1P embeddings of ``g`` honoring the constraints, by crossing set."""
    if g.n > c.max_vertices:
        raise OracleError(f"oracle limit is n <= {c.max_vertices}, got n={g.n}")
    for e in c.uncrossed_edges:
        if not g.has_edge(*e):
            raise OracleError(f"constraint edge {e} not in graph")
    if g.n < 3 or not is_connected(g):
        return []
    deadline = time.monotonic() + c.time_budget
    pairs = candidate_pairs(g, c.uncrossed_edges, c.virtual_edges)
    partners: dict[Edge, list[Edge]] = {}
    for e, f in pairs:
        partners.setdefault(e, []).append(f)
        partners.setdefault(f, []).append(e)
    fixed = [e for e in g.iter_edges() if e not in partners]
    k5_pairs = [
        [p for p in _independent_pairs(q) if p[1] in partners.get(p[0], ())]
        for q in _five_cliques(g)
    ]
    results: list[T1PEmbedding] = []
    ticks = [0]
    state: dict[Edge, int] = {e: UNDECIDED for e in partners}
    chosen: list[tuple[Edge, Edge]] = []

    def accept() -> None:
        emb = embedding_from_crossings(g, chosen)
        if emb is None:
            return
        if not validate_t1p(g, emb, c.uncrossed_edges).ok:
            return
        if any(not has_face(emb, face) for face in c.required_faces):
            return
        if g.n >= 5:
            crossed = emb.crossed_edges()
            skel = Graph()
            for v in g.adj:
                skel.add_vertex(v)
            for e in g.iter_edges():
                if e not in crossed:
                    skel.add_edge(*e)
            if not vertex_connectivity_at_least(skel, 3):
                raise OracleError(f"skeleton of {emb.crossing_set()} is not 3-connected")
        results.append(emb)

    def options(e: Edge) -> list[Edge]:
        out = []
        for f in partners[e]:
            if state[f] != UNDECIDED:
                continue
            if any(state.get(k) == CROSSED for k in _kites(e, f)):
                continue
            out.append(f)
        return out

    def planar_so_far() -> bool:
        edges = list(fixed)
        edges.extend(e for e, st in state.items() if st == UNCROSSED)
        for j, (e, f) in enumerate(chosen):
            z = -(j + 1)
            edges.extend((z, x) for x in (*e, *f))
        return is_planar_edges(edges)

    def k5_alive() -> bool:
        for plist in k5_pairs:
            ok = False
            for e, f in plist:
                se, sf = state[e], state[f]
                if se == CROSSED and sf == CROSSED and (e, f) in chosen_set:
                    ok = True
                    break
                if se == UNDECIDED and sf == UNDECIDED:
                    ok = True
                    break
            if not ok:
                return False
        return True

    chosen_set: set[tuple[Edge, Edge]] = set()

    def rec(left: int) -> None:
        ticks[0] += 1
        if ticks[0] % 64 == 0 and time.monotonic() > deadline:
            raise OracleTimeout(f"oracle exceeded {c.time_budget}s")
        if left == 0:
            saved = [e for e, st in state.items() if st == UNDECIDED]
            for e in saved:
                state[e] = UNCROSSED
            if k5_alive():
                accept()
            for e in saved:
                state[e] = UNDECIDED
            return
        # settle edges without options, then branch on the tightest edge
        forced: list[Edge] = []
        best: Optional[Edge] = None
        best_opts: list[Edge] = []
        live = 0
        for e, st in state.items():
            if st != UNDECIDED:
                continue
            opts = options(e)
            if not opts:
                forced.append(e)
                continue
            live += 1
            if best is None or len(opts) < len(best_opts):
                best, best_opts = e, opts
        for e in forced:
            state[e] = UNCROSSED
        try:
            if best is None or 2 * left > live:
                return
            if forced and not (k5_alive() and planar_so_far()):
                return
            for f in best_opts:
                pair = (best, f) if best < f else (f, best)
                touched = [k for k in _kites(best, f) if state.get(k) == UNDECIDED]
                state[best] = state[f] = CROSSED
                for k in touched:
                    state[k] = UNCROSSED
                chosen.append(pair)
                chosen_set.add(pair)
                if k5_alive() and planar_so_far():
                    rec(left - 1)
                chosen.pop()
                chosen_set.discard(pair)
                for k in touched:
                    state[k] = UNDECIDED
                state[best] = state[f] = UNDECIDED
            state[best] = UNCROSSED
            if k5_alive():
                rec(left)
            state[best] = UNDECIDED
        finally:
            for e in forced:
                state[e] = UNDECIDED

    for k in _crossing_sizes(g):
        if k == 0:
            saved = dict(state)
            for e in state:
                state[e] = UNCROSSED
            accept()
            state.update(saved)
        elif partners:
            rec(k)
    results.sort(key=lambda emb: emb.crossing_set())
    return results


def oracle_count(g: Graph, c: OracleConstraints = DEFAULT) -> int:
    return len(oracle_enumerate(g, c))


def oracle_decide(g: Graph, c: OracleConstraints = DEFAULT) -> bool:
    return oracle_count(g, c) >= 1


def oracle_first(g: Graph, c: OracleConstraints = DEFAULT) -> Optional[T1PEmbedding]:
    embs = oracle_enumerate(g, c)
    return embs[0] if embs else None
