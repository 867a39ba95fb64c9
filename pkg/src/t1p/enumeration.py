"""Listing of small induced cycles, 4-/5-cliques, crossable edges and bridges.

Clique listing walks a degeneracy order and brute-forces subsets of each
vertex's later neighbors, which is linear for bounded-degeneracy graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Edge, Graph, components_after_removal, ekey

Cycle = tuple[int, ...]


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in smallest-last order (ties by id)."""
    deg = {v: len(nb) for v, nb in g.adj.items()}
    buckets: dict[int, set[int]] = {}
    for v, d in deg.items():
        buckets.setdefault(d, set()).add(v)
    order: list[int] = []
    removed: set[int] = set()
    d = 0
    for _ in range(len(deg)):
        d = max(d - 1, 0)
        while not buckets.get(d):
            d += 1
        v = min(buckets[d])
        buckets[d].discard(v)
        removed.add(v)
        order.append(v)
        for w in g.adj[v]:
            if w in removed:
                continue
            dw = deg[w]
            buckets[dw].discard(w)
            deg[w] = dw - 1
            buckets.setdefault(dw - 1, set()).add(w)
    return order


def canonical_cycle(cyc: Sequence[int]) -> Cycle:
    """Lexicographically least rotation or reflection of a cycle."""
    k = len(cyc)
    best: Optional[Cycle] = None
    for seq in (list(cyc), list(reversed(cyc))):
        for i in range(k):
            cand = tuple(seq[i:] + seq[:i])
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def cliques_up_to(g: Graph, max_size: int = 7) -> dict[int, list[tuple[int, ...]]]:
    """All cliques of sizes 3..max_size, as sorted tuples, grouped by size."""
    order = degeneracy_order(g)
    rank = {v: i for i, v in enumerate(order)}
    out: dict[int, list[tuple[int, ...]]] = {s: [] for s in range(3, max_size + 1)}

    def extend(clique: list[int], cand: list[int]) -> None:
        size = len(clique)
        if size >= 3:
            out[size].append(tuple(sorted(clique)))
        if size == max_size:
            return
        for i, w in enumerate(cand):
            nxt = [x for x in cand[i + 1:] if x in g.adj[w]]
            extend(clique + [w], nxt)

    for v in order:
        later = sorted((w for w in g.adj[v] if rank[w] > rank[v]), key=rank.__getitem__)
        extend([v], later)
    for s in out:
        out[s].sort()
    return out


@dataclass
class CliqueListing:
    k4: list[tuple[int, ...]]
    k5: list[tuple[int, ...]]
    oversize: bool
    k6: list[tuple[int, ...]] = field(default_factory=list)


def list_maximal_cliques_4_5(g: Graph) -> CliqueListing:
    """Maximal 4- and 5-cliques; any 6-clique sets the oversize flag."""
    cl = cliques_up_to(g, 6)
    k6 = cl[6]
    k5 = cl[5]
    in_k6 = {s for c in k6 for s in combinations(c, 5)}
    in_k5 = {s for c in k5 for s in combinations(c, 4)}
    max5 = [c for c in k5 if c not in in_k6]
    max4 = [c for c in cl[4] if c not in in_k5]
    return CliqueListing(k4=max4, k5=max5, oversize=bool(k6), k6=k6)


def triangles(g: Graph) -> list[Cycle]:
    order = degeneracy_order(g)
    rank = {v: i for i, v in enumerate(order)}
    out = []
    for v in g.adj:
        later = [w for w in g.adj[v] if rank[w] > rank[v]]
        for a, b in combinations(later, 2):
            if b in g.adj[a]:
                out.append(tuple(sorted((v, a, b))))
    out.sort()
    return out


def list_induced_cycles(g: Graph, k: int) -> list[Cycle]:
    """Every induced k-cycle (k in 3..5) once, in canonical form, sorted."""
    if k == 3:
        return triangles(g)
    adj = g.adj
    found: set[Cycle] = set()
    if k == 4:
        for a in adj:
            common: dict[int, list[int]] = {}
            for b in adj[a]:
                for c in adj[b]:
                    if c > a and c not in adj[a]:
                        common.setdefault(c, []).append(b)
            for c, mids in common.items():
                for b, d in combinations(sorted(mids), 2):
                    if d not in adj[b]:
                        found.add(canonical_cycle((a, b, c, d)))
    elif k == 5:
        # a is the smallest vertex; walk a-b-c-d-e and close e-a
        for a in adj:
            for b in adj[a]:
                if b < a:
                    continue
                for c in adj[b]:
                    if c <= a or c in adj[a]:
                        continue
                    for d in adj[c]:
                        if d <= a or d == b or d in adj[a] or d in adj[b]:
                            continue
                        for e in adj[d]:
                            if e <= a or e in (b, c) or e in adj[b] or e in adj[c]:
                                continue
                            if a in adj[e]:
                                found.add(canonical_cycle((a, b, c, d, e)))
    else:
        raise ValueError(f"cycle length {k} not supported")
    return sorted(found)


def crossable_set(g: Graph, e: Edge) -> list[Edge]:
    """Unmarked independent edges xy with {u, v, x, y} a maximal 4-clique."""
    u, v = ekey(*e)
    if (u, v) in g.marked:
        return []
    adj = g.adj
    common = sorted(adj[u] & adj[v])
    out = []
    for x, y in combinations(common, 2):
        if y not in adj[x]:
            continue
        f = (x, y)
        if f in g.marked:
            continue
        if adj[u] & adj[v] & adj[x] & adj[y]:
            continue  # extends to a 5-clique
        out.append(f)
    return out


def crossable_index(g: Graph) -> dict[Edge, list[Edge]]:
    """E(e) for every unmarked edge e (possibly empty)."""
    return {e: crossable_set(g, e) for e in g.edges() if e not in g.marked}


def bridge_set(
    g: Graph, s: Iterable[int], edges: Iterable[Edge]
) -> tuple[list[Edge], list[list[int]]]:
    """Removed edges whose endpoints fall into distinct parts, plus the parts."""
    s = set(s)
    es = sorted({ekey(*f) for f in edges})
    parts = components_after_removal(g, s, es)
    where = {v: i for i, p in enumerate(parts) for v in p}
    bridges = [
        f for f in es
        if f[0] in where and f[1] in where and where[f[0]] != where[f[1]]
    ]
    return bridges, parts


BridgeTuple = Optional[tuple[int, int, int, int]]


def cycle_edges(cyc: Sequence[int]) -> list[Edge]:
    k = len(cyc)
    return [ekey(cyc[i], cyc[(i + 1) % k]) for i in range(k)]


def bridge_pattern(g: Graph, cyc: Sequence[int]) -> list[BridgeTuple]:
    """Four bridge tuples of an induced 4-cycle; None encodes the connected case."""
    if len(cyc) != 4:
        raise ValueError("bridge patterns are defined on 4-cycles")
    a, b, c, d = cyc
    if g.has_edge(a, c) or g.has_edge(b, d):
        raise ValueError(f"cycle {tuple(cyc)} has a chord")
    es = cycle_edges(cyc)
    cross = [set(crossable_set(g, e)) for e in es]
    out: list[BridgeTuple] = []
    for i in range(4):
        bridges, parts = bridge_set(g, cyc, cross[i])
        if len(parts) <= 1:
            out.append(None)
            continue
        bs = set(bridges)
        out.append(tuple(len(bs & cross[j]) for j in range(4)))  # type: ignore[arg-type]
    return out
