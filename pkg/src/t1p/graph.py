"""Simple undirected graphs carrying per-edge mark and label state.

Vertex ids are non-negative integers that stay stable under surgery, so a
vertex removed from a working copy leaves a gap instead of renumbering the
rest. Edges are stored as ordered pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed input or contract violations on a Graph."""


def ekey(u: int, v: int) -> Edge:
    """Canonical key of the edge between ``u`` and ``v``."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable simple graph with edge marks (proven uncrossed) and labels."""

    __slots__ = ("adj", "marked", "labels")

    def __init__(self) -> None:
        self.adj: dict[int, set[int]] = {}
        self.marked: set[Edge] = set()
        # only labels above 1 are stored; absent means 1
        self.labels: dict[Edge, int] = {}

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nb in self.adj.items() for v in nb if u < v)

    def iter_edges(self) -> Iterator[Edge]:
        for u, nb in self.adj.items():
            for v in nb:
                if u < v:
                    yield (u, v)

    def has_vertex(self, v: int) -> bool:
        return v in self.adj

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adj.get(u)
        return nb is not None and v in nb

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_marked(self, e: Edge) -> bool:
        return ekey(*e) in self.marked

    def label(self, e: Edge) -> int:
        return self.labels.get(ekey(*e), 1)

    def unmarked_edges(self) -> list[Edge]:
        return [e for e in self.edges() if e not in self.marked]

    # -- surgery ---------------------------------------------------------
    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        self.adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        self.add_vertex(u)
        self.add_vertex(v)
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        e = ekey(u, v)
        self.marked.discard(e)
        self.labels.pop(e, None)

    def remove_vertex(self, v: int) -> None:
        for w in list(self.adj[v]):
            self.remove_edge(v, w)
        del self.adj[v]

    def mark_edge(self, e: Edge) -> None:
        e = ekey(*e)
        if not self.has_edge(*e):
            raise GraphError(f"cannot mark missing edge {e}")
        self.marked.add(e)

    def set_label(self, e: Edge, t: int) -> None:
        e = ekey(*e)
        if not self.has_edge(*e):
            raise GraphError(f"cannot label missing edge {e}")
        if t < 1:
            raise GraphError(f"label must be positive, got {t}")
        if self.labels.get(e, 1) > 1:
            raise GraphError(f"edge {e} already carries label {self.labels[e]}")
        if t > 1:
            self.labels[e] = t

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = {v: set(nb) for v, nb in self.adj.items()}
        g.marked = set(self.marked)
        g.labels = dict(self.labels)
        return g

    def subgraph(self, verts: Iterable[int]) -> "Graph":
        """Induced subgraph; marks and labels are inherited by copy."""
        keep = set(verts)
        g = Graph()
        for v in keep:
            g.adj[v] = self.adj[v] & keep
        g.marked = {e for e in self.marked if e[0] in keep and e[1] in keep}
        g.labels = {e: t for e, t in self.labels.items() if e[0] in keep and e[1] in keep}
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, marked={len(self.marked)})"


def build_graph(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
    """Build a fresh graph; duplicates collapse, loops are rejected."""
    g = Graph()
    for v in vertices:
        g.add_vertex(int(v))
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        g.add_edge(u, v)
    return g


# -- connectivity -----------------------------------------------------------

def components_after_removal(
    g: Graph, removed: Iterable[int] = (), cut_edges: Iterable[Edge] = ()
) -> list[list[int]]:
    """Connected components of ``g`` minus vertices and edges.

    Components are sorted lists, ordered by their smallest vertex.
    """
    gone = set(removed)
    cut = {ekey(*e) for e in cut_edges}
    seen: set[int] = set(gone)
    comps: list[list[int]] = []
    for s in sorted(g.adj):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in seen:
                    continue
                if cut and ekey(u, w) in cut:
                    continue
                seen.add(w)
                comp.append(w)
                queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components_after_removal(g)) == 1


def _articulation_free(adj: dict[int, set[int]], skip: int | None) -> bool:
    """True iff the graph (minus ``skip``) is connected with no cut vertex."""
    verts = [v for v in adj if v != skip]
    if len(verts) <= 2:
        if len(verts) == 2:
            a, b = verts
            return b in adj[a]
        return True
    root = verts[0]
    disc = {root: 0}
    low = {root: 0}
    counter = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip or w == parent:
                continue
            if w in disc:
                if disc[w] < low[u]:
                    low[u] = disc[w]
                continue
            disc[w] = low[w] = counter
            counter += 1
            if u == root:
                root_children += 1
            stack.append((w, u, iter(adj[w])))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != root and low[u] >= disc[p]:
                    return False
    if len(disc) != len(verts):
        return False
    return root_children <= 1


def _local_connectivity_at_least(adj: dict[int, set[int]], s: int, t: int, k: int) -> bool:
    """Vertex-disjoint s-t paths >= k via unit-capacity augmenting paths."""
    # split every vertex v into (v, 0) -> (v, 1); s and t have unbounded capacity
    flow: dict[tuple, int] = {}

    def neighbors(a: tuple) -> Iterator[tuple]:
        v, side = a
        if side == 0:
            yield (v, 1)
            for w in adj[v]:
                yield (w, 1)  # reverse of (w,1)->(v,0)
        else:
            yield (v, 0)
            for w in adj[v]:
                yield (w, 0)

    def _res(a: tuple, b: tuple) -> int:
        forward = 0
        if a[0] == b[0]:
            if a[1] == 0 and b[1] == 1:
                forward = k if a[0] in (s, t) else 1
        elif a[1] == 1 and b[1] == 0 and b[0] in adj[a[0]]:
            forward = 1
        return forward - flow.get((a, b), 0) + flow.get((b, a), 0)

    source, sink = (s, 1), (t, 0)
    total = 0
    while total < k:
        parent: dict[tuple, tuple] = {source: source}
        queue = deque([source])
        found = False
        while queue and not found:
            a = queue.popleft()
            for b in neighbors(a):
                if b in parent or _res(a, b) <= 0:
                    continue
                parent[b] = a
                if b == sink:
                    found = True
                    break
                queue.append(b)
        if not found:
            return False
        b = sink
        while b != source:
            a = parent[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return True


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no vertex cut of size < k exists (K_n counts as (n-1)-connected)."""
    if not 1 <= k <= 7:
        raise GraphError(f"connectivity query k={k} outside 1..7")
    n = g.n
    if n == 0:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if n <= k:
        return False
    if min(len(nb) for nb in g.adj.values()) < k:
        return False
    adj = g.adj
    if k == 2:
        return _articulation_free(adj, None)
    if k == 3:
        if not _articulation_free(adj, None):
            return False
        return all(_articulation_free(adj, v) for v in adj)
    # a cut of size < k misses one of the first k vertices, so it suffices to
    # test those against every non-adjacent vertex
    order = sorted(adj)
    for i in range(k):
        vi = order[i]
        for j in range(i + 1, n):
            w = order[j]
            if w in adj[vi]:
                continue
            if not _local_connectivity_at_least(adj, vi, w, k):
                return False
    return True
