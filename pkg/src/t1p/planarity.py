"""Planarity testing with rotation-system extraction and face traversal.

The decision itself is delegated to networkx's left-right planarity test.
Rotation systems are plain dicts mapping a vertex to its neighbors in
clockwise order; ids may be negative (crossing dummies).
"""

from __future__ import annotations

from typing import Iterable

import networkx as nx

from .graph import Graph

Rotation = dict[int, list[int]]


class EmbeddingError(ValueError):
    """Inconsistent rotation system or face structure."""


def _nx_graph(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(sorted(vertices))
    h.add_edges_from(sorted((min(u, v), max(u, v)) for u, v in edges))
    return h


def planar_rotation(
    edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()
) -> Rotation | None:
    """Clockwise rotation system of a planar graph, or None if non-planar.

    Input is sorted before the test so that equal inputs give equal output.
    """
    h = _nx_graph(edges, vertices)
    ok, emb = nx.check_planarity(h)
    if not ok:
        return None
    rot: Rotation = {}
    for v in sorted(h.nodes):
        nbrs = list(emb.neighbors_cw_order(v))
        if nbrs:
            # start each rotation at its smallest neighbor for stable output
            i = nbrs.index(min(nbrs))
            nbrs = nbrs[i:] + nbrs[:i]
        rot[v] = nbrs
    return rot


def is_planar_edges(edges: Iterable[tuple[int, int]]) -> bool:
    return nx.check_planarity(_nx_graph(edges), counterexample=False)[0]


def planarity_check(g: Graph) -> tuple[bool, Rotation | None]:
    rot = planar_rotation(g.iter_edges(), g.adj)
    return rot is not None, rot


def check_rotation(rot: Rotation) -> None:
    """Raise unless every edge appears in both endpoint rotations exactly once."""
    for v, nbrs in rot.items():
        if len(set(nbrs)) != len(nbrs):
            raise EmbeddingError(f"vertex {v} repeats a neighbor in its rotation")
        for w in nbrs:
            if w not in rot or v not in rot[w]:
                raise EmbeddingError(f"edge ({v}, {w}) missing from rotation of {w}")


def faces_of(rot: Rotation) -> list[list[int]]:
    """Face boundary walks; every dart is used exactly once."""
    check_rotation(rot)
    pos = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rot.items()}
    seen: set[tuple[int, int]] = set()
    faces: list[list[int]] = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                nb = rot[b]
                c = nb[(pos[b][a] + 1) % len(nb)]
                a, b = b, c
            faces.append(face)
    return faces


def euler_genus_zero(rot: Rotation) -> bool:
    """n - m + f == 2 for a connected rotation system."""
    n = len(rot)
    m = sum(len(nb) for nb in rot.values()) // 2
    return n - m + len(faces_of(rot)) == 2


def is_triangulated_planar(g: Graph) -> bool:
    if g.n < 3 or g.m != 3 * g.n - 6:
        return False
    ok, rot = planarity_check(g)
    if not ok:
        return False
    return all(len(f) == 3 for f in faces_of(rot))


def same_cycle(face: list[int], cycle: Iterable[int]) -> bool:
    """True iff ``face`` traverses ``cycle`` in either direction."""
    cyc = list(cycle)
    if len(face) != len(cyc) or set(face) != set(cyc):
        return False
    k = len(cyc)
    i = face.index(cyc[0])
    fwd = [face[(i + j) % k] for j in range(k)]
    bwd = [face[(i - j) % k] for j in range(k)]
    return fwd == cyc or bwd == cyc
