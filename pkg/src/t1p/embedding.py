"""T1P embeddings: planarization, validation and rotation-level surgery.

An embedding is stored as the clockwise rotation system of its
planarization. Crossing ``i`` (in canonical order) is represented by the
dummy vertex ``-(i + 1)``, whose rotation lists the four endpoints so that
the two crossing edges connect opposite positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Edge, Graph, GraphError, ekey
from .planarity import Rotation, EmbeddingError, faces_of, planar_rotation, same_cycle

CrossingPair = tuple[Edge, Edge]


def canonical_pair(e: Edge, f: Edge) -> CrossingPair:
    e, f = ekey(*e), ekey(*f)
    return (e, f) if e < f else (f, e)


def canonical_crossings(pairs: Iterable[tuple[Edge, Edge]]) -> list[CrossingPair]:
    return sorted(canonical_pair(e, f) for e, f in pairs)


def forced_crossing_count(n: int, m: int) -> int:
    """Number of crossings every T1P embedding of an (n, m) graph has."""
    if n < 3:
        raise GraphError("forced crossing count needs n >= 3")
    c = m - (3 * n - 6)
    if c < 0 or c > n - 2:
        raise GraphError(f"not T1P by counting: n={n}, m={m}, c={c}")
    return c


@dataclass
class T1PEmbedding:
    rotation: Rotation
    crossings: dict[int, CrossingPair] = field(default_factory=dict)

    def crossing_set(self) -> list[CrossingPair]:
        return canonical_crossings(self.crossings.values())

    def crossed_edges(self) -> set[Edge]:
        return {e for pair in self.crossings.values() for e in pair}

    def to_json_obj(self) -> dict:
        rot = {str(v): list(self.rotation[v]) for v in sorted(self.rotation, key=_vkey)}
        cr = [[list(e), list(f)] for e, f in self.crossing_set()]
        return {"skeleton_rotations": rot, "crossings": cr}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=False)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "T1PEmbedding":
        rot = {int(k): [int(w) for w in v] for k, v in obj["skeleton_rotations"].items()}
        emb = cls(rotation=rot)
        for v, nbrs in rot.items():
            if v < 0:
                if len(nbrs) != 4:
                    raise EmbeddingError(f"dummy {v} has degree {len(nbrs)}")
                a, b, c, d = nbrs
                emb.crossings[v] = canonical_pair((a, c), (b, d))
        return emb


def _vkey(v: int) -> tuple[int, int]:
    # originals first in ascending order, then dummies -1, -2, ...
    return (0, v) if v >= 0 else (1, -v)


def planarization_edges(
    edges: Iterable[Edge], pairs: list[CrossingPair]
) -> tuple[list[Edge], dict[int, CrossingPair]]:
    """Edges of the planarization and the dummy assignment."""
    crossed: set[Edge] = set()
    dummies: dict[int, CrossingPair] = {}
    out: list[Edge] = []
    for i, (e, f) in enumerate(pairs):
        if e in crossed or f in crossed:
            raise EmbeddingError(f"edge crossed twice in {pairs}")
        crossed.add(e)
        crossed.add(f)
        d = -(i + 1)
        dummies[d] = (e, f)
        out.extend([(d, e[0]), (d, e[1]), (d, f[0]), (d, f[1])])
    out.extend(e for e in edges if ekey(*e) not in crossed)
    return out, dummies


def embedding_from_crossings(g: Graph, pairs: Iterable[tuple[Edge, Edge]]) -> Optional[T1PEmbedding]:
    """Planarize ``g`` along the crossing pairs; None if not planar."""
    cp = canonical_crossings(pairs)
    edges, dummies = planarization_edges(g.iter_edges(), cp)
    rot = planar_rotation(edges, list(g.adj) + list(dummies))
    if rot is None:
        return None
    return T1PEmbedding(rotation=rot, crossings=dummies)


def planarize(g: Graph, emb: T1PEmbedding) -> Graph:
    """Planarization as a Graph (dummies shifted to ids above max vertex)."""
    shift = max(g.adj, default=-1) + 1
    out = Graph()
    for v, nbrs in emb.rotation.items():
        vv = v if v >= 0 else shift - v - 1
        out.add_vertex(vv)
        for w in nbrs:
            ww = w if w >= 0 else shift - w - 1
            out.add_edge(vv, ww)
    return out


@dataclass
class ValidationReport:
    ok: bool
    violations: list[tuple[str, str]] = field(default_factory=list)


def validate_t1p(g: Graph, emb: T1PEmbedding, marked: Iterable[Edge] = ()) -> ValidationReport:
    """Check every T1P-embedding invariant of ``emb`` against ``g``."""
    bad: list[tuple[str, str]] = []

    def fail(kind: str, detail: object) -> None:
        bad.append((kind, str(detail)))

    rot = emb.rotation
    crossed: dict[Edge, int] = {}
    for d, (e, f) in emb.crossings.items():
        for h in (e, f):
            if not g.has_edge(*h):
                fail("crossing-edge-missing", h)
            if h in crossed:
                fail("edge-crossed-twice", h)
            crossed[h] = d
        if len({e[0], e[1], f[0], f[1]}) != 4:
            fail("crossing-not-independent", (e, f))
            continue
        for x in e:
            for y in f:
                if not g.has_edge(x, y):
                    fail("kite-edge-missing", (x, y))
        nb = rot.get(d)
        if nb is None or len(nb) != 4:
            fail("dummy-degree", d)
            continue
        if {ekey(nb[0], nb[2]), ekey(nb[1], nb[3])} != {e, f}:
            fail("dummy-not-alternating", (d, nb))
    if bad:
        return ValidationReport(False, bad)
    for d, (e, f) in emb.crossings.items():
        for x in e:
            for y in f:
                if ekey(x, y) in crossed:
                    fail("kite-edge-crossed", ekey(x, y))
    for e in marked:
        if ekey(*e) in crossed:
            fail("marked-crossed", ekey(*e))

    expected: set[Edge] = set()
    for e in g.iter_edges():
        if e not in crossed:
            expected.add(e)
    for d, (e, f) in emb.crossings.items():
        for x in (*e, *f):
            expected.add(ekey(d, x))
    present: set[Edge] = set()
    for v, nbrs in rot.items():
        for w in nbrs:
            present.add(ekey(v, w))
    if set(rot) != set(g.adj) | set(emb.crossings):
        fail("vertex-set-mismatch", sorted(set(rot) ^ (set(g.adj) | set(emb.crossings))))
    if present != expected:
        diff = sorted(present ^ expected)[:5]
        fail("edge-set-mismatch", diff)
    if bad:
        return ValidationReport(False, bad)
    try:
        faces = faces_of(rot)
    except EmbeddingError as exc:
        return ValidationReport(False, [("rotation-inconsistent", str(exc))])
    n_, m_ = len(rot), len(present)
    if n_ - m_ + len(faces) != 2:
        fail("not-planar-rotation", f"euler {n_}-{m_}+{len(faces)}")
    n = g.n
    quads = [f for f in faces if len(f) == 4]
    others = [f for f in faces if len(f) not in (3, 4)]
    if others:
        fail("non-triangular-face", others[0])
    if quads:
        if n == 4 and len(quads) == 1 and len(emb.crossings) == 1:
            (e, f), = emb.crossings.values()
            kite = [e[0], f[0], e[1], f[1]]
            if not same_cycle(quads[0], kite):
                fail("quad-face-not-kite", quads[0])
        else:
            fail("non-triangular-face", quads[0])
    if n >= 5 and len(emb.crossings) != g.m - (3 * n - 6):
        fail("crossing-count", f"{len(emb.crossings)} != {g.m - (3 * n - 6)}")
    return ValidationReport(not bad, bad)


def has_face(emb: T1PEmbedding, cycle: Iterable[int]) -> bool:
    cyc = list(cycle)
    return any(same_cycle(f, cyc) for f in faces_of(emb.rotation))


# -- rotation-level surgery --------------------------------------------------

def _replace(nbrs: list[int], old: int, new: int) -> None:
    nbrs[nbrs.index(old)] = new


def insert_crossing(emb: T1PEmbedding, e: Edge, partner: Edge) -> T1PEmbedding:
    """Add edge ``e`` so that it crosses the uncrossed edge ``partner``.

    The two faces flanking ``partner`` must be the triangles closing it with
    the endpoints of ``e``.
    """
    x, y = e
    a, b = partner
    rot = {v: list(nb) for v, nb in emb.rotation.items()}
    if x in rot.get(y, ()):
        raise EmbeddingError(f"edge {ekey(x, y)} already present")
    if b not in rot.get(a, ()):
        raise EmbeddingError(f"partner {ekey(a, b)} is not an uncrossed edge")
    ra = rot[a]
    i = ra.index(b)
    p, q = ra[i - 1], ra[(i + 1) % len(ra)]
    if {p, q} != {x, y}:
        raise EmbeddingError(f"faces at {ekey(a, b)} are not closed by {ekey(x, y)}")
    for t in (x, y):
        rt = rot[t]
        j, k = rt.index(a), rt.index(b)
        if (j - k) % len(rt) not in (1, len(rt) - 1):
            raise EmbeddingError(f"kite at {t} is not a face")
    d = min(list(rot) + [0]) - 1
    _replace(rot[a], b, d)
    _replace(rot[b], a, d)
    for t in (x, y):
        rt = rot[t]
        j, k = rt.index(a), rt.index(b)
        # insert between the consecutive a and b
        pos = max(j, k) if abs(j - k) == 1 else 0
        rt.insert(pos, d)
    rot[d] = [a, p, b, q]
    crossings = dict(emb.crossings)
    crossings[d] = canonical_pair(ekey(x, y), ekey(a, b))
    return T1PEmbedding(rotation=rot, crossings=crossings)


@dataclass(frozen=True)
class StarRecord:
    center: int
    clique: tuple[int, int, int, int]
    removed: tuple[Edge, Edge]


def replace_clique_with_star(g: Graph, clique: Iterable[int]) -> tuple[Graph, StarRecord]:
    """Swap the unmarked pair of a 4-clique for a new 4-star center.

    The planarity test of the result fixes the cyclic order around the
    center, and with it which pair of the clique crosses.
    """
    q = tuple(sorted(clique))
    if len(set(q)) != 4:
        raise GraphError(f"need four distinct vertices, got {q}")
    pairs = [ekey(u, v) for i, u in enumerate(q) for v in q[i + 1:]]
    for e in pairs:
        if not g.has_edge(*e):
            raise GraphError(f"{q} is not a 4-clique: {e} missing")
    loose = [e for e in pairs if not g.is_marked(e)]
    if not loose:
        raise GraphError(f"all edges of {q} are marked; it stays a tetrahedron")
    if len(loose) != 2 or set(loose[0]) & set(loose[1]):
        raise GraphError(f"inconsistent marks on {q}: unmarked {loose}")
    out = g.copy()
    for e in loose:
        out.remove_edge(*e)
    z = max(g.adj) + 1
    for v in q:
        out.add_edge(z, v)
    return out, StarRecord(center=z, clique=q, removed=(loose[0], loose[1]))


def restore_star(emb: T1PEmbedding, center: int, dummy: Optional[int] = None) -> T1PEmbedding:
    """Turn a 4-star center into the dummy of the X-quadrangle it stands for."""
    rot = {v: list(nb) for v, nb in emb.rotation.items()}
    nbrs = rot.pop(center)
    if len(nbrs) != 4:
        raise EmbeddingError(f"star center {center} has degree {len(nbrs)}")
    if dummy is None:
        dummy = min(list(rot) + [0]) - 1
    for w in nbrs:
        _replace(rot[w], center, dummy)
    rot[dummy] = nbrs
    crossings = dict(emb.crossings)
    a, b, c, d = nbrs
    crossings[dummy] = canonical_pair((a, c), (b, d))
    return T1PEmbedding(rotation=rot, crossings=crossings)


def reflect(emb: T1PEmbedding) -> T1PEmbedding:
    return T1PEmbedding(
        rotation={v: list(reversed(nb)) for v, nb in emb.rotation.items()},
        crossings=dict(emb.crossings),
    )


def _face_wedge_forward(rot: Rotation, v: int, prev: int, nxt: int) -> bool:
    """True iff ``nxt`` directly follows ``prev`` in the rotation at ``v``."""
    nb = rot[v]
    return nb[(nb.index(prev) + 1) % len(nb)] == nxt


def compose_at_cycle(e1: T1PEmbedding, e2: T1PEmbedding, cycle: list[int]) -> T1PEmbedding:
    """Glue two embeddings along a cycle that bounds a face in both.

    Dummy ids of ``e2`` are shifted so that they do not collide with ``e1``.
    One side is reflected if both sides have the cycle's face on the same hand.
    """
    if not has_face(e1, cycle) or not has_face(e2, cycle):
        raise EmbeddingError(f"cycle {cycle} does not bound a face on both sides")
    low = min(list(e1.rotation) + [0])
    remap = {}
    for v in e2.rotation:
        if v < 0:
            low -= 1
            remap[v] = low
    r2 = {remap.get(v, v): [remap.get(w, w) for w in nb] for v, nb in e2.rotation.items()}
    c2 = {remap[d]: pair for d, pair in e2.crossings.items()}
    k = len(cycle)
    v0, p0, n0 = cycle[0], cycle[-1], cycle[1]
    r1 = e1.rotation
    # normalize: face wedge p->n at every cycle vertex of side 1, n->p on side 2
    if not _face_wedge_forward(r1, v0, p0, n0):
        r1 = {v: list(reversed(nb)) for v, nb in r1.items()}
    if _face_wedge_forward(r2, v0, p0, n0):
        r2 = {v: list(reversed(nb)) for v, nb in r2.items()}
    cyc_set = set(cycle)
    rot: Rotation = {}
    for v, nb in r1.items():
        if v not in cyc_set:
            rot[v] = list(nb)
    for v, nb in r2.items():
        if v not in cyc_set:
            if v in rot:
                raise EmbeddingError(f"vertex {v} appears on both sides")
            rot[v] = list(nb)
    for i, v in enumerate(cycle):
        p, n = cycle[i - 1], cycle[(i + 1) % k]
        s1 = _wedge_outside(r1[v], n, p)
        s2 = _wedge_outside(r2[v], p, n)
        rot[v] = s1 + s2[1:-1]
    crossings = dict(e1.crossings)
    crossings.update(c2)
    return T1PEmbedding(rotation=rot, crossings=crossings)


def _wedge_outside(nb: list[int], start: int, end: int) -> list[int]:
    """Neighbors from ``start`` to ``end`` going forward, both included.

    The empty face wedge must be the step from ``end`` back to ``start``.
    """
    i = nb.index(start)
    out = []
    k = len(nb)
    for j in range(k):
        w = nb[(i + j) % k]
        out.append(w)
        if w == end:
            break
    if out[-1] != end or nb[(nb.index(end) + 1) % k] != start:
        raise EmbeddingError("cycle is not a face wedge at a vertex")
    return out
