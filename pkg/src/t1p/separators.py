"""Generalized separators on a working component.

A component is a graph whose marked edges are known to be uncrossed,
together with triangles that must bound faces and bookkeeping chords
(virtual edges) added when a separating 4- or 5-cycle is split off.
Detection follows a fixed order of separator kinds; each hit is reported
as a :class:`SeparatorInstance` and applied by the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional

import networkx as nx

from .enumeration import cliques_up_to, cycle_edges, list_induced_cycles, triangles
from .families import POLE_P, POLE_Q, VARIANTS, gen_two_star, two_star_vertex
from .graph import Edge, Graph, ekey

KINDS = (
    "SepCycle3",
    "SepEdge",
    "SepTriple",
    "K5Triple",
    "SepCycle4",
    "UniqueQuadruple",
    "SmallPartQuadruple",
    "MultiBridgeQuadruple",
    "BridgeIndepTriangle",
    "SingularTriangle",
    "K5Destroyer",
    "AmbiguousQuadruple",
    "AmbiguousTriangle",
    "SepCycle5",
    "Tripod",
    "StrongTripod",
    "AmbiguousTripod",
)

# kinds whose application is a forced set of crossings (plus marks);
# the others only name an edge to branch on
FORCED_KINDS = frozenset({
    "SepTriple", "UniqueQuadruple", "BridgeIndepTriangle", "SingularTriangle",
    "Tripod", "StrongTripod",
})
CYCLE_KINDS = frozenset({"SepCycle3", "SepCycle4", "SepCycle5"})

Face = tuple[int, int, int]


def face_key(a: int, b: int, c: int) -> Face:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


# -- working component -------------------------------------------------------

@dataclass
class Component:
    g: Graph
    faces: set = field(default_factory=set)
    virtual: set = field(default_factory=set)

    def copy(self) -> "Component":
        return Component(self.g.copy(), set(self.faces), set(self.virtual))

    def restrict(self, verts: Iterable[int]) -> "Component":
        keep = set(verts)
        sub = self.g.subgraph(keep)
        faces = {f for f in self.faces if keep.issuperset(f)}
        virt = {e for e in self.virtual if e[0] in keep and e[1] in keep}
        return Component(sub, faces, virt)

    def mark(self, edges: Iterable[Edge]) -> None:
        for e in edges:
            self.g.mark_edge(ekey(*e))

    def add_face(self, a: int, b: int, c: int) -> None:
        self.mark([(a, b), (b, c), (a, c)])
        self.faces.add(face_key(a, b, c))

    def crossing_budget(self) -> int:
        return self.g.m - (3 * self.g.n - 6)


def kites(e: Edge, f: Edge) -> list[Edge]:
    return [ekey(x, y) for x in e for y in f]


def valid_pair(comp: Component, e: Edge, f: Edge) -> bool:
    """Could ``e`` and ``f`` cross in some embedding honoring the component state?"""
    g = comp.g
    if set(e) & set(f):
        return False
    if not (g.has_edge(*e) and g.has_edge(*f)):
        return False
    if e in g.marked or f in g.marked:
        return False
    for k in kites(e, f):
        if not g.has_edge(*k) or k in comp.virtual:
            return False
    a, b = e
    x, y = f
    for tri in ((a, b, x), (a, b, y), (a, x, y), (b, x, y)):
        if face_key(*tri) in comp.faces:
            return False
    return True


def crossing_candidates(comp: Component) -> list[tuple[Edge, Edge]]:
    """All valid crossing pairs, sorted; each pair spans a 4-clique."""
    g = comp.g
    adj = g.adj
    out = []
    for a in sorted(adj):
        up = sorted(w for w in adj[a] if w > a)
        for b, c, d in combinations(up, 3):
            if c in adj[b] and d in adj[b] and d in adj[c]:
                for e, f in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
                    if valid_pair(comp, e, f):
                        out.append((e, f))
    out.sort()
    return out


def crossable(comp: Component, e: Edge) -> list[Edge]:
    """E(e): unmarked partners of ``e`` inside a maximal 4-clique."""
    g = comp.g
    u, v = e = ekey(*e)
    if e in g.marked:
        return []
    adj = g.adj
    out = []
    for x, y in combinations(sorted(adj[u] & adj[v]), 2):
        if y not in adj[x]:
            continue
        if adj[u] & adj[v] & adj[x] & adj[y]:
            continue  # part of a 5-clique
        if valid_pair(comp, e, (x, y)):
            out.append((x, y))
    return out


def commit(comp: Component, keep: Edge, drop: Edge) -> bool:
    """Cross ``keep`` with ``drop``: delete ``drop``, leave ``keep`` uncrossed.

    The two kite triangles on ``keep`` become required faces. Returns
    False (and leaves the component untouched) if the pair is invalid.
    """
    keep, drop = ekey(*keep), ekey(*drop)
    if not valid_pair(comp, keep, drop):
        return False
    a, b = keep
    x, y = drop
    comp.g.remove_edge(x, y)
    comp.mark([keep, *kites(keep, drop)])
    comp.faces.add(face_key(a, b, x))
    comp.faces.add(face_key(a, b, y))
    return True


# -- bitset connectivity -----------------------------------------------------

class BitGraph:
    """Adjacency as integer bitmasks for fast repeated component queries."""

    def __init__(self, g: Graph) -> None:
        self.order = sorted(g.adj)
        self.index = {v: i for i, v in enumerate(self.order)}
        self.nbr = [0] * len(self.order)
        for v, ws in g.adj.items():
            m = 0
            for w in ws:
                m |= 1 << self.index[w]
            self.nbr[self.index[v]] = m
        self.all = (1 << len(self.order)) - 1

    def mask(self, verts: Iterable[int]) -> int:
        m = 0
        for v in verts:
            m |= 1 << self.index[v]
        return m

    def parts(self, removed: Iterable[int] = (), cut: Iterable[Edge] = ()) -> list[list[int]]:
        nbr = self.nbr
        patched: dict[int, int] = {}
        for x, y in cut:
            i, j = self.index[x], self.index[y]
            patched[i] = patched.get(i, nbr[i]) & ~(1 << j)
            patched[j] = patched.get(j, nbr[j]) & ~(1 << i)
        alive = self.all & ~self.mask(removed)
        out = []
        while alive:
            seen = frontier = alive & -alive
            while frontier:
                new = 0
                f = frontier
                while f:
                    low = f & -f
                    i = low.bit_length() - 1
                    new |= patched.get(i, nbr[i])
                    f ^= low
                new &= alive & ~seen
                seen |= new
                frontier = new
            alive &= ~seen
            out.append(self.unmask(seen))
        return out

    def connected_without(self, removed: Iterable[int]) -> bool:
        return len(self.parts(removed)) <= 1

    def unmask(self, m: int) -> list[int]:
        out = []
        while m:
            low = m & -m
            out.append(self.order[low.bit_length() - 1])
            m ^= low
        return out


def bridges_of(parts: list[list[int]], cut: Iterable[Edge]) -> list[Edge]:
    where = {v: i for i, p in enumerate(parts) for v in p}
    return sorted({
        f for f in cut
        if f[0] in where and f[1] in where and where[f[0]] != where[f[1]]
    })


# -- separator records -------------------------------------------------------

@dataclass
class SeparatorInstance:
    kind: str
    carrier: tuple
    bridges: list = field(default_factory=list)
    parts: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)


@dataclass
class GraphDelta:
    kind: str
    component: int = 0
    removed_edges: list = field(default_factory=list)
    marked_edges: list = field(default_factory=list)
    label_assignments: list = field(default_factory=list)
    split: Optional[dict] = None
    family_shortcut: Optional[dict] = None
    note: Optional[str] = None

    def to_json_obj(self) -> dict:
        obj: dict = {"kind": self.kind, "component": self.component}
        if self.removed_edges:
            obj["removed_edges"] = [
                [list(e), list(p) if p else None] for e, p in self.removed_edges
            ]
        if self.marked_edges:
            obj["marked_edges"] = [list(e) for e in sorted(self.marked_edges)]
        if self.label_assignments:
            obj["label_assignments"] = [[list(e), t] for e, t in self.label_assignments]
        if self.split is not None:
            obj["split"] = self.split
        if self.family_shortcut is not None:
            obj["family_shortcut"] = self.family_shortcut
        if self.note:
            obj["note"] = self.note
        return obj


# -- detection ---------------------------------------------------------------

class Scanner:
    """Per-component detection with shared caches.

    Methods return the first instance of their kind in canonical order
    (lexicographically least carrier), or None.
    """

    def __init__(self, comp: Component) -> None:
        self.comp = comp
        self.g = comp.g
        self.bits = BitGraph(comp.g)
        self._cross: dict[Edge, list[Edge]] = {}
        self._tri: Optional[list] = None
        self._c4: Optional[list] = None
        self._k5: Optional[list] = None
        self._quads: Optional[list] = None

    def E(self, e: Edge) -> list[Edge]:
        e = ekey(*e)
        if e not in self._cross:
            self._cross[e] = crossable(self.comp, e)
        return self._cross[e]

    def tris(self) -> list:
        if self._tri is None:
            self._tri = triangles(self.g)
        return self._tri

    def c4(self) -> list:
        if self._c4 is None:
            self._c4 = list_induced_cycles(self.g, 4)
        return self._c4

    def k5(self) -> list:
        if self._k5 is None:
            self._k5 = cliques_up_to(self.g, 5).get(5, [])
        return self._k5

    def scan(self, kinds: Iterable[str] = KINDS) -> Optional[SeparatorInstance]:
        for kind in kinds:
            inst = getattr(self, "find_" + kind)()
            if inst is not None:
                return inst
        return None

    # separating cycles

    def _sep_cycle(self, kind: str, cycles: Iterable) -> Optional[SeparatorInstance]:
        for cyc in cycles:
            parts = self.bits.parts(cyc)
            if len(parts) >= 2:
                return SeparatorInstance(kind, tuple(cyc), parts=parts)
        return None

    def find_SepCycle3(self):
        return self._sep_cycle("SepCycle3", self.tris())

    def find_SepCycle4(self):
        return self._sep_cycle("SepCycle4", self.c4())

    def find_SepCycle5(self):
        if self.g.n < 7:
            return None
        return self._sep_cycle("SepCycle5", list_induced_cycles(self.g, 5))

    # single edges and triples

    def find_SepEdge(self):
        for e in self.g.edges():
            cut = self.E(e)
            if len(cut) < 2:
                continue
            parts = self.bits.parts(e, cut)
            if len(parts) < 2:
                continue
            br = bridges_of(parts, cut)
            if len(br) >= 2:
                return SeparatorInstance("SepEdge", e, br, parts)
        return None

    def find_SepTriple(self):
        for tri in self.tris():
            for e in cycle_edges(tri):
                cut = self.E(e)
                if not cut:
                    continue
                parts = self.bits.parts(tri, cut)
                if len(parts) < 2:
                    continue
                br = bridges_of(parts, cut)
                if len(br) == 1:
                    return SeparatorInstance(
                        "SepTriple", tri, br, parts, {"edge": e, "forced": [(e, br[0])]}
                    )
        return None

    def find_K5Triple(self):
        for q in self.k5():
            low = [v for v in q if self.g.degree(v) == 4]
            if low:
                return SeparatorInstance("K5Triple", q, extras={"apex": low[0]})
        return None

    # quadruples

    def quad_patterns(self) -> list:
        """(cycle, edges, per-edge (parts, bridges) or None) for 4-cycles with a bridge."""
        if self._quads is None:
            out = []
            for cyc in self.c4():
                es = cycle_edges(cyc)
                cuts = [self.E(e) for e in es]
                if not any(cuts):
                    continue
                rows = []
                for cut in cuts:
                    if not cut:
                        rows.append(None)
                        continue
                    parts = self.bits.parts(cyc, cut)
                    rows.append((parts, bridges_of(parts, cut)) if len(parts) >= 2 else None)
                if any(rows):
                    out.append((cyc, es, cuts, rows))
            self._quads = out
        return self._quads

    @staticmethod
    def _beta(rows, cuts) -> list:
        beta = []
        for row in rows:
            if row is None:
                beta.append(None)
            else:
                br = set(row[1])
                beta.append(tuple(len(br & set(c)) for c in cuts))
        return beta

    def find_UniqueQuadruple(self):
        for cyc, es, cuts, rows in self.quad_patterns():
            hit = [i for i, r in enumerate(rows) if r is not None]
            if len(hit) != 1:
                continue
            i = hit[0]
            parts, br = rows[i]
            beta = self._beta(rows, cuts)[i]
            want = tuple(1 if j == i else 0 for j in range(4))
            if len(br) == 1 and beta == want:
                return SeparatorInstance(
                    "UniqueQuadruple", cyc, br, parts,
                    {"edge": es[i], "beta": beta, "forced": [(es[i], br[0])]},
                )
        return None

    def find_SmallPartQuadruple(self):
        for cyc, es, cuts, rows in self.quad_patterns():
            if all(r is not None for r in rows):
                beta = self._beta(rows, cuts)
                return SeparatorInstance(
                    "SmallPartQuadruple", cyc, rows[0][1], rows[0][0],
                    {"beta": beta, "hint": es[0]},
                )
        return None

    def find_MultiBridgeQuadruple(self):
        for cyc, es, cuts, rows in self.quad_patterns():
            for i, r in enumerate(rows):
                if r is not None and len(r[1]) >= 2:
                    return SeparatorInstance(
                        "MultiBridgeQuadruple", cyc, r[1], r[0],
                        {"beta": self._beta(rows, cuts), "hint": es[i]},
                    )
        return None

    def find_AmbiguousQuadruple(self):
        for cyc, es, cuts, rows in self.quad_patterns():
            hit = [i for i, r in enumerate(rows) if r is not None]
            if len(hit) != 2:
                continue
            i, j = hit
            if (j - i) % 4 not in (1, 3):
                continue
            bi, bj = rows[i][1], rows[j][1]
            if len(bi) == 1 and bi == bj:
                return SeparatorInstance(
                    "AmbiguousQuadruple", cyc, bi, rows[i][0],
                    {"beta": self._beta(rows, cuts), "hint": es[i]},
                )
        return None

    # triangles with two crossable sides

    def _two_sided(self):
        """Yield (tri, a, b, c, parts, bridges, Eab, Ebc) with b the shared vertex."""
        for tri in self.tris():
            for b in tri:
                a, c = [v for v in tri if v != b]
                eab, ebc = self.E((a, b)), self.E((b, c))
                if not eab or not ebc:
                    continue
                cut = sorted(set(eab) | set(ebc))
                parts = self.bits.parts(tri, cut)
                if len(parts) < 2:
                    continue
                yield tri, a, b, c, parts, bridges_of(parts, cut), set(eab), set(ebc)

    def find_BridgeIndepTriangle(self):
        for tri, a, b, c, parts, br, eab, ebc in self._two_sided():
            if len(parts) != 2 or min(len(p) for p in parts) < 2 or len(br) != 2:
                continue
            f1, f2 = br
            if set(f1) & set(f2):
                continue
            if f1 in eab and f1 not in ebc and f2 in ebc and f2 not in eab:
                pass
            elif f2 in eab and f2 not in ebc and f1 in ebc and f1 not in eab:
                f1, f2 = f2, f1
            else:
                continue
            forced = [(ekey(a, b), f1), (ekey(b, c), f2)]
            return SeparatorInstance(
                "BridgeIndepTriangle", tri, br, parts,
                {"center": b, "forced": forced, "mark": [ekey(a, c)]},
            )
        return None

    def _singular(self, want_edge: bool):
        for tri, a, b, c, parts, br, eab, ebc in self._two_sided():
            for p in parts:
                if len(p) != 1:
                    continue
                d = p[0]
                at = [f for f in br if d in f]
                if len(at) != 2:
                    continue
                x = at[0][0] if at[0][1] == d else at[0][1]
                y = at[1][0] if at[1][1] == d else at[1][1]
                if self.g.has_edge(x, y) != want_edge:
                    continue
                return tri, a, b, c, d, at, parts, eab, ebc
        return None

    def find_SingularTriangle(self):
        hit = self._singular(want_edge=False)
        if hit is None:
            return None
        tri, a, b, c, d, at, parts, eab, ebc = hit
        f1, f2 = at
        if f1 in eab and f2 in ebc and not (f1 in ebc and f2 in eab):
            pass
        elif f2 in eab and f1 in ebc and not (f2 in ebc and f1 in eab):
            f1, f2 = f2, f1
        else:
            return None
        return SeparatorInstance(
            "SingularTriangle", tri, at, parts,
            {"center": d, "forced": [(ekey(a, b), f1), (ekey(b, c), f2)], "mark": [ekey(a, c)]},
        )

    def find_AmbiguousTriangle(self):
        hit = self._singular(want_edge=True)
        if hit is None:
            return None
        tri, a, b, c, d, at, parts, eab, ebc = hit
        return SeparatorInstance(
            "AmbiguousTriangle", tri, at, parts, {"center": d, "hint": ekey(a, b)}
        )

    def find_K5Destroyer(self):
        g = self.g
        adj = g.adj
        for q in self.k5():
            five = [v for v in q if g.degree(v) == 5]
            if len(five) < 2:
                continue
            for x, y in permutations(five, 2):
                rest = [v for v in q if v not in (x, y)]
                for a, b, c in permutations(rest):
                    zs = (adj[a] & adj[b] & adj[c] & adj[y]) - set(q)
                    us = (adj[a] & adj[c] & adj[x]) - set(q)
                    for z in sorted(zs):
                        vs = (adj[a] & adj[b] & adj[z]) - set(q)
                        if not vs:
                            continue
                        for u in sorted(us):
                            if valid_pair(self.comp, ekey(a, c), ekey(x, u)):
                                return SeparatorInstance(
                                    "K5Destroyer", q, [ekey(x, u)],
                                    extras={"hint": ekey(a, c), "partner": ekey(x, u), "z": z},
                                )
        return None

    # tripods

    def _tripods(self):
        for tri in self.tris():
            es = cycle_edges(tri)
            cuts = [set(self.E(e)) for e in es]
            if not all(cuts):
                continue
            cut = sorted(set().union(*cuts))
            parts = self.bits.parts(tri, cut)
            if len(parts) < 2:
                continue
            yield tri, es, cuts, parts, bridges_of(parts, cut)

    @staticmethod
    def _assign(es, cuts, br) -> Optional[list]:
        if len(br) != 3:
            return None
        out = []
        for e, cut in zip(es, cuts):
            mine = [f for f in br if f in cut]
            if len(mine) != 1:
                return None
            out.append((e, mine[0]))
        if len({f for _, f in out}) != 3:
            return None
        return out

    def _singleton_tripod(self):
        for tri, es, cuts, parts, br in self._tripods():
            for p in parts:
                if len(p) != 1:
                    continue
                u = p[0]
                at = [f for f in br if u in f]
                if len(at) != 3:
                    continue
                ends = [f[0] if f[1] == u else f[1] for f in at]
                links = sum(1 for s, t in combinations(ends, 2) if self.g.has_edge(s, t))
                yield tri, es, cuts, parts, at, u, links

    def find_Tripod(self):
        for tri, es, cuts, parts, br in self._tripods():
            if any(len(p) == 1 for p in parts):
                continue
            forced = self._assign(es, cuts, br)
            if forced is not None:
                return SeparatorInstance("Tripod", tri, br, parts, {"forced": forced})
        return None

    def find_StrongTripod(self):
        for tri, es, cuts, parts, at, u, links in self._singleton_tripod():
            if links > 1 or self.g.degree(u) != 6:
                continue
            forced = self._assign(es, cuts, at)
            if forced is not None:
                return SeparatorInstance(
                    "StrongTripod", tri, at, parts, {"center": u, "forced": forced}
                )
        return None

    def find_AmbiguousTripod(self):
        for tri, es, cuts, parts, at, u, links in self._singleton_tripod():
            if links >= 2:
                return SeparatorInstance(
                    "AmbiguousTripod", tri, at, parts, {"center": u, "hint": es[0]}
                )
        return None


# -- cycle splitting ---------------------------------------------------------

def fan_apex(comp: Component, side: set, cyc: tuple) -> int:
    """Apex of the chord fan triangulating the cycle on one side.

    The first cycle vertex whose fan creates no 5-clique with the side wins.
    """
    k = len(cyc)
    adj = comp.g.adj
    for s in range(k):
        apex = cyc[s]
        ok = True
        for j in range(2, k - 1):
            b = cyc[(s + j) % k]
            common = adj[apex] & adj[b] & side
            if any(
                all(y in adj[x] for x, y in combinations(t, 2))
                for t in combinations(sorted(common), 3)
            ):
                ok = False
                break
        if ok:
            return apex
    return cyc[0]


def split_at_cycle(comp: Component, inst: SeparatorInstance) -> Optional[list[Component]]:
    """Two sides of a separating induced cycle, or None if no T1P embedding can exist."""
    cyc = tuple(inst.carrier)
    if len(inst.parts) != 2:
        return None  # three parts cannot share two sides of an uncrossed cycle
    if len(cyc) == 3 and face_key(*cyc) in comp.faces:
        return None
    sides = []
    for part in inst.parts:
        side = comp.restrict(set(part) | set(cyc))
        side.mark(cycle_edges(cyc))
        if len(cyc) == 3:
            side.add_face(*cyc)
        else:
            apex = fan_apex(comp, set(part), cyc)
            s = cyc.index(apex)
            ring = [cyc[(s + j) % len(cyc)] for j in range(1, len(cyc))]
            for b in ring[1:-1]:
                side.g.add_edge(apex, b)
                side.virtual.add(ekey(apex, b))
            for x, y in zip(ring, ring[1:]):
                side.add_face(apex, x, y)
        sides.append(side)
    return sides


# -- two-star families -------------------------------------------------------

def _two_star_templates(variant: str, k: int) -> list[list[tuple[Edge, Edge]]]:
    """Every T1P crossing set of a two-star in generator labels (k large enough)."""
    var = VARIANTS[variant]
    v = two_star_vertex
    out = []
    for phase in (0, 1):
        def pole(i: int) -> int:
            return POLE_P if (i + phase) % 2 == 0 else POLE_Q

        def other(i: int) -> int:
            return POLE_Q if pole(i) == POLE_P else POLE_P

        base = [((v(i - 1), v(i + 1)), (pole(i), v(i))) for i in range(2, k)]
        if var == "handle":
            left_alt = ((other(2), v(1)), (pole(2), v(2)))
            right_alt = ((other(k - 1), v(k)), (pole(k - 1), v(k - 1)))
            for lft in (False, True):
                for rgt in (False, True):
                    s = list(base)
                    if lft:
                        s[0] = left_alt
                    if rgt:
                        s[-1] = right_alt
                    out.append(s)
            continue
        s = list(base)
        if var == "x":
            s.append(((POLE_P, POLE_Q), (v(1), v(k))))
        if var in ("semi", "full"):
            s.append(((pole(1), v(1)), (v(2), v(k))))
        if var == "full":
            s.append(((pole(k), v(k)), (v(1), v(k - 1))))
        out.append(s)
    return [sorted(tuple(sorted((ekey(*e), ekey(*f)))) for e, f in s) for s in out]


# smallest k for which the templates are complete (smaller ones go to the oracle)
TEMPLATE_MIN_K = {"handle": 6, "circle": 6, "x": 6, "semi": 8, "full": 8}


@dataclass
class FamilyMatch:
    variant: str
    k: int
    mapping: dict  # generator label -> component vertex

    def templates(self) -> list[list[tuple[Edge, Edge]]]:
        mp = self.mapping
        out = []
        for s in _two_star_templates(self.variant, self.k):
            out.append([
                (ekey(mp[e[0]], mp[e[1]]), ekey(mp[f[0]], mp[f[1]])) for e, f in s
            ])
        return out

    @property
    def has_templates(self) -> bool:
        return self.k >= TEMPLATE_MIN_K[self.variant]


_profiles: dict[int, list] = {}


def _family_profiles(n: int) -> list:
    if n not in _profiles:
        k = n - 2
        rows = []
        for var in ("handle", "circle", "x", "semi", "full"):
            if k < 5 or (var in ("semi", "full") and k % 2):
                continue
            fg = gen_two_star(var, k)
            rows.append((var, k, fg.m, sorted(fg.degree(u) for u in fg.adj), fg))
        _profiles[n] = rows
    return _profiles[n]


def match_family(g: Graph) -> Optional[FamilyMatch]:
    """Identify ``g`` as an ambiguous two-star (handle, circle, x, semi, full)."""
    n = g.n
    if n < 7:
        return None
    degs = None
    for var, k, m, prof, fg in _family_profiles(n):
        if g.m != m:
            continue
        if degs is None:
            degs = sorted(g.degree(u) for u in g.adj)
        if degs != prof:
            continue
        gm = nx.algorithms.isomorphism.GraphMatcher(
            nx.Graph(list(fg.iter_edges())), nx.Graph(list(g.iter_edges()))
        )
        if gm.is_isomorphic():
            return FamilyMatch(var, k, dict(gm.mapping))
    return None
