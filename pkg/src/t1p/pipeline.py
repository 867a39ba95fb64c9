"""Recognition driver: preprocessing, reduction, counting and witness.

The working graph is reduced by degree-3 stripping, separator
applications and splits at separating cycles. Whatever no rule settles
is decided by branching on a single edge (cross it with one of its
candidate partners, or mark it uncrossed), so counts are exact. Graphs
of order at most six are handed to the brute-force oracle together with
the current marks and required faces.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .embedding import (
    T1PEmbedding,
    canonical_crossings,
    embedding_from_crossings,
    has_face,
    validate_t1p,
)
from .enumeration import cliques_up_to
from .graph import Edge, Graph, ekey, is_connected, vertex_connectivity_at_least
from .oracle import OracleConstraints, oracle_enumerate
from .planarity import is_planar_edges
from .separators import (
    CYCLE_KINDS,
    FORCED_KINDS,
    BitGraph,
    Component,
    FamilyMatch,
    GraphDelta,
    Scanner,
    SeparatorInstance,
    commit,
    crossing_candidates,
    face_key,
    kites,
    match_family,
    split_at_cycle,
    valid_pair,
)

SCHEMA_VERSION = 1
SMALL_ORDER = 6
DEFAULT_NODE_BUDGET = 200_000

Pairs = list[tuple[Edge, Edge]]


class SearchBudgetExceeded(RuntimeError):
    """The branching search ran out of nodes or time."""


@dataclass
class Outcome:
    count: int
    pairs: Optional[Pairs] = None  # crossing pairs of one embedding when count > 0


ZERO = Outcome(0, None)


@dataclass
class ReductionTrace:
    deltas: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.deltas)

    def to_json_lines(self) -> str:
        return "".join(json.dumps(d.to_json_obj(), sort_keys=True) + "\n" for d in self.deltas)


@dataclass
class RecognitionResult:
    is_t1p: bool
    count: int
    witness: Optional[T1PEmbedding]
    reason: Optional[str]
    trace: ReductionTrace

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "is_t1p": self.is_t1p,
            "count": self.count,
            "witness": self.witness.to_json_obj() if self.witness else None,
            "reason": self.reason,
            "trace_len": len(self.trace),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


# -- preprocessing -----------------------------------------------------------

def _has_k7(g: Graph) -> bool:
    if g.n < 7:
        return False
    if g.m <= 4 * g.n - 8:
        return bool(cliques_up_to(g, 7).get(7))
    if g.n <= 30:
        h = nx.Graph(list(g.iter_edges()))
        return any(len(c) >= 7 for c in nx.find_cliques(h))
    return False  # rejected by the edge count anyway


def preprocess(g: Graph) -> Optional[str]:
    """None if ``g`` passes the entry checks, else a reason code."""
    if g.n == 0 or g.m == 0:
        return "empty graph"
    if not is_connected(g):
        return "disconnected"
    if _has_k7(g):
        return "contains K7"
    n, m = g.n, g.m
    if n < 3 or m < 3 * n - 6 or m > max(4 * n - 8, 3):
        return "edge count"
    if n >= 4:
        maximal_planar = m == 3 * n - 6 and is_planar_edges(g.iter_edges())
        if not maximal_planar and not vertex_connectivity_at_least(g, 3):
            return "not 3-connected"
    return None


def mark_non_clique_edges(g: Graph) -> GraphDelta:
    """Mark every edge lying in no 4-clique; such an edge can never be crossed."""
    adj = g.adj
    marked = []
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if not any(adj[x] & common for x in common):
            g.mark_edge((u, v))
            marked.append((u, v))
    return GraphDelta("MarkNonClique", marked_edges=marked)


# -- engine ------------------------------------------------------------------

class Engine:
    """Exact counter over working components."""

    def __init__(
        self,
        node_budget: int = DEFAULT_NODE_BUDGET,
        time_budget: Optional[float] = None,
        use_separators: bool = True,
        use_families: bool = True,
        oracle_time: float = 10.0,
    ) -> None:
        self.node_budget = node_budget
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.use_separators = use_separators
        self.use_families = use_families
        self.oracle_time = oracle_time
        self.nodes = 0
        self.trace = ReductionTrace()
        self.fired: dict[str, int] = {}
        self._next_id = 0

    # bookkeeping

    def _tick(self) -> int:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceeded(f"more than {self.node_budget} search nodes")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")
        cid = self._next_id
        self._next_id += 1
        return cid

    def _log(self, delta: GraphDelta) -> None:
        self.trace.deltas.append(delta)
        self.fired[delta.kind] = self.fired.get(delta.kind, 0) + 1

    # leaves

    def small_leaf(self, comp: Component, cid: int) -> Outcome:
        cons = OracleConstraints.of(
            comp.g.marked, comp.faces, time_budget=self.oracle_time, virtual=comp.virtual
        )
        embs = oracle_enumerate(comp.g, cons)
        self._log(GraphDelta(
            "SmallLeaf", cid, note=f"n={comp.g.n} m={comp.g.m} count={len(embs)}"
        ))
        if not embs:
            return ZERO
        return Outcome(len(embs), [tuple(p) for p in embs[0].crossing_set()])

    def planar_leaf(self, comp: Component, cid: int) -> Outcome:
        # no crossings left: the graph must be a planar triangulation
        if not is_planar_edges(comp.g.iter_edges()):
            return ZERO
        self._log(GraphDelta("PlanarLeaf", cid, note=f"n={comp.g.n}"))
        return Outcome(1, [])

    def family_leaf(self, comp: Component, fm: FamilyMatch, cid: int) -> Outcome:
        if not fm.has_templates:
            return self.small_leaf_any(comp, cid)
        g = comp.g
        ok: list[Pairs] = []
        for tpl in fm.templates():
            if self._template_fits(comp, tpl):
                ok.append(tpl)
        self._log(GraphDelta(
            "FamilyShortcut", cid,
            family_shortcut={"variant": fm.variant, "k": fm.k, "count": len(ok)},
            label_assignments=[(min(g.unmarked_edges() or g.edges()), len(ok))] if ok else [],
        ))
        if not ok:
            return ZERO
        return Outcome(len(ok), ok[0])

    def small_leaf_any(self, comp: Component, cid: int) -> Outcome:
        """Oracle on a component above the usual small order (used for short two-stars)."""
        return self.small_leaf(comp, cid)

    @staticmethod
    def _template_fits(comp: Component, tpl: Pairs) -> bool:
        for e, f in tpl:
            if not valid_pair(comp, e, f):
                return False
        emb = embedding_from_crossings(comp.g, tpl)
        if emb is None:
            return False
        if not validate_t1p(comp.g, emb, comp.g.marked).ok:
            return False
        return all(has_face(emb, f) for f in comp.faces)

    # checks

    @staticmethod
    def faces_ok(comp: Component, bits: BitGraph) -> bool:
        g = comp.g
        for a, b, c in comp.faces:
            if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
                return False
            if not bits.connected_without((a, b, c)):
                return False
        return True

    @staticmethod
    def k5_feasible(g: Graph, quads: dict) -> bool:
        """Each 5-clique is non-planar, so one of its own 4-cliques must host a crossing."""
        for q in cliques_up_to(g, 5).get(5, []):
            if not any(frozenset(set(q) - {y}) in quads for y in q):
                return False
        return True

    # main recursion

    def solve(self, comp: Component) -> Outcome:
        cid = self._tick()
        g = comp.g
        n = g.n
        if n <= SMALL_ORDER:
            return self.small_leaf(comp, cid)
        c = comp.crossing_budget()
        if c < 0 or c > n - 2:
            return ZERO
        bits = BitGraph(g)
        if len(bits.parts()) != 1 or not self.faces_ok(comp, bits):
            return ZERO
        if c == 0:
            return self.planar_leaf(comp, cid)

        w = next((v for v in sorted(g.adj) if g.degree(v) == 3), None)
        if w is not None:
            return self.strip(comp, w, cid)

        pairs = crossing_candidates(comp)
        in_pair = {e for p in pairs for e in p}
        newly = [e for e in g.edges() if e not in g.marked and e not in in_pair]
        if newly:
            comp.mark(newly)
            self._log(GraphDelta("MarkUncrossable", cid, marked_edges=newly))
        quads: dict[frozenset, list] = {}
        for e, f in pairs:
            quads.setdefault(frozenset(e + f), []).append((e, f))
        if c > len(quads) or 2 * c > len(in_pair):
            return ZERO
        if not self.k5_feasible(g, quads):
            return ZERO
        if not is_planar_edges(e for e in g.iter_edges() if e in g.marked):
            return ZERO

        if self.use_families:
            fm = match_family(g)
            if fm is not None:
                return self.family_leaf(comp, fm, cid)

        if self.use_separators:
            inst = Scanner(comp).scan()
            if inst is not None:
                out = self.apply(comp, inst, cid, pairs)
                if out is not None:
                    return out

        if c == len(quads):
            forced = [ps[0] for ps in quads.values() if len(ps) == 1]
            if forced:
                return self.finalize(comp, sorted(forced), cid)

        return self.branch(comp, pairs, cid)

    def strip(self, comp: Component, w: int, cid: int) -> Outcome:
        g = comp.g
        a, b, c = sorted(g.neighbors(w))
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            return ZERO
        if face_key(a, b, c) in comp.faces:
            return ZERO
        rest = comp.restrict(v for v in g.adj if v != w)
        rest.add_face(a, b, c)
        self._log(GraphDelta(
            "Degree3", cid, removed_edges=[(ekey(w, x), None) for x in (a, b, c)],
            marked_edges=[ekey(a, b), ekey(b, c), ekey(a, c)], note=f"vertex {w}",
        ))
        return self.solve(rest)

    def finalize(self, comp: Component, forced: Pairs, cid: int) -> Outcome:
        """Every live 4-clique must hold exactly one crossing; commit the unambiguous ones."""
        child = comp.copy()
        for e, f in forced:
            if not commit(child, e, f):
                return ZERO
        self._log(GraphDelta(
            "Star", cid, removed_edges=[(f, e) for e, f in forced],
            marked_edges=sorted({k for e, f in forced for k in kites(e, f)}),
        ))
        out = self.solve(child)
        if out.count == 0:
            return ZERO
        return Outcome(out.count, out.pairs + forced)

    def apply(
        self, comp: Component, inst: SeparatorInstance, cid: int, pairs: Pairs
    ) -> Optional[Outcome]:
        """Apply a separator; None means it did not settle anything here."""
        kind = inst.kind
        if kind in CYCLE_KINDS:
            sides = split_at_cycle(comp, inst)
            self._log(GraphDelta(
                kind, cid, marked_edges=[ekey(*e) for e in _cycle(inst.carrier)],
                split={"cycle": list(inst.carrier), "parts": [len(p) for p in inst.parts]},
            ))
            if sides is None:
                return ZERO
            total, union = 1, []
            for side in sides:
                out = self.solve(side)
                if out.count == 0:
                    return ZERO
                total *= out.count
                union.extend(out.pairs)
            return Outcome(total, union)
        if kind == "SepEdge":
            return self.apply_sep_edge(comp, inst, cid)
        if kind in FORCED_KINDS and self._preconditions_hold(comp, kind):
            child = comp.copy()
            forced = inst.extras["forced"]
            for keep, drop in forced:
                if not commit(child, keep, drop):
                    return None
            child.mark(inst.extras.get("mark", ()))
            if kind == "SepTriple":
                child.mark(_cycle(inst.carrier))
            self._log(GraphDelta(
                kind, cid, removed_edges=[(drop, keep) for keep, drop in forced],
                marked_edges=sorted(child.g.marked - comp.g.marked),
            ))
            out = self.solve(child)
            if out.count == 0:
                return ZERO
            return Outcome(out.count, out.pairs + [(k, d) for k, d in forced])
        hint = inst.extras.get("hint")
        if hint is None and kind in FORCED_KINDS:
            hint = inst.extras["forced"][0][0]
        if hint is not None and any(hint in p for p in pairs):
            self._log(GraphDelta(kind, cid, note=f"branch on {list(hint)}"))
            return self.branch(comp, pairs, cid, edge=ekey(*hint))
        return None

    @staticmethod
    def _preconditions_hold(comp: Component, kind: str) -> bool:
        """Tripod rules assume a 6-connected graph without 5-cliques."""
        if kind not in ("Tripod", "StrongTripod"):
            return True
        g = comp.g
        return not cliques_up_to(g, 5).get(5) and vertex_connectivity_at_least(g, 6)

    def apply_sep_edge(self, comp: Component, inst: SeparatorInstance, cid: int) -> Optional[Outcome]:
        uv = ekey(*inst.carrier)
        u, v = uv
        for br in inst.bridges:
            if not valid_pair(comp, uv, br):
                return None
        child = comp.copy()
        child.g.remove_edge(u, v)
        for x, y in inst.bridges:
            child.mark([(x, y), *kites(uv, (x, y))])
            child.add_face(u, x, y)
            child.add_face(v, x, y)
        t = len(inst.bridges)
        self._log(GraphDelta(
            "SepEdge", cid, removed_edges=[(uv, inst.bridges[0])],
            marked_edges=sorted(child.g.marked - comp.g.marked),
            label_assignments=[(uv, t)],
        ))
        out = self.solve(child)
        if out.count == 0:
            return ZERO
        return Outcome(t * out.count, out.pairs + [(uv, inst.bridges[0])])

    def branch(self, comp: Component, pairs: Pairs, cid: int, edge: Optional[Edge] = None) -> Outcome:
        g = comp.g
        marked_edges = [e for e in g.iter_edges() if e in g.marked]
        if not is_planar_edges(marked_edges):
            return ZERO
        partners: dict[Edge, list[Edge]] = {}
        for e, f in pairs:
            partners.setdefault(e, []).append(f)
            partners.setdefault(f, []).append(e)
        if edge is None or edge not in partners:
            edge = min(partners, key=lambda e: (len(partners[e]), e))
        opts = sorted(partners[edge])
        self._log(GraphDelta("Branch", cid, note=f"edge {list(edge)} with {len(opts)} partners"))
        total = 0
        witness: Optional[Pairs] = None
        for f in opts:
            child = comp.copy()
            if not commit(child, edge, f):
                continue
            out = self.solve(child)
            if out.count:
                total += out.count
                if witness is None:
                    witness = out.pairs + [(edge, f)]
        child = comp.copy()
        child.g.mark_edge(edge)
        out = self.solve(child)
        if out.count:
            total += out.count
            if witness is None:
                witness = out.pairs
        return Outcome(total, witness) if total else ZERO


def _cycle(carrier) -> list[Edge]:
    k = len(carrier)
    return [ekey(carrier[i], carrier[(i + 1) % k]) for i in range(k)]


# -- public entry points -----------------------------------------------------

def recognize(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: Optional[float] = None,
    use_separators: bool = True,
    use_families: bool = True,
    oracle_time: float = 10.0,
    marked: Iterable[Edge] = (),
) -> RecognitionResult:
    """Decide T1P membership, count the T1P embeddings and return a witness.

    ``marked`` edges are constraints: only embeddings leaving them
    uncrossed are counted. Raises :class:`SearchBudgetExceeded` or an oracle timeout when a
    budget runs out; these are not rejections.
    """
    engine = Engine(node_budget, time_budget, use_separators, use_families, oracle_time)
    trace = engine.trace
    reason = preprocess(g)
    if reason is not None:
        return RecognitionResult(False, 0, None, reason, trace)
    comp = Component(g.copy())
    comp.g.marked.clear()
    comp.g.labels.clear()
    fixed = sorted({ekey(*e) for e in marked})
    for e in fixed:
        if not g.has_edge(*e):
            return RecognitionResult(False, 0, None, f"marked edge {e} not in graph", trace)
        comp.g.mark_edge(e)
    if comp.g.n > SMALL_ORDER:
        trace.deltas.append(mark_non_clique_edges(comp.g))
    out = engine.solve(comp)
    if out.count == 0:
        return RecognitionResult(False, 0, None, "no T1P embedding", trace)
    pairs = canonical_crossings(out.pairs)
    emb = embedding_from_crossings(g, pairs)
    if emb is None or not validate_t1p(g, emb, fixed).ok:
        return RecognitionResult(False, 0, None, "internal error: witness failed validation", trace)
    return RecognitionResult(True, out.count, emb, None, trace)


def count_embeddings(g: Graph, **kw) -> int:
    return recognize(g, **kw).count
