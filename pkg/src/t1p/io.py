"""Reading and writing graphs: edge lists and graph6."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .graph import Graph, build_graph


class InputError(ValueError):
    """Malformed graph input; the message names the offending line."""


GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line; ``#`` starts a comment; blank lines skipped."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex ids, got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {raw.strip()!r}") from None
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: negative vertex id in {raw.strip()!r}")
        if u == v:
            raise InputError(f"line {lineno}: loop edge ({u}, {v})")
        edges.append((u, v))
    if not edges:
        raise InputError("no edges in input")
    return build_graph(edges)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    line = line.splitlines()[0].strip() if line else ""
    if not line:
        raise InputError("empty graph6 input")
    try:
        h = nx.from_graph6_bytes(line.encode("ascii"))
    except Exception as exc:  # networkx raises several types
        raise InputError(f"bad graph6 string: {exc}") from None
    if h.number_of_edges() == 0:
        raise InputError("no edges in input")
    return build_graph(h.edges(), h.nodes())


def looks_like_graph6(text: str) -> bool:
    body = text.strip()
    if body.startswith(GRAPH6_HEADER):
        return True
    lines = [ln for ln in body.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return len(lines) == 1 and len(lines[0].split()) == 1


def parse_graph(text: str) -> Graph:
    return parse_graph6(text) if looks_like_graph6(text) else parse_edge_list(text)


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())
