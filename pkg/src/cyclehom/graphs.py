"""Finite undirected graphs with loops, and the constructions the coloring
complexes are built from.

Vertices are the contiguous integers 1..vertex_count.  A loop is stored as
the pair (v, v).  Every operation that permutes or restricts vertices returns
an explicit relabeling map, because downstream sign conventions depend on
vertex order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class InvalidParameterError(ValueError):
    """Raised when an operation is called outside its domain."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph, loops allowed, no multi-edges; vertices 1..n."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidParameterError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise InvalidParameterError(f"edge ({u},{v}) out of range")
            if u > v:
                raise InvalidParameterError(f"edge ({u},{v}) not normalized")

    @staticmethod
    def build(n: int, edge_pairs) -> "Graph":
        return Graph(n, frozenset(_normalize_edge(u, v) for u, v in edge_pairs))

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            if b == v:
                out.add(a)
        return frozenset(out)

    def is_looped(self, v: int) -> bool:
        return (v, v) in self.edges


def make_standard(kind: str, k: int) -> Graph:
    """Standard graphs: cycle C_k (k >= 3), complete K_k, path P_k."""
    if kind == "cycle":
        if k < 3:
            raise InvalidParameterError("cycle requires k >= 3")
        edges = [(i, i % k + 1) for i in range(1, k + 1)]
        return Graph.build(k, edges)
    if kind == "complete":
        if k < 1:
            raise InvalidParameterError("complete requires k >= 1")
        edges = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        return Graph.build(k, edges)
    if kind == "path":
        if k < 1:
            raise InvalidParameterError("path requires k >= 1")
        return Graph.build(k, [(i, i + 1) for i in range(1, k)])
    raise InvalidParameterError(f"unknown graph kind {kind!r}")


def cycle(k: int) -> Graph:
    return make_standard("cycle", k)


def complete(k: int) -> Graph:
    return make_standard("complete", k)


def strong_complement(g: Graph) -> Graph:
    """Complement taken inside V x V: loops are complemented too."""
    n = g.vertex_count
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u, n + 1)
        if (u, v) not in g.edges
    ]
    return Graph.build(n, edges)


def product_vertex_label(t_count: int, g_count: int, x: int, y: int) -> int:
    """Vertex of the categorical product corresponding to the pair (x, y).

    Pairs are ordered lexicographically, matching the standard orientation
    order on Hom-plus vertices.
    """
    return (x - 1) * g_count + y


def categorical_product(t: Graph, g: Graph) -> Graph:
    """Categorical (tensor) product: (x,y) ~ (x',y') iff x~x' and y~y'."""
    nt, ng = t.vertex_count, g.vertex_count
    edges = set()
    for (a, b) in t.edges:
        for (c, d) in g.edges:
            # each unordered T-edge and G-edge induces up to two product edges
            edges.add(_normalize_edge(product_vertex_label(nt, ng, a, c),
                                      product_vertex_label(nt, ng, b, d)))
            edges.add(_normalize_edge(product_vertex_label(nt, ng, a, d),
                                      product_vertex_label(nt, ng, b, c)))
    return Graph.build(nt * ng, edges)


def induced_subgraph(g: Graph, subset) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `subset`, relabeled 1..|subset| preserving order.

    Returns (graph, relabel) where relabel maps old labels to new ones.
    """
    s = sorted(set(subset))
    for v in s:
        if not (1 <= v <= g.vertex_count):
            raise InvalidParameterError(f"vertex {v} out of range")
    relabel = {v: i + 1 for i, v in enumerate(s)}
    edges = [
        (relabel[u], relabel[v])
        for (u, v) in g.edges
        if u in relabel and v in relabel
    ]
    return Graph.build(len(s), edges), relabel


# --- text / JSON interchange -------------------------------------------------

def to_text(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines += [f"e {u} {v}" for (u, v) in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise InvalidParameterError(f"bad graph line: {line!r}")
    if n is None:
        raise InvalidParameterError("missing 'n <count>' line")
    return Graph.build(n, edges)


def to_json_dict(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in sorted(g.edges)]}


def from_json_dict(data: dict) -> Graph:
    return Graph.build(int(data["vertices"]), [tuple(e) for e in data["edges"]])


def load(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json_dict(json.loads(text))
    return from_text(text)
