"""Directed and undirected labelled simple graphs.

Vertex labels are opaque hashable values with a total order; all labels in
one graph must be mutually comparable (all strings, all ints, ...).  The
sorted label order fixes every iteration order, so all derived outputs are
reproducible.  Graphs are immutable after construction and safe to share
between threads.

Parallel edges and self-loops are rejected at construction, never silently
dropped.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable

from .errors import (
    CyclicGraph,
    InvalidGraph,
    NotAForest,
    ParseError,
    UnknownVertex,
)

Label = Hashable


def _sorted_labels(labels: Iterable[Label]) -> tuple:
    try:
        return tuple(sorted(set(labels)))
    except TypeError as exc:
        raise InvalidGraph(f"vertex labels must be mutually orderable: {exc}")


class DirectedGraph:
    """A finite simple directed graph."""

    __slots__ = ("vertices", "edges", "_in", "_out")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[tuple] = ()):
        self.vertices = _sorted_labels(vertices)
        declared = set(self.vertices)
        edge_set = set()
        for edge in edges:
            x, y = edge
            if x == y:
                raise InvalidGraph(f"self-loop at {x!r}")
            if x not in declared or y not in declared:
                raise UnknownVertex(f"edge ({x!r} -> {y!r}) uses an undeclared vertex")
            if (x, y) in edge_set:
                raise InvalidGraph(f"duplicate edge ({x!r} -> {y!r})")
            edge_set.add((x, y))
        self.edges = tuple(sorted(edge_set))
        ins: dict = {v: [] for v in self.vertices}
        outs: dict = {v: [] for v in self.vertices}
        for x, y in self.edges:
            outs[x].append((x, y))
            ins[y].append((x, y))
        self._in = {v: tuple(es) for v, es in ins.items()}
        self._out = {v: tuple(es) for v, es in outs.items()}

    def in_edges(self, v: Label) -> tuple:
        self._require(v)
        return self._in[v]

    def out_edges(self, v: Label) -> tuple:
        self._require(v)
        return self._out[v]

    def has_edge(self, x: Label, y: Label) -> bool:
        return (x, y) in self._out.get(x, ())

    def _require(self, v: Label) -> None:
        if v not in self._in:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"DirectedGraph(vertices={list(self.vertices)!r}, edges={list(self.edges)!r})"


class UndirectedGraph:
    """A finite simple undirected graph."""

    __slots__ = ("vertices", "edges", "_nbrs")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[tuple] = ()):
        self.vertices = _sorted_labels(vertices)
        declared = set(self.vertices)
        edge_set = set()
        for edge in edges:
            v, w = edge
            if v == w:
                raise InvalidGraph(f"self-loop at {v!r}")
            if v not in declared or w not in declared:
                raise UnknownVertex(f"edge {{{v!r}, {w!r}}} uses an undeclared vertex")
            key = (v, w) if self._before(v, w) else (w, v)
            if key in edge_set:
                raise InvalidGraph(f"duplicate edge {{{v!r}, {w!r}}}")
            edge_set.add(key)
        self.edges = tuple(sorted(edge_set))
        nbrs: dict = {v: set() for v in self.vertices}
        for v, w in self.edges:
            nbrs[v].add(w)
            nbrs[w].add(v)
        self._nbrs = {v: frozenset(s) for v, s in nbrs.items()}

    @staticmethod
    def _before(v, w) -> bool:
        return sorted((v, w))[0] == v

    def neighbors(self, v: Label) -> frozenset:
        self._require(v)
        return self._nbrs[v]

    def degree(self, v: Label) -> int:
        return len(self.neighbors(v))

    def adjacent(self, v: Label, w: Label) -> bool:
        return w in self.neighbors(v)

    def _require(self, v: Label) -> None:
        if v not in self._nbrs:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(vertices={list(self.vertices)!r}, edges={list(self.edges)!r})"


def in_degree(g: DirectedGraph, v: Label) -> int:
    return len(g.in_edges(v))


def sources(g: DirectedGraph) -> frozenset:
    """Vertices with no edges directed to them."""
    return frozenset(v for v in g.vertices if not g.in_edges(v))


def topological_order(g: DirectedGraph) -> list:
    """Order the vertices with every edge tail before its head.

    The initial sources occupy the leading positions.  Raises CyclicGraph
    (with one witness cycle) when no such order exists.
    """
    indeg = {v: len(g.in_edges(v)) for v in g.vertices}
    initial = sorted(v for v, d in indeg.items() if d == 0)
    order = list(initial)
    ready: list = []
    for v in initial:
        for _, y in g.out_edges(v):
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(ready, y)
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for _, y in g.out_edges(v):
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(ready, y)
    if len(order) < len(g.vertices):
        remaining = {v for v in g.vertices if v not in set(order)}
        cycle = _witness_cycle(g, remaining)
        raise CyclicGraph(f"directed cycle: {' -> '.join(map(repr, cycle))}", cycle)
    return order


def _witness_cycle(g: DirectedGraph, remaining: set) -> tuple:
    # every remaining vertex keeps an in-edge inside `remaining`; walking
    # predecessors must therefore revisit a vertex, closing a cycle
    start = min(remaining)
    trail = [start]
    index = {start: 0}
    while True:
        pred = min(x for x, _ in g.in_edges(trail[-1]) if x in remaining)
        if pred in index:
            return tuple(reversed(trail[index[pred]:]))
        index[pred] = len(trail)
        trail.append(pred)


def is_acyclic(g: DirectedGraph) -> bool:
    try:
        topological_order(g)
        return True
    except CyclicGraph:
        return False


def neighborhood(g: UndirectedGraph, v: Label) -> frozenset:
    return g.neighbors(v)


def induced_subgraph(g: UndirectedGraph, w: Iterable[Label]) -> UndirectedGraph:
    keep = set(w)
    unknown = keep - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)!r}")
    edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    return UndirectedGraph(keep, edges)


def remove_vertices(g: UndirectedGraph, w: Iterable[Label]) -> UndirectedGraph:
    """The induced subgraph on the complement of ``w``."""
    drop = set(w)
    return induced_subgraph(g, [v for v in g.vertices if v not in drop])


def max_degree(g: UndirectedGraph) -> int:
    if not g.vertices:
        return 0
    return max(g.degree(v) for v in g.vertices)


def is_forest(g: UndirectedGraph) -> bool:
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v, w in g.edges:
        rv, rw = find(v), find(w)
        if rv == rw:
            return False
        parent[rv] = rw
    return True


def require_forest(g: UndirectedGraph) -> None:
    if not is_forest(g):
        raise NotAForest("graph contains a cycle")


# --- text edge-list ingestion -------------------------------------------
#
# One edge per line, "x y"; lines starting with '#' are ignored; isolated
# vertices are declared with "vertex v" lines.  UTF-8, LF.

def _parse_lines(text: str):
    vertices: list = []
    edges: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <label>'", lineno)
            vertices.append((tokens[1], lineno))
        elif len(tokens) == 2:
            edges.append((tokens[0], tokens[1], lineno))
        else:
            raise ParseError(f"expected 'x y' or 'vertex v', got {line!r}", lineno)
    return vertices, edges


def parse_directed(text: str) -> DirectedGraph:
    vertices, edges = _parse_lines(text)
    labels = {v for v, _ in vertices}
    seen = set()
    pairs = []
    for x, y, lineno in edges:
        if x == y:
            raise ParseError(f"self-loop at {x!r}", lineno)
        if (x, y) in seen:
            raise ParseError(f"duplicate edge ({x!r} -> {y!r})", lineno)
        seen.add((x, y))
        labels.update((x, y))
        pairs.append((x, y))
    return DirectedGraph(labels, pairs)


def parse_undirected(text: str) -> UndirectedGraph:
    vertices, edges = _parse_lines(text)
    labels = {v for v, _ in vertices}
    seen = set()
    pairs = []
    for x, y, lineno in edges:
        if x == y:
            raise ParseError(f"self-loop at {x!r}", lineno)
        key = tuple(sorted((x, y)))
        if key in seen:
            raise ParseError(f"duplicate edge {{{x!r}, {y!r}}}", lineno)
        seen.add(key)
        labels.update((x, y))
        pairs.append((x, y))
    return UndirectedGraph(labels, pairs)
