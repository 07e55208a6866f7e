"""Complexes of directed forests.

A directed forest is an edge set that is acyclic with at most one edge
into each vertex; equivalently disjoint trees with every edge oriented
away from its root.  Forests are read as spanning subgraphs: a vertex
touched by no forest edge is a singleton tree and counts as a root.  The
complex of a digraph has the edges of the digraph as its vertices and the
directed forests as its faces; fixing the root set selects the subcomplex
generated by the forests rooted exactly there.

Enumeration is by backtracking over one in-edge choice per vertex, which
is exponential in the worst case; the configured cap turns runaway cases
into SizeLimit.  No sub-enumerative algorithm is attempted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .complexes import HomotopyType, SimplicialComplex, face_set
from .config import resolve_cap
from .errors import (
    EmptyRootSet,
    EquivalenceViolation,
    NoEdges,
    NoSuchForest,
    RootMismatch,
    SizeLimit,
    UnknownEdge,
    UnknownVertex,
)
from .graphs import DirectedGraph, in_degree, sources, topological_order
from .homology import greedy_collapse


def is_directed_forest(g: DirectedGraph, edges) -> bool:
    chosen = set(map(tuple, edges))
    known = set(g.edges)
    unknown = chosen - known
    if unknown:
        raise UnknownEdge(f"edges not in the graph: {sorted(unknown)!r}")
    parent: dict = {}
    for x, y in chosen:
        if y in parent:
            return False
        parent[y] = x
    bound = len(parent)
    for start in parent:
        v = parent[start]
        for _ in range(bound):
            if v == start:
                return False
            if v not in parent:
                break
            v = parent[v]
        else:
            return False  # walk never left the parent map: trapped in a cycle
    return True


def forest_roots(g: DirectedGraph, edges) -> frozenset:
    """Root set of a spanning forest: vertices with no in-edge in it."""
    heads = {y for _, y in edges}
    return frozenset(v for v in g.vertices if v not in heads)


def _walk_hits(parent: dict, start, target) -> bool:
    v = start
    while v in parent:
        v = parent[v]
        if v == target:
            return True
    return False


def maximal_forests(g: DirectedGraph, cap: int | None = None) -> list:
    """All maximal directed forests, as sorted frozensets of edges."""
    limit = resolve_cap(cap)
    targets = [v for v in g.vertices if g.in_edges(v)]
    out: list = []
    parent: dict = {}
    chosen: list = []

    def leaf_is_maximal() -> bool:
        for y in targets:
            if y in parent:
                continue
            for x, _ in g.in_edges(y):
                if not _walk_hits(parent, x, y):
                    return False  # (x -> y) could still be added
        return True

    def rec(i: int) -> None:
        if i == len(targets):
            if leaf_is_maximal():
                out.append(frozenset(chosen))
                if len(out) > limit:
                    raise SizeLimit(f"maximal forest count exceeds cap {limit}")
            return
        y = targets[i]
        for e in g.in_edges(y):
            x = e[0]
            if _walk_hits(parent, x, y) or x == y:
                continue
            parent[y] = x
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            del parent[y]
        rec(i + 1)  # leave y without an in-edge

    rec(0)
    return sorted(out, key=lambda f: tuple(sorted(f)))


def rooted_forests(g: DirectedGraph, roots, cap: int | None = None) -> list:
    """All forests whose root set is exactly ``roots``."""
    limit = resolve_cap(cap)
    root_set = frozenset(roots)
    if not root_set:
        raise EmptyRootSet("the root set must be nonempty")
    unknown = root_set - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)!r}")
    nonroots = [v for v in g.vertices if v not in root_set]
    for y in nonroots:
        if not g.in_edges(y):
            raise NoSuchForest(f"vertex {y!r} has no in-edge, so it is a root of every forest")
    out: list = []
    parent: dict = {}
    chosen: list = []

    def rec(i: int) -> None:
        if i == len(nonroots):
            out.append(frozenset(chosen))
            if len(out) > limit:
                raise SizeLimit(f"rooted forest count exceeds cap {limit}")
            return
        y = nonroots[i]
        for e in g.in_edges(y):
            x = e[0]
            if _walk_hits(parent, x, y):
                continue
            parent[y] = x
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            del parent[y]

    rec(0)
    if not out:
        raise NoSuchForest(f"no forest has roots exactly {sorted(root_set)!r}")
    return sorted(out, key=lambda f: tuple(sorted(f)))


def forest_complex(g: DirectedGraph, cap: int | None = None) -> SimplicialComplex:
    """Complex on the edges of ``g`` whose faces are directed forests.

    An edgeless digraph has only the empty forest, giving the empty-face
    complex."""
    tops = maximal_forests(g, cap)
    if tops == [frozenset()]:
        return SimplicialComplex.empty_face_only()
    return SimplicialComplex.from_faces(tops)


def rooted_forest_complex(g: DirectedGraph, roots, cap: int | None = None) -> SimplicialComplex:
    """Subcomplex generated by the forests rooted exactly at ``roots``."""
    return SimplicialComplex.from_faces(rooted_forests(g, roots, cap))


@dataclass(frozen=True)
class Partition:
    """Split of the vertices by root-path stability across maximal faces.

    ``left`` holds the vertices whose tree root and root-to-vertex path
    coincide in every maximal face; ``right`` holds the rest.  Every edge
    of a maximal face crossing sides goes left to right.
    """

    left: tuple
    right: tuple


def _root_path(parent: dict, v) -> tuple:
    path = [v]
    while path[-1] in parent:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def root_path_partition(g: DirectedGraph, roots, faces) -> Partition:
    root_set = frozenset(roots)
    face_list = [frozenset(f) for f in faces]
    for f in face_list:
        if forest_roots(g, f) != root_set:
            raise RootMismatch(
                f"face {sorted(f)!r} has roots {sorted(forest_roots(g, f))!r}, expected {sorted(root_set)!r}")
    paths: dict = {v: set() for v in g.vertices}
    for f in face_list:
        parent = {y: x for x, y in f}
        for v in g.vertices:
            paths[v].add(_root_path(parent, v))
    left = tuple(v for v in g.vertices if len(paths[v]) == 1)
    right = tuple(v for v in g.vertices if len(paths[v]) > 1)
    return Partition(left, right)


def find_nice_edge(g: DirectedGraph, roots, cap: int | None = None):
    """An edge nice in the rooted complex, or None when it is a simplex.

    With more than one maximal face the partition above has a crossing
    edge, and every crossing edge is nice; the least one is returned for
    reproducibility.
    """
    faces = rooted_forests(g, roots, cap)
    if len(faces) == 1:
        return None
    part = root_path_partition(g, roots, faces)
    left = set(part.left)
    right = set(part.right)
    used = set().union(*faces)
    crossing = sorted(e for e in used if e[0] in left and e[1] in right)
    if not crossing:
        raise EquivalenceViolation("several maximal faces but no crossing edge")
    return crossing[0]


def is_nice_edge(g: DirectedGraph, subcomplex: SimplicialComplex, e,
                 cap: int | None = None) -> bool:
    """Definition check: (i) an alternative edge into the head is a vertex
    of the subcomplex; (ii) every face without an edge into the head stays
    a face when the edge is added."""
    e = tuple(e)
    if e not in set(g.edges):
        raise UnknownEdge(f"edge {e!r} not in the graph")
    x, y = e
    has_alternative = any(v[1] == y and v[0] != x for v in subcomplex.vertices)
    if not has_alternative:
        return False
    candidate_faces = [frozenset()]
    candidate_faces.extend(face_set(subcomplex, cap))
    for f in candidate_faces:
        if any(edge[1] == y for edge in f):
            continue
        if not subcomplex.is_face(f | {e}):
            return False
    return True


def shelling_order(g: DirectedGraph, roots, cap: int | None = None) -> list:
    """Shelling order of the rooted forest complex.

    One maximal face is its own order.  Otherwise a nice edge is picked,
    the graph is split into the subgraph forcing that edge (all other
    edges into its head dropped) and the subgraph forbidding it, and the
    two recursive orders are concatenated, forcing side first.
    """
    faces = rooted_forests(g, roots, cap)
    if len(faces) == 1:
        return [faces[0]]
    x, y = find_nice_edge(g, roots, cap)
    forcing = DirectedGraph(
        g.vertices, [e for e in g.edges if e[1] != y or e == (x, y)])
    forbidding = DirectedGraph(
        g.vertices, [e for e in g.edges if e != (x, y)])
    return shelling_order(forcing, roots, cap) + shelling_order(forbidding, roots, cap)


def _require_dag(g: DirectedGraph) -> None:
    topological_order(g)  # raises CyclicGraph with a witness


def dag_euler_characteristic(g: DirectedGraph) -> int:
    """Closed form for the reduced Euler characteristic of the forest
    complex of an acyclic digraph with at least one edge:
    minus the product of (1 - indegree(v)) over the non-source vertices."""
    _require_dag(g)
    if not g.edges:
        raise NoEdges("the formula needs at least one edge")
    r = sources(g)
    product = math.prod(1 - in_degree(g, v) for v in g.vertices if v not in r)
    return -product


def dag_homotopy_type(g: DirectedGraph) -> HomotopyType:
    """Wedge-of-spheres type of the forest complex of an acyclic digraph.

    The wedge has prod(indegree(v) - 1) spheres, over non-sources, each of
    dimension (number of vertices) - (number of sources) - 1; a zero
    product means contractible.  An edgeless digraph has the empty complex
    (its complex has no vertices), reported as the empty type with a
    warning since the dimension formula degenerates there.
    """
    _require_dag(g)
    if not g.edges:
        warnings.warn("edgeless digraph: the forest complex is empty", stacklevel=2)
        return HomotopyType.EMPTY
    r = sources(g)
    nonroots = [v for v in g.vertices if v not in r]
    count = math.prod(in_degree(g, v) - 1 for v in nonroots)
    if count == 0:
        return HomotopyType.point()
    dim = len(nonroots) - 1
    return HomotopyType.wedge_of([dim] * count)


@dataclass(frozen=True)
class ContractibilityReport:
    """Five independently evaluated statements that must agree for any
    acyclic digraph with at least one edge."""

    cone_with_edge_apex: bool
    edge_in_all_maximal_forests: bool
    has_indegree_one_vertex: bool
    zero_indegree_product: bool
    collapses_to_point: bool

    @property
    def contractible(self) -> bool:
        return self.cone_with_edge_apex

    def all_agree(self) -> bool:
        values = {
            self.cone_with_edge_apex,
            self.edge_in_all_maximal_forests,
            self.has_indegree_one_vertex,
            self.zero_indegree_product,
            self.collapses_to_point,
        }
        return len(values) == 1


def dag_contractibility_report(g: DirectedGraph, cap: int | None = None) -> ContractibilityReport:
    _require_dag(g)
    if not g.edges:
        raise NoEdges("needs at least one edge")
    complex_ = forest_complex(g, cap)
    tops = list(complex_.maximal_faces)
    common = frozenset.intersection(*tops)
    cone_apex = bool(common)
    forests = maximal_forests(g, cap)
    edge_everywhere = any(all(e in f for f in forests) for e in g.edges)
    indegree_one = any(in_degree(g, v) == 1 for v in g.vertices)
    r = sources(g)
    zero_product = math.prod(
        in_degree(g, v) - 1 for v in g.vertices if v not in r) == 0
    collapsed = greedy_collapse(complex_, cap).is_point
    report = ContractibilityReport(
        cone_with_edge_apex=cone_apex,
        edge_in_all_maximal_forests=edge_everywhere,
        has_indegree_one_vertex=indegree_one,
        zero_indegree_product=zero_product,
        collapses_to_point=collapsed,
    )
    if not report.all_agree():
        raise EquivalenceViolation(f"statements disagree: {report!r}")
    return report
