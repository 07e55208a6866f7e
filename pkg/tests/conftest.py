"""Shared instance generators for the test suite.

Everything is seeded so failures reproduce; the generators live here so
the module tests and the acceptance suite draw from the same pools.
"""

from __future__ import annotations

import random
from itertools import combinations

from gctk.anti_rips import PointSet
from gctk.complexes import SimplicialComplex
from gctk.graphs import DirectedGraph, UndirectedGraph

BASE_SEED = 0xC0FFEE


def rng_for(name: str) -> random.Random:
    return random.Random(f"{BASE_SEED}:{name}")


def random_dag(rng: random.Random, n: int, edge_p: float = 0.5) -> DirectedGraph:
    verts = list(range(1, n + 1))
    order = verts[:]
    rng.shuffle(order)
    edges = [(order[i], order[j])
             for i in range(n) for j in range(i + 1, n) if rng.random() < edge_p]
    return DirectedGraph(verts, edges)


def all_dags(n: int):
    """Every labelled acyclic digraph on vertices 1..n."""
    verts = list(range(1, n + 1))
    pairs = [(x, y) for x in verts for y in verts if x != y]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = DirectedGraph(verts, edges)
        if not brute_has_cycle(g):
            yield g


def random_digraph(rng: random.Random, n: int, m: int) -> DirectedGraph:
    verts = list(range(1, n + 1))
    pairs = [(x, y) for x in verts for y in verts if x != y]
    rng.shuffle(pairs)
    return DirectedGraph(verts, pairs[:m])


def random_undirected(rng: random.Random, n: int, edge_p: float = 0.4) -> UndirectedGraph:
    verts = list(range(1, n + 1))
    edges = [e for e in combinations(verts, 2) if rng.random() < edge_p]
    return UndirectedGraph(verts, edges)


def random_forest(rng: random.Random, n: int) -> UndirectedGraph:
    """Random labelled forest: random attachment with random cuts."""
    verts = list(range(1, n + 1))
    edges = []
    for v in verts[1:]:
        if rng.random() < 0.8:
            edges.append((rng.choice(verts[:v - 1]), v))
    return UndirectedGraph(verts, edges)


def random_complex(rng: random.Random, max_vertices: int = 8) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    verts = list(range(1, n + 1))
    count = rng.randint(1, min(6, n + 2))
    faces = []
    for _ in range(count):
        size = rng.randint(1, n)
        faces.append(frozenset(rng.sample(verts, size)))
    return SimplicialComplex.from_faces(faces)


def random_line_points(rng: random.Random, max_points: int = 10) -> PointSet:
    n = rng.randint(1, max_points)
    coords = rng.sample(range(0, 40), n)
    return PointSet("line", tuple(coords))


def random_grid_points(rng: random.Random, max_points: int = 12) -> PointSet:
    n = rng.randint(1, max_points)
    box = [(i, j) for i in range(6) for j in range(6)]
    return PointSet("grid", tuple(rng.sample(box, n)))


def disjoint_bicliques(m: int, d: int) -> UndirectedGraph:
    """m disjoint copies of the complete bipartite graph K_{d,d}."""
    verts = []
    edges = []
    for block in range(m):
        left = [block * 2 * d + i for i in range(d)]
        right = [block * 2 * d + d + i for i in range(d)]
        verts += left + right
        edges += [(a, b) for a in left for b in right]
    return UndirectedGraph(verts, edges)


def brute_has_cycle(g: DirectedGraph) -> bool:
    """Directed-cycle search by walking every simple path."""
    targets = {x: [y for (a, y) in g.out_edges(x)] for x in g.vertices}

    def walk(start, v, seen):
        for w in targets[v]:
            if w == start:
                return True
            if w not in seen and walk(start, w, seen | {w}):
                return True
        return False

    return any(walk(v, v, {v}) for v in g.vertices)


def random_valid_roots(rng: random.Random, g: DirectedGraph) -> frozenset:
    """Root set realised by some forest: grow a random greedy forest and
    read off its roots."""
    parent: dict = {}

    def reaches(start, target):
        v = start
        while v in parent:
            v = parent[v]
            if v == target:
                return True
        return False

    edges = list(g.edges)
    rng.shuffle(edges)
    for x, y in edges:
        if y in parent or reaches(x, y):
            continue
        if rng.random() < 0.8:
            parent[y] = x
    return frozenset(v for v in g.vertices if v not in parent)
