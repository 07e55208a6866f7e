"""Independence complexes of undirected graphs.

The faces are the independent vertex sets; maximal faces are enumerated
Bron-Kerbosch style over the non-adjacency relation.  On top of the raw
construction this module provides:

* fold reduction: removing a vertex whose neighborhood contains another
  vertex's neighborhood collapses the complex, so homology is preserved;
* wedge decompositions with generating faces, driven by a vertex whose
  neighborhood is a clique, and the companion extension over a clique
  whose removal leaves known generating faces;
* the path-power and cycle-power graph families parametrised by window
  width, with their generating-face recursions;
* the max-degree lower bound on connectivity, used through its
  homological shadow.

Generating faces are maximal faces whose removal leaves a contractible
complex; contractibility being undecidable in general, certificates are
greedy-collapse (strong) with mod-2 acyclicity as the flagged fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import (
    HomotopyType,
    SimplicialComplex,
    face_key,
    face_set,
    susp,
    wedge,
)
from .config import resolve_cap
from .errors import (
    CliqueRequired,
    ConditionViolated,
    DegenerateCycle,
    EmptyGraph,
    EquivalenceViolation,
    FactViolation,
    NeighborhoodNotClique,
    NotAcyclic,
    NotMaximal,
    RecursionStuck,
    SizeLimit,
    UnknownVertex,
    ZeroDegree,
)
from .graphs import (
    UndirectedGraph,
    induced_subgraph,
    max_degree,
    neighborhood,
    remove_vertices,
    require_forest,
)
from .homology import betti, greedy_collapse
from . import complexes as cx


def maximal_independent_sets(g: UndirectedGraph, cap: int | None = None) -> list:
    """All maximal independent sets, sorted, as frozensets."""
    limit = resolve_cap(cap)
    verts = list(g.vertices)
    non_nbrs = {v: frozenset(set(verts) - g.neighbors(v) - {v}) for v in verts}
    out: list = []

    def expand(cur: frozenset, cand: frozenset, done: frozenset) -> None:
        if not cand and not done:
            out.append(cur)
            if len(out) > limit:
                raise SizeLimit(f"maximal independent set count exceeds cap {limit}")
            return
        pivot = max(sorted(cand | done), key=lambda u: len(cand & non_nbrs[u]))
        cand_now = cand
        for v in sorted(cand - non_nbrs[pivot]):
            expand(cur | {v}, cand_now & non_nbrs[v], done & non_nbrs[v])
            cand_now = cand_now - {v}
            done = done | {v}

    if verts:
        expand(frozenset(), frozenset(verts), frozenset())
    return sorted(out, key=lambda f: tuple(sorted(f)))


def independence_complex(g: UndirectedGraph, cap: int | None = None) -> SimplicialComplex:
    """Complex whose faces are the independent sets of ``g``.

    A graph with no vertices yields the empty-face complex, so induced
    subgraphs and induced subcomplexes stay interchangeable."""
    if not g.vertices:
        return SimplicialComplex.empty_face_only()
    tops = maximal_independent_sets(g, cap)
    return SimplicialComplex.from_faces(tops, vertices=g.vertices)


def is_independent(g: UndirectedGraph, vertices: Iterable) -> bool:
    vs = list(vertices)
    return all(not g.adjacent(v, w) for i, v in enumerate(vs) for w in vs[i + 1:])


def _is_maximal_independent(g: UndirectedGraph, face: frozenset) -> bool:
    if not is_independent(g, face):
        return False
    for w in g.vertices:
        if w not in face and all(not g.adjacent(w, v) for v in face):
            return False
    return True


# --- folds ------------------------------------------------------------------


@dataclass(frozen=True)
class FoldStep:
    kept: object
    removed: object


def find_fold(g: UndirectedGraph) -> FoldStep | None:
    """Least pair (v, w), v != w, with N(v) contained in N(w), or None."""
    for v in g.vertices:
        nv = g.neighbors(v)
        for w in g.vertices:
            if w != v and nv <= g.neighbors(w):
                return FoldStep(kept=v, removed=w)
    return None


def fold_reduce(g: UndirectedGraph):
    """Apply folds until none remains; homology of the complex is
    preserved by every step.  Returns (reduced graph, steps)."""
    steps: list = []
    while True:
        fold = find_fold(g)
        if fold is None:
            return g, steps
        steps.append(fold)
        g = remove_vertices(g, [fold.removed])


def forest_homotopy(g: UndirectedGraph) -> HomotopyType:
    """Homotopy type of the independence complex of a forest: fold down to
    a graph with no adjacent edges, which is a point, or m disjoint edges
    giving a single (m-1)-sphere."""
    require_forest(g)
    reduced, _ = fold_reduce(g)
    if not reduced.vertices:
        return HomotopyType.EMPTY
    if any(reduced.degree(v) == 0 for v in reduced.vertices):
        return HomotopyType.point()
    m = len(reduced.edges)
    return HomotopyType.wedge_of((m - 1,))


# --- generating faces -------------------------------------------------------


@dataclass(frozen=True)
class FaceCertificate:
    """Evidence that a face set generates: 'collapse' means the residual
    complex greedily collapsed to a point, 'z2-acyclic' only that its
    mod-2 homology vanishes (weaker, flagged)."""

    strength: str  # "collapse" | "z2-acyclic"
    collapse_steps: int
    residual_betti: tuple


@dataclass(frozen=True)
class GeneratingFaces:
    faces: tuple  # sorted tuple of frozensets
    certificate: FaceCertificate | None = None

    @staticmethod
    def of(faces: Iterable, certificate: FaceCertificate | None = None) -> "GeneratingFaces":
        return GeneratingFaces(tuple(sorted((frozenset(f) for f in faces), key=face_key)),
                               certificate)

    def as_sets(self) -> set:
        return set(self.faces)

    def dimension_multiset(self) -> tuple:
        return tuple(sorted(len(f) - 1 for f in self.faces))


def _clique(g: UndirectedGraph, vertices: frozenset) -> bool:
    vs = sorted(vertices)
    return all(g.adjacent(v, w) for i, v in enumerate(vs) for w in vs[i + 1:])


def _decompose(g: UndirectedGraph):
    """Recursive wedge split at the least vertex whose neighborhood is a
    clique.  Returns (homotopy type, tuple of generating faces).

    A graph with no vertices is the empty space; an isolated vertex makes
    the complex a cone, hence contractible with no generating faces.
    Raises RecursionStuck when no vertex qualifies.
    """
    if not g.vertices:
        return HomotopyType.EMPTY, ()
    for u in g.vertices:
        nu = g.neighbors(u)
        if not nu:
            return HomotopyType.point(), ()
        if _clique(g, nu):
            return _split_at(g, u)
    raise RecursionStuck("no vertex has a clique neighborhood")


def _split_at(g: UndirectedGraph, u):
    parts: list = []
    faces: list = []
    nu = g.neighbors(u)
    for v in sorted(nu):
        residual = remove_vertices(g, nu | g.neighbors(v))
        if not residual.vertices:
            parts.append(susp(HomotopyType.EMPTY))
            faces.append(frozenset({v}))
        else:
            h, sub_faces = _decompose(residual)
            parts.append(susp(h))
            faces.extend(frozenset({v}) | f for f in sub_faces)
    return wedge(parts), tuple(sorted(set(faces), key=face_key))


def clique_neighborhood_faces(g: UndirectedGraph, u):
    """Wedge decomposition at ``u``, whose neighborhood must be a nonempty
    clique: one suspended summand per neighbor v, over the graph left
    after removing both neighborhoods, with the generating faces built by
    prefixing v to the recursive ones ({v} alone when nothing is left)."""
    if u not in g.vertices:
        raise UnknownVertex(f"unknown vertex {u!r}")
    nu = g.neighbors(u)
    if not nu:
        raise NeighborhoodNotClique(f"vertex {u!r} has an empty neighborhood")
    if not _clique(g, nu):
        raise NeighborhoodNotClique(f"the neighborhood of {u!r} is not a clique")
    h, faces = _split_at(g, u)
    return h, GeneratingFaces.of(faces)


def clique_extension_faces(g: UndirectedGraph, clique, gen) -> tuple:
    """Extend generating faces of the complex off a clique to the whole
    graph.

    ``clique`` must induce a complete subgraph and every supplied face
    must contain, for each clique vertex, some vertex adjacent to it
    (checked; ConditionViolated otherwise).  The resulting type is the
    off-clique type wedged with one suspended summand per clique vertex.
    """
    K = frozenset(clique)
    unknown = K - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)!r}")
    if not _clique(g, K):
        raise CliqueRequired(f"{sorted(K)!r} does not induce a complete graph")
    rest = remove_vertices(g, K)
    if not rest.vertices:
        raise ConditionViolated("the clique exhausts the graph")
    supplied = tuple(sorted((frozenset(f) for f in
                             (gen.faces if isinstance(gen, GeneratingFaces) else gen)),
                            key=face_key))
    for f in supplied:
        if not _is_maximal_independent(rest, f):
            raise NotMaximal(f"{sorted(f)!r} is not a maximal independent set off the clique")
    for k in sorted(K):
        nk = g.neighbors(k)
        for f in supplied:
            if not f & nk:
                raise ConditionViolated(
                    f"face {sorted(f)!r} has no vertex adjacent to {k!r}")
    parts = [HomotopyType.wedge_of(len(f) - 1 for f in supplied)]
    faces = list(supplied)
    for k in sorted(K):
        residual = remove_vertices(g, K | g.neighbors(k))
        if not residual.vertices:
            parts.append(susp(HomotopyType.EMPTY))
            faces.append(frozenset({k}))
        else:
            h, sub_faces = _decompose(residual)
            parts.append(susp(h))
            faces.extend(frozenset({k}) | f for f in sub_faces)
    return wedge(parts), GeneratingFaces.of(faces)


# --- graph families ---------------------------------------------------------


def path_power_graph(n: int, k: int) -> UndirectedGraph:
    """Vertices 1..n with i < j adjacent when j - i < k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    verts = range(1, n + 1)
    edges = [(i, j) for i in verts for j in range(i + 1, min(i + k, n + 1))]
    return UndirectedGraph(verts, edges)


def cycle_power_graph(n: int, k: int) -> UndirectedGraph:
    """Vertices 1..n with i < j adjacent when j - i < k or (n+i) - j < k."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 2 * k - 1:
        raise DegenerateCycle(f"need n >= {2 * k - 1} for width {k}")
    verts = range(1, n + 1)
    edges = set()
    for i in verts:
        for j in range(i + 1, n + 1):
            if j - i < k or (n + i) - j < k:
                edges.add((i, j))
    return UndirectedGraph(verts, sorted(edges))


def _segment_type(n: int, k: int, _memo: dict = {}) -> HomotopyType:
    # wedge recursion over the first window; empty below n = 1
    if n <= 0:
        return HomotopyType.EMPTY
    if n == 1:
        return HomotopyType.point()
    key = (n, k)
    if key not in _memo:
        _memo[key] = wedge([susp(_segment_type(n - k - i, k))
                            for i in range(1, min(k, n))])
    return _memo[key]


def path_family_faces(n: int, k: int):
    """Homotopy type and generating faces for the path-power family.

    The type follows the window recursion; the faces come from the wedge
    decomposition of the actual graph started at vertex 1, with original
    labels retained down the recursion.  The two routes are cross-checked.
    """
    if n <= 0:
        return HomotopyType.EMPTY, GeneratingFaces.of(())
    if n == 1:
        return HomotopyType.point(), GeneratingFaces.of(())
    g = path_power_graph(n, k)
    h_graph, faces = _split_at(g, 1)
    h_rec = _segment_type(n, k)
    if h_graph != h_rec:
        raise EquivalenceViolation(
            f"type recursion {h_rec.describe()} disagrees with the graph split {h_graph.describe()}")
    return h_rec, GeneratingFaces.of(faces)


def cycle_family_faces(n: int, k: int):
    """Homotopy type and generating faces for the cycle-power family,
    obtained by extending the faces of the path-power remainder over the
    clique {1, 2}."""
    g = cycle_power_graph(n, k)
    rest = remove_vertices(g, {1, 2})
    _, sub_faces = _decompose(rest)
    return clique_extension_faces(g, {1, 2}, sub_faces)


# --- connectivity bound -------------------------------------------------------


def max_degree_connectivity_bound(g: UndirectedGraph) -> int:
    """floor((n-1) / (2 d)) - 1 for a nonempty graph with max degree d >= 1.

    Edgeless graphs are rejected: their complex is a full simplex, so any
    bound holds."""
    if not g.vertices:
        raise EmptyGraph("the bound needs at least one vertex")
    d = max_degree(g)
    if d == 0:
        raise ZeroDegree("edgeless graph: the complex is a simplex (unbounded connectivity)")
    n = len(g.vertices)
    return (n - 1) // (2 * d) - 1


# --- structural identities ----------------------------------------------------


@dataclass(frozen=True)
class StandardFactReport:
    """Outcome of the six structural identities checked for one vertex."""

    vertex: object
    induced_commutes: bool
    intersection_identity: bool
    link_identity: bool
    star_identity: bool
    star_contains_link: bool
    star_cover: bool

    def all_hold(self) -> bool:
        return all((self.induced_commutes, self.intersection_identity,
                    self.link_identity, self.star_identity,
                    self.star_contains_link, self.star_cover))


def _subset_samples(vertices: tuple, limit: int, seed: int = 0) -> list:
    n = len(vertices)
    if 2 ** n <= limit:
        subsets = []
        for mask in range(2 ** n):
            subsets.append(frozenset(vertices[i] for i in range(n) if mask >> i & 1))
        return subsets
    import random

    rng = random.Random(seed)
    out = {frozenset(), frozenset(vertices)}
    while len(out) < limit:
        out.add(frozenset(v for v in vertices if rng.random() < 0.5))
    return sorted(out, key=lambda s: tuple(sorted(s)))


def standard_fact_checks(g: UndirectedGraph, v, subset_limit: int = 64,
                         cap: int | None = None) -> StandardFactReport:
    """Verify the standard identities relating the complex to the graph.

    Raises FactViolation on the first failure (this is a bug detector:
    the identities hold for every graph).
    """
    if v not in g.vertices:
        raise UnknownVertex(f"unknown vertex {v!r}")
    ind = independence_complex(g, cap)
    samples = _subset_samples(g.vertices, subset_limit)

    def fail(name: str):
        raise FactViolation(f"identity {name!r} failed for vertex {v!r} in {g!r}")

    for a in samples:
        if independence_complex(induced_subgraph(g, a)) != cx.induced_subcomplex(ind, a):
            fail("induced-commutes")
    induced_commutes = True

    pair_samples = samples[:12] if len(samples) > 12 else samples
    for a in pair_samples:
        for b in pair_samples:
            left = cx.intersect(independence_complex(induced_subgraph(g, a)),
                                independence_complex(induced_subgraph(g, b)))
            if left != independence_complex(induced_subgraph(g, a & b)):
                fail("intersection")
    intersection_identity = True

    nv = neighborhood(g, v)
    lk = cx.link(ind, v)
    if lk != independence_complex(remove_vertices(g, nv | {v})):
        fail("link")
    link_identity = True

    st = cx.star(ind, v)
    if st != independence_complex(remove_vertices(g, nv)):
        fail("star-off-neighborhood")
    if st != cx.cone(v, lk):
        fail("star-as-cone")
    star_identity = True

    st_faces = face_set(st, cap) if not st.is_empty else set()
    for w in sorted(nv):
        if nv - {w} <= g.neighbors(w) - {v}:
            lk_w = cx.link(ind, w)
            lk_w_faces = face_set(lk_w, cap) if not lk_w.is_empty else set()
            if not lk_w_faces <= st_faces:
                fail("star-contains-link")
    star_contains_link = True

    cover = set(st_faces)
    for w in sorted(nv):
        cover |= face_set(cx.star(ind, w), cap)
    if cover != face_set(ind, cap):
        fail("star-cover")
    star_cover = True

    return StandardFactReport(v, induced_commutes, intersection_identity,
                              link_identity, star_identity,
                              star_contains_link, star_cover)


# --- certificates -------------------------------------------------------------


def verify_generating_faces(c: SimplicialComplex, faces: Iterable,
                            cap: int | None = None) -> GeneratingFaces:
    """Certify that removing ``faces`` leaves a contractible complex.

    Checks maximality, removes the faces, tries a greedy collapse to a
    point (strong certificate) and falls back to mod-2 acyclicity (weak).
    Also checks that the homology of ``c`` equals the dimension multiset
    of the removed faces, as a wedge decomposition demands.
    """
    chosen = tuple(sorted((frozenset(f) for f in faces), key=face_key))
    tops = set(c.maximal_faces)
    for f in chosen:
        if f not in tops:
            raise NotMaximal(f"{sorted(f)!r} is not a maximal face")
    residual_faces = face_set(c, cap) - set(chosen)
    if not residual_faces:
        raise NotAcyclic("removal leaves the empty space, which is not contractible")
    residual = SimplicialComplex.from_faces(
        _maximal_subset(residual_faces), vertices=c.vertices)
    collapse = greedy_collapse(residual, cap)
    residual_b = betti(collapse.complex if collapse.is_point else residual, cap)
    if collapse.is_point:
        cert = FaceCertificate("collapse", len(collapse.steps), residual_b.normalized())
    elif residual_b.normalized() == ():
        cert = FaceCertificate("z2-acyclic", len(collapse.steps), residual_b.normalized())
    else:
        raise NotAcyclic(
            f"residual complex has homology {residual_b.normalized()!r}")
    expected = tuple(sorted(len(f) - 1 for f in chosen))
    got = betti(c, cap)
    profile = HomotopyType.wedge_of(expected).betti_profile() if expected else ()
    if got.normalized() != tuple(profile):
        raise NotAcyclic(
            f"homology {got.normalized()!r} does not match face dimensions {expected!r}")
    return GeneratingFaces(chosen, cert)


def _maximal_subset(faces: set) -> list:
    by_size = sorted(faces, key=face_key, reverse=True)
    kept: list = []
    for f in by_size:
        if not any(f < g for g in kept):
            kept.append(f)
    return kept
