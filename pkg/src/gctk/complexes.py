"""Simplicial complexes stored by their maximal faces, plus the
wedge-of-spheres value algebra used to record homotopy types.

Empty-complex conventions
-------------------------
Two degenerate values are kept apart because callers need both:

* the *void* complex (``SimplicialComplex.empty()``): no vertices, no
  faces at all, not even the empty face; and
* the *empty-face* complex (``maximal_faces == (frozenset(),)``): the
  complex containing only the empty face, produced e.g. as the link of an
  isolated vertex or as an induced subcomplex on no vertices.

Both realise the empty space (``is_empty`` is true for both), and both map
to ``HomotopyType.EMPTY``.  Every nonempty complex implicitly contains the
empty face; it is never stored.

Faces are plain frozensets of vertex labels; subset and intersection tests
are exact.  The full face list is only materialised on demand, guarded by
the configured cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .config import resolve_cap
from .errors import (
    EmptyComplex,
    NotAPermutation,
    SizeLimit,
    UnknownVertex,
    WedgeWithEmpty,
)


def face_key(face: frozenset):
    return (len(face), tuple(sorted(face)))


def _antichain(faces: Iterable[frozenset]) -> tuple:
    """Drop faces contained in another face; deduplicate."""
    unique = sorted(set(faces), key=face_key, reverse=True)
    kept: list = []
    for f in unique:
        if not any(f < g for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=face_key))


class SimplicialComplex:
    """A vertex-labelled simplicial complex given by its maximal faces."""

    __slots__ = ("vertices", "maximal_faces")

    def __init__(self, vertices: tuple, maximal_faces: tuple):
        self.vertices = vertices
        self.maximal_faces = maximal_faces

    @classmethod
    def from_faces(cls, faces: Iterable, vertices: Iterable | None = None) -> "SimplicialComplex":
        maximal = _antichain(frozenset(f) for f in faces)
        used = set().union(*maximal) if maximal else set()
        if vertices is None:
            declared = used
        else:
            declared = set(vertices)
            if not used <= declared:
                raise UnknownVertex(f"faces use undeclared vertices {sorted(used - declared)!r}")
        return cls(tuple(sorted(declared)), maximal)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), ())

    @classmethod
    def empty_face_only(cls) -> "SimplicialComplex":
        return cls((), (frozenset(),))

    @property
    def is_empty(self) -> bool:
        """True when the complex realises the empty space."""
        return not any(self.maximal_faces)

    @property
    def has_empty_face_marker(self) -> bool:
        return self.maximal_faces == (frozenset(),)

    @property
    def dimension(self) -> int:
        """Largest face dimension; the void complex has none."""
        if not self.maximal_faces:
            raise EmptyComplex("the void complex has no dimension")
        return max(len(f) for f in self.maximal_faces) - 1

    def is_face(self, face: Iterable) -> bool:
        f = frozenset(face)
        return any(f <= m for m in self.maximal_faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices)
                and set(self.maximal_faces) == set(other.maximal_faces))

    def __hash__(self) -> int:
        return hash((self.vertices, self.maximal_faces))

    def __repr__(self) -> str:
        faces = [sorted(f) for f in self.maximal_faces]
        return f"SimplicialComplex(vertices={list(self.vertices)!r}, maximal_faces={faces!r})"


def face_set(c: SimplicialComplex, cap: int | None = None) -> set:
    """All nonempty faces of ``c``; raises SizeLimit past the cap."""
    limit = resolve_cap(cap)
    seen: set = set()
    for top in c.maximal_faces:
        items = sorted(top)
        for r in range(1, len(items) + 1):
            for combo in combinations(items, r):
                f = frozenset(combo)
                if f not in seen:
                    seen.add(f)
                    if len(seen) > limit:
                        raise SizeLimit(f"face count exceeds cap {limit}")
    return seen


def all_faces(c: SimplicialComplex, cap: int | None = None) -> list:
    """Faces grouped by dimension: element ``d`` lists the d-faces."""
    faces = face_set(c, cap)
    if not faces:
        return []
    top = max(len(f) for f in faces)
    grouped: list = [[] for _ in range(top)]
    for f in faces:
        grouped[len(f) - 1].append(f)
    for bucket in grouped:
        bucket.sort(key=face_key)
    return grouped


def face_counts(c: SimplicialComplex, cap: int | None = None) -> tuple:
    return tuple(len(bucket) for bucket in all_faces(c, cap))


def reduced_euler(c: SimplicialComplex, cap: int | None = None) -> int:
    """-1 + sum over dimensions d of (-1)^d (number of d-faces)."""
    total = -1
    for d, count in enumerate(face_counts(c, cap)):
        total += count if d % 2 == 0 else -count
    return total


def link(c: SimplicialComplex, v) -> SimplicialComplex:
    """Faces disjoint from ``v`` whose union with it is a face.

    The link of a vertex whose only face is itself is the empty-face
    complex (the base a cone needs); a vertex lying in no face at all has
    the void link.
    """
    if v not in c.vertices:
        raise UnknownVertex(f"unknown vertex {v!r}")
    cofaces = [f - {v} for f in c.maximal_faces if v in f]
    if not cofaces:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_faces(cofaces)


def star(c: SimplicialComplex, v) -> SimplicialComplex:
    if v not in c.vertices:
        raise UnknownVertex(f"unknown vertex {v!r}")
    tops = [f for f in c.maximal_faces if v in f]
    if not tops:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_faces(tops)


def induced_subcomplex(c: SimplicialComplex, w: Iterable) -> SimplicialComplex:
    """Faces contained in ``w``.  Restricting a nonempty complex to no
    vertices keeps the empty face (the marker), never the void complex."""
    keep = set(w)
    unknown = keep - set(c.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)!r}")
    if not c.maximal_faces:
        return SimplicialComplex(tuple(sorted(keep)), ())
    restricted = _antichain(f & keep for f in c.maximal_faces)
    return SimplicialComplex(tuple(sorted(keep)), restricted)


def delete(c: SimplicialComplex, w: Iterable) -> SimplicialComplex:
    """Induced subcomplex on the complement of ``w``."""
    drop = set(w)
    unknown = drop - set(c.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)!r}")
    return induced_subcomplex(c, [v for v in c.vertices if v not in drop])


def intersect(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    verts = set(a.vertices) & set(b.vertices)
    if not a.maximal_faces or not b.maximal_faces:
        return SimplicialComplex(tuple(sorted(verts)), ())
    common = face_set(a) & face_set(b)
    # both sides contain the empty face, so the intersection keeps it
    faces = _antichain(common | {frozenset()})
    return SimplicialComplex(tuple(sorted(verts)), faces)


def cone(apex, base: SimplicialComplex) -> SimplicialComplex:
    """Join of a fresh vertex with ``base``."""
    if apex in base.vertices:
        raise UnknownVertex(f"apex {apex!r} already a vertex of the base")
    if not base.maximal_faces:
        return SimplicialComplex.from_faces([], vertices=(apex, *base.vertices))
    tops = [f | {apex} for f in base.maximal_faces]
    return SimplicialComplex.from_faces(tops, vertices=set(base.vertices) | {apex})


@dataclass(frozen=True)
class ShellingResult:
    ok: bool
    witness: tuple | None = None  # 1-based (i, k) violating pair

    def __bool__(self) -> bool:
        return self.ok


def is_shelling(c: SimplicialComplex, order: Sequence) -> ShellingResult:
    """Check the pairwise shelling condition for an ordering of the
    maximal faces.

    For every i < k some j < k and e in F_k must give
    F_i & F_k <= F_j & F_k == F_k - {e}.  On failure the first violating
    (i, k) pair is returned, 1-based.
    """
    given = [frozenset(f) for f in order]
    if sorted(given, key=face_key) != sorted(c.maximal_faces, key=face_key):
        raise NotAPermutation("order is not a permutation of the maximal faces")
    for k in range(1, len(given)):
        fk = given[k]
        slots = {given[j] & fk for j in range(k) if len(given[j] & fk) == len(fk) - 1}
        for i in range(k):
            meet = given[i] & fk
            if not any(meet <= d for d in slots):
                return ShellingResult(False, (i + 1, k + 1))
    return ShellingResult(True)


# --- homotopy-type values -------------------------------------------------


@dataclass(frozen=True)
class HomotopyType:
    """Either the empty space or a finite wedge of spheres.

    ``spheres`` is the sorted multiset of sphere dimensions; an empty
    multiset (with ``empty`` false) is a contractible point.
    """

    empty: bool
    spheres: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "spheres", tuple(sorted(self.spheres)))
        if self.empty and self.spheres:
            raise ValueError("the empty space carries no spheres")
        if any(d < 0 for d in self.spheres):
            raise ValueError("sphere dimensions must be >= 0")

    @staticmethod
    def point() -> "HomotopyType":
        return HomotopyType(False, ())

    @staticmethod
    def wedge_of(dims: Iterable[int]) -> "HomotopyType":
        return HomotopyType(False, tuple(dims))

    @property
    def is_contractible(self) -> bool:
        return not self.empty and not self.spheres

    def betti_profile(self) -> tuple:
        """Reduced Betti numbers implied by the wedge, indexed by degree."""
        if self.empty:
            raise EmptyComplex("the empty space has no Betti profile")
        if not self.spheres:
            return ()
        profile = [0] * (max(self.spheres) + 1)
        for d in self.spheres:
            profile[d] += 1
        return tuple(profile)

    def describe(self) -> str:
        if self.empty:
            return "empty"
        if not self.spheres:
            return "point"
        return " v ".join(f"S^{d}" for d in self.spheres)


HomotopyType.EMPTY = HomotopyType(True)


def susp(h: HomotopyType) -> HomotopyType:
    """Suspension: the empty space gives S^0, spheres shift up by one."""
    if h.empty:
        return HomotopyType.wedge_of((0,))
    return HomotopyType.wedge_of(d + 1 for d in h.spheres)


def wedge(parts: Sequence[HomotopyType]) -> HomotopyType:
    """Wedge of homotopy types; the wedge of nothing is a point."""
    parts = list(parts)
    if len(parts) == 1:
        return parts[0]
    dims: list = []
    for h in parts:
        if h.empty:
            raise WedgeWithEmpty("cannot wedge the empty space with anything")
        dims.extend(h.spheres)
    return HomotopyType.wedge_of(dims)


# --- JSON dump -------------------------------------------------------------


def _label_out(label):
    if isinstance(label, tuple):
        return [_label_out(x) for x in label]
    return label


def _label_in(label):
    if isinstance(label, list):
        return tuple(_label_in(x) for x in label)
    return label


def complex_to_obj(c: SimplicialComplex) -> dict:
    return {
        "vertices": [_label_out(v) for v in c.vertices],
        "maximal_faces": [[_label_out(v) for v in sorted(f)] for f in c.maximal_faces],
    }


def complex_from_obj(obj: dict) -> SimplicialComplex:
    vertices = [_label_in(v) for v in obj["vertices"]]
    faces = [frozenset(_label_in(v) for v in f) for f in obj["maximal_faces"]]
    return SimplicialComplex.from_faces(faces, vertices=vertices)
