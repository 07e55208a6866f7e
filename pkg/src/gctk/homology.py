"""Brute-force ground truth: mod-2 simplicial homology via boundary-matrix
ranks, greedy free-face collapsing, and comparison of complexes against
predicted wedge-of-spheres types.

Mod-2 coefficients suffice here: every predicted homotopy type is a wedge
of spheres, which is torsion-free, so the mod-2 Betti numbers discriminate
all predictions while keeping the arithmetic exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import HomotopyType, SimplicialComplex, face_key, face_set
from .errors import EmptyComplex


def _faces_by_dim(c: SimplicialComplex, cap: int | None):
    faces = face_set(c, cap)
    if not faces:
        return []
    top = max(len(f) for f in faces)
    grouped = [[] for _ in range(top)]
    for f in faces:
        grouped[len(f) - 1].append(f)
    for bucket in grouped:
        bucket.sort(key=face_key)
    return grouped


def _rank_gf2(columns) -> int:
    """Rank of a set of GF(2) column vectors given as int bitmasks."""
    pivots: dict = {}
    rank = 0
    for col in columns:
        cur = col
        while cur:
            low = cur & -cur
            if low in pivots:
                cur ^= pivots[low]
            else:
                pivots[low] = cur
                rank += 1
                break
    return rank


def _boundary_columns(lower: list, upper: list) -> list:
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for f in upper:
        mask = 0
        for v in f:
            mask |= 1 << index[f - {v}]
        cols.append(mask)
    return cols


def boundary_rank(c: SimplicialComplex, d: int, cap: int | None = None) -> int:
    """Rank over GF(2) of the boundary map from d-faces to (d-1)-faces.

    The degree-0 augmentation is not included here; ``betti`` accounts
    for it separately.
    """
    grouped = _faces_by_dim(c, cap)
    if d <= 0 or d >= len(grouped):
        return 0
    return _rank_gf2(_boundary_columns(grouped[d - 1], grouped[d]))


@dataclass(frozen=True)
class BettiVector:
    """Reduced mod-2 Betti numbers b~_0 .. b~_D of a nonempty complex.

    The empty space is reported via the ``empty`` flag, never as an entry.
    Equality ignores trailing zeros so complexes of different dimensions
    compare by homology alone.
    """

    empty: bool
    entries: tuple = ()

    def normalized(self) -> tuple:
        entries = list(self.entries)
        while entries and entries[-1] == 0:
            entries.pop()
        return tuple(entries)

    def alternating_sum(self) -> int:
        return sum(b if d % 2 == 0 else -b for d, b in enumerate(self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiVector):
            return NotImplemented
        return self.empty == other.empty and self.normalized() == other.normalized()

    def __hash__(self) -> int:
        return hash((self.empty, self.normalized()))


def betti(c: SimplicialComplex, cap: int | None = None) -> BettiVector:
    if c.is_empty:
        return BettiVector(True)
    grouped = _faces_by_dim(c, cap)
    counts = [len(bucket) for bucket in grouped]
    ranks = [0] * (len(grouped) + 1)
    for d in range(1, len(grouped)):
        ranks[d] = _rank_gf2(_boundary_columns(grouped[d - 1], grouped[d]))
    augmentation = 1  # the all-ones map on vertices has rank 1
    entries = []
    for d in range(len(grouped)):
        killed = augmentation if d == 0 else ranks[d]
        entries.append(counts[d] - killed - ranks[d + 1])
    return BettiVector(False, tuple(entries))


@dataclass(frozen=True)
class MatchReport:
    ok: bool
    expected: str
    actual: str

    def __bool__(self) -> bool:
        return self.ok


def matches(c: SimplicialComplex, h: HomotopyType, cap: int | None = None) -> MatchReport:
    """Does the mod-2 homology of ``c`` agree with the predicted type?"""
    b = betti(c, cap)
    if h.empty or b.empty:
        ok = h.empty and b.empty
        return MatchReport(ok, h.describe(), "empty" if b.empty else str(b.normalized()))
    expected = BettiVector(False, h.betti_profile())
    return MatchReport(b == expected, str(expected.normalized()), str(b.normalized()))


@dataclass
class CollapseResult:
    complex: SimplicialComplex
    steps: list = field(default_factory=list)  # (free face, unique coface) pairs

    @property
    def is_point(self) -> bool:
        faces = self.complex.maximal_faces
        return len(faces) == 1 and len(faces[0]) == 1


def _cone_apex(alive: set, counts: dict):
    tops = [f for f in alive if counts[f] == 0]
    if not tops:
        return None
    common = frozenset.intersection(*tops)
    return min(common) if common else None


def greedy_collapse(c: SimplicialComplex, cap: int | None = None) -> CollapseResult:
    """Repeatedly remove free-face pairs until none remain.

    A face is free when exactly one other face properly contains it; the
    pair is then removed, which preserves the homotopy type.  Whenever the
    current complex is a cone the matching through the apex is used, which
    always finishes at a single vertex.  Ending at one vertex is a strong
    contractibility certificate; anything else is merely "stuck".
    """
    faces = sorted(face_set(c, cap), key=face_key)
    alive = set(faces)
    counts = {f: 0 for f in alive}
    for f in alive:
        for sub in _proper_subsets(f):
            if sub in counts:
                counts[sub] += 1
    steps: list = []

    def remove(face):
        alive.discard(face)
        for sub in _proper_subsets(face):
            if sub in counts and sub in alive:
                counts[sub] -= 1

    while len(alive) > 1:
        apex = _cone_apex(alive, counts)
        if apex is not None:
            # pair each face without the apex with its cone partner,
            # largest first; every pair is free at removal time
            for f in sorted((f for f in alive if apex not in f),
                            key=face_key, reverse=True):
                partner = f | {apex}
                steps.append((f, partner))
                remove(f)
                remove(partner)
            break
        free = None
        for f in faces:
            if f in alive and counts[f] == 1:
                free = f
                break
        if free is None:
            break
        partner = next(g for g in alive if free < g)
        steps.append((free, partner))
        remove(free)
        remove(partner)

    remaining = SimplicialComplex.from_faces(
        [f for f in alive if counts[f] == 0]) if alive else SimplicialComplex.empty()
    return CollapseResult(remaining, steps)


def _proper_subsets(face: frozenset):
    items = sorted(face)
    n = len(items)
    for mask in range(1, (1 << n) - 1):
        yield frozenset(items[i] for i in range(n) if mask >> i & 1)


def homological_connectivity(c: SimplicialComplex, cap: int | None = None) -> int:
    """Largest k with vanishing reduced mod-2 homology through degree k.

    Returns -1 when b~_0 > 0 (nonempty is all that holds).  This is the
    testable shadow of k-connectivity: vanishing homology is necessary
    for it, so lower bounds on connectivity can be checked against it.
    """
    if c.is_empty:
        raise EmptyComplex("connectivity of the empty space is undefined")
    entries = betti(c, cap).entries
    level = -1
    for b in entries:
        if b:
            break
        level += 1
    return level


def is_point(c: SimplicialComplex) -> bool:
    return len(c.maximal_faces) == 1 and len(c.maximal_faces[0]) == 1
