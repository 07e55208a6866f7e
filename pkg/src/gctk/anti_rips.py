"""Anti-Rips complexes over finite exact-coordinate point sets.

A subset of the points is a face exactly when all its pairwise distances
exceed the scale r; equivalently the complex is the independence complex
of the "within distance r" graph.  Coordinates are rationals (ints or
decimal strings, parsed exactly) and every comparison against r is exact:
the line metric compares absolute differences, the planar metrics compare
squared distances, so the boundary d(p, q) <= r is bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .complexes import HomotopyType, SimplicialComplex, susp, wedge
from .errors import DuplicatePoint, WrongMetric
from .graphs import UndirectedGraph
from .independence import independence_complex

METRICS = ("line", "euclidean", "grid")


def as_rational(x) -> Rational:
    if isinstance(x, bool):
        raise WrongMetric(f"boolean coordinate {x!r}")
    if isinstance(x, Rational):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise WrongMetric(f"coordinate {x!r} is not exact; pass an int or a decimal string")


@dataclass(frozen=True)
class PointSet:
    """Finite set of pairwise-distinct points with a metric tag.

    line: scalar rational coordinates, distance |p - q|.
    euclidean: rational tuples of one common dimension.
    grid: integer pairs.  Distances for the planar metrics are handled
    through their squares.
    """

    metric: str
    points: tuple

    def __post_init__(self):
        if self.metric not in METRICS:
            raise WrongMetric(f"unknown metric {self.metric!r}")
        pts = []
        for p in self.points:
            if self.metric == "line":
                if isinstance(p, (tuple, list)):
                    if len(p) != 1:
                        raise WrongMetric("line points are single coordinates")
                    p = p[0]
                pts.append(as_rational(p))
            else:
                coords = tuple(as_rational(x) for x in p)
                if self.metric == "grid":
                    if len(coords) != 2 or any(x.denominator != 1 for x in map(Fraction, coords)):
                        raise WrongMetric("grid points are integer pairs")
                    coords = tuple(int(x) for x in coords)
                pts.append(coords)
        if self.metric == "euclidean" and len({len(p) for p in pts}) > 1:
            raise WrongMetric("euclidean points must share a dimension")
        if len(set(pts)) != len(pts):
            dupes = sorted({p for p in pts if pts.count(p) > 1})
            raise DuplicatePoint(f"duplicate points {dupes!r}")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @property
    def uses_squared_thresholds(self) -> bool:
        return self.metric != "line"

    def separation(self, p, q) -> Rational:
        """|p - q| on the line, squared Euclidean distance otherwise."""
        if self.metric == "line":
            return abs(p - q)
        return sum((a - b) * (a - b) for a, b in zip(p, q))

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        obj = json.loads(text, parse_float=Fraction)
        return cls(obj["metric"], tuple(tuple(p) if isinstance(p, list) else p
                                        for p in obj["points"]))

    def to_obj(self) -> dict:
        def coord(x):
            return str(x) if isinstance(x, Fraction) else x

        pts = [[coord(p)] if self.metric == "line" else [coord(x) for x in p]
               for p in self.points]
        return {"metric": self.metric, "points": pts}


def proximity_graph(ps: PointSet, r) -> UndirectedGraph:
    """Graph joining points within distance r (exact comparison)."""
    r = as_rational(r)
    threshold = r if ps.metric == "line" else r * r
    pts = ps.points
    edges = [(p, q) for i, p in enumerate(pts) for q in pts[i + 1:]
             if ps.separation(p, q) <= threshold]
    return UndirectedGraph(pts, edges)


def anti_rips_complex(ps: PointSet, r, cap: int | None = None) -> SimplicialComplex:
    """Faces are the subsets with all pairwise distances strictly above r."""
    if as_rational(r) < 0:
        raise WrongMetric("the scale r must be >= 0")
    return independence_complex(proximity_graph(ps, r), cap)


def line_homotopy(ps: PointSet, r) -> HomotopyType:
    """Homotopy type of the anti-Rips complex of a finite subset of the
    line: one suspended summand for every point within r above the
    minimum, each over the points more than r beyond it."""
    if ps.metric != "line":
        raise WrongMetric(f"line recursion needs the line metric, got {ps.metric!r}")
    r = as_rational(r)

    def rec(points: tuple) -> HomotopyType:
        if not points:
            return HomotopyType.EMPTY
        m = points[0]
        parts = [susp(rec(tuple(q for q in points if q > p + r)))
                 for p in points if m < p <= m + r]
        return wedge(parts)

    return rec(ps.points)


def grid_connectivity_bound(ps: PointSet) -> int:
    """floor((n - 9) / 6) for n integer-grid points at scale 1."""
    if ps.metric != "grid":
        raise WrongMetric(f"the planar bound needs the grid metric, got {ps.metric!r}")
    return (len(ps.points) - 9) // 6


@dataclass(frozen=True)
class SweepEntry:
    threshold: Rational  # distance on the line, squared distance otherwise
    complex: SimplicialComplex


def scale_sweep(ps: PointSet, cap: int | None = None) -> list:
    """The distinct complexes as r runs from 0 upward, one entry per
    half-open critical interval, evaluated at its left endpoint.

    Thresholds are the sorted pairwise separations with a leading 0; the
    face sets shrink as the threshold grows.
    """
    pts = ps.points
    separations = sorted({ps.separation(p, q)
                          for i, p in enumerate(pts) for q in pts[i + 1:]})
    thresholds = [Fraction(0)] + [Fraction(s) for s in separations]
    entries = []
    for t in thresholds:
        graph = UndirectedGraph(
            pts, [(p, q) for i, p in enumerate(pts) for q in pts[i + 1:]
                  if ps.separation(p, q) <= t])
        entries.append(SweepEntry(t, independence_complex(graph, cap)))
    return entries
