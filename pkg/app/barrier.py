"""Barrier validation, connected components and convex hulls."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from app.errors import ContractViolationError, ValidationError
from app.geom_core import (
    Line,
    Orientation,
    Point,
    Segment,
    cross,
    line_through,
    orientation,
    point_in_convex_polygon,
    point_on_segment,
    segments_intersect,
    squared_distance,
)

logger = logging.getLogger(__name__)


# ---------------- Convex hulls ----------------

@dataclass(frozen=True)
class ConvexHull:
    """Counter-clockwise hull vertices with no three consecutive collinear."""
    vertices: Tuple[Point, ...]

    @property
    def degenerate(self) -> bool:
        return len(self.vertices) < 3

    def __len__(self):
        return len(self.vertices)

    def index_of(self, p: Point) -> int:
        try:
            return self.vertices.index(p)
        except ValueError:
            return -1

    def is_vertex(self, p: Point) -> bool:
        return p in self.vertices

    def supporting_line(self) -> Line:
        if len(self.vertices) != 2:
            raise ContractViolationError("only a two-point hull has a supporting line")
        return line_through(*self.vertices)

    def contains(self, p: Point) -> bool:
        """Inside or on the boundary."""
        if len(self.vertices) == 1:
            return p == self.vertices[0]
        if len(self.vertices) == 2:
            return point_on_segment(p, Segment(*self.vertices))
        return point_in_convex_polygon(p, self.vertices)

    def neighbours(self, index: int) -> Tuple[Point, Point]:
        count = len(self.vertices)
        return self.vertices[(index - 1) % count], self.vertices[(index + 1) % count]


def hull_of_points(points: Iterable[Point]) -> ConvexHull:
    """Monotone chain over exact coordinates; collinear points are dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return ConvexHull(tuple(pts))

    def half(sequence):
        chain = []
        for p in sequence:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return ConvexHull(tuple(lower[:-1] + upper[:-1]))


def convex_hull(segments: Iterable[Segment]) -> ConvexHull:
    endpoints = []
    for s in segments:
        endpoints.extend((s.a, s.b))
    if not endpoints:
        raise ContractViolationError("convex hull of an empty component")
    return hull_of_points(endpoints)


# ---------------- Tangents ----------------

def _extreme_index(p: Point, verts: Sequence[Point], sign: int) -> int:
    """Index of the hull vertex furthest counter-clockwise (sign=+1) or
    clockwise (sign=-1) as seen from the external point p.

    Vertices strictly beyond verts[0] form one contiguous run of indices,
    and along that run the angle seen from p rises to a single peak, so both
    steps are binary searches.
    """
    h = len(verts)

    def turn(i, j):
        return sign * int(orientation(p, verts[i], verts[j]))

    if h == 1:
        return 0
    if turn(0, 1) > 0 or (turn(0, 1) == 0 and h > 2 and turn(0, 2) > 0):
        run_lo = 1 if turn(0, 1) > 0 else 2
        lo, hi = run_lo, h - 1
        while lo < hi:          # last index of the run
            mid = (lo + hi + 1) // 2
            if turn(0, mid) > 0:
                lo = mid
            else:
                hi = mid - 1
        run_hi = lo
    else:
        lo, hi = 1, h
        while lo < hi:          # first index of the run, h if none
            mid = (lo + hi) // 2
            if turn(0, mid) > 0:
                hi = mid
            else:
                lo = mid + 1
        if lo == h:
            return 0
        run_lo, run_hi = lo, h - 1
    lo, hi = run_lo, run_hi
    while lo < hi:              # first index that stops rising
        mid = (lo + hi) // 2
        if turn(mid, mid + 1) > 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _nearest_on_tangent(p: Point, verts: Sequence[Point], index: int) -> Point:
    h = len(verts)
    best = verts[index]
    for j in ((index - 1) % h, (index + 1) % h):
        other = verts[j]
        if other != best and orientation(p, best, other) == Orientation.COLLINEAR:
            if squared_distance(p, other) < squared_distance(p, best):
                best = other
    return best


def tangents_from_external_point(p: Point, hull: ConvexHull) -> Tuple[Point, Point]:
    """Tangency vertices from p, clockwise-most first.

    When a tangent line runs along a hull edge the endpoint nearer to p wins.
    """
    if hull.contains(p):
        raise ContractViolationError(f"point {p} is not outside the hull")
    verts = hull.vertices
    cw = _nearest_on_tangent(p, verts, _extreme_index(p, verts, -1))
    ccw = _nearest_on_tangent(p, verts, _extreme_index(p, verts, +1))
    return cw, ccw


# ---------------- Barrier ----------------

@dataclass(frozen=True)
class Component:
    segment_indices: Tuple[int, ...]
    hull: ConvexHull


@dataclass(frozen=True)
class Barrier:
    segments: Tuple[Segment, ...]
    components: Tuple[Component, ...]

    @property
    def n(self) -> int:
        return len(self.segments)

    @property
    def m(self) -> int:
        return len(self.components)

    def endpoints(self) -> List[Point]:
        seen = {}
        for s in self.segments:
            seen.setdefault(s.a, None)
            seen.setdefault(s.b, None)
        return list(seen)

    def hull_vertices(self) -> List[Point]:
        return [v for comp in self.components for v in comp.hull.vertices]

    def contains_point(self, p: Point) -> bool:
        return any(point_on_segment(p, s) for s in self.segments)


def connected_components(segments: Sequence[Segment]) -> List[List[int]]:
    """Partition segment indices by the closure of closed-set intersection."""
    parent = list(range(len(segments)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            if find(i) != find(j) and segments_intersect(segments[i], segments[j]):
                parent[find(j)] = find(i)

    groups = {}
    for i in range(len(segments)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def validate_and_build(raw_segments: Sequence[Segment]) -> Barrier:
    if not raw_segments:
        raise ValidationError(None, "barrier has no segments")
    segments = []
    seen = set()
    for index, s in enumerate(raw_segments):
        if s.is_degenerate:
            raise ValidationError(index, f"zero-length segment at {s.a}")
        s = s.canonical()
        if s in seen:
            logger.debug("dropping duplicate segment %d %s", index, s)
            continue
        seen.add(s)
        segments.append(s)

    components = tuple(
        Component(tuple(group), convex_hull(segments[i] for i in group))
        for group in connected_components(segments)
    )
    logger.debug("barrier: n=%d m=%d", len(segments), len(components))
    return Barrier(tuple(segments), components)
