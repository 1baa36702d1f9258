"""Per-vertex double-wedges and their unions.

For a hull vertex p and a component B_i, the wedge record says which lines
through p are taken to meet B_i: none (p collinear with a segment-like
component), all (p inside or on the hull), or the closed double-wedge
between two boundary lines (p a hull vertex, or p outside the hull).
The same wedge is kept both as a pair of lines for the arrangement and as
an arc of directions for membership tests.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from app.barrier import Barrier, Component, tangents_from_external_point
from app.errors import ContractViolationError
from app.geom_core import (
    Direction,
    DirectionIntervalSet,
    Line,
    Point,
    ccw_arc_contains,
    direction_between,
    line_through,
)

logger = logging.getLogger(__name__)

__all__ = [
    "DirectionIntervalSet",
    "DoubleWedge",
    "VertexWedgeSystem",
    "WedgeCase",
    "WedgeRecord",
    "classify_wedge_case",
    "vertex_wedge_system",
    "wedge_of",
]


class WedgeCase(enum.Enum):
    COLLINEAR_EMPTY = 1
    VERTEX_DOUBLEWEDGE = 2
    INSIDE_FULLPLANE = 3
    EXTERNAL_DOUBLEWEDGE = 4


@dataclass(frozen=True)
class DoubleWedge:
    """Closed double-wedge at `apex`; the arc from `start` counter-clockwise
    to `end` holds the directions of its lines."""
    apex: Point
    line1: Line
    line2: Line
    start: Direction
    end: Direction

    def arcs(self) -> DirectionIntervalSet:
        return DirectionIntervalSet.from_arc(self.start, self.end)

    def contains(self, q: Point) -> bool:
        if q == self.apex:
            return True
        return ccw_arc_contains(self.start, self.end, direction_between(self.apex, q))


class WedgeRecord(NamedTuple):
    case: WedgeCase
    wedge: Optional[DoubleWedge]
    arcs: DirectionIntervalSet


def classify_wedge_case(p: Point, comp: Component) -> WedgeCase:
    hull = comp.hull
    if hull.degenerate:
        if len(hull) == 1 or hull.supporting_line().contains(p):
            return WedgeCase.COLLINEAR_EMPTY
    elif hull.is_vertex(p):
        return WedgeCase.VERTEX_DOUBLEWEDGE
    elif hull.contains(p):
        return WedgeCase.INSIDE_FULLPLANE
    return WedgeCase.EXTERNAL_DOUBLEWEDGE


def _wedge_between(p: Point, first: Point, second: Point, hull_vertices) -> DoubleWedge:
    line1 = line_through(p, first)
    line2 = line_through(p, second)
    d1 = direction_between(p, first)
    d2 = direction_between(p, second)
    inner = next(
        (v for v in hull_vertices if not line1.contains(v) and not line2.contains(v)),
        Point((first.x + second.x) / 2, (first.y + second.y) / 2),
    )
    if ccw_arc_contains(d1, d2, direction_between(p, inner)):
        return DoubleWedge(p, line1, line2, d1, d2)
    return DoubleWedge(p, line2, line1, d2, d1)


def wedge_of(p: Point, comp: Component) -> WedgeRecord:
    case = classify_wedge_case(p, comp)
    hull = comp.hull
    if case is WedgeCase.COLLINEAR_EMPTY:
        return WedgeRecord(case, None, DirectionIntervalSet.empty())
    if case is WedgeCase.INSIDE_FULLPLANE:
        return WedgeRecord(case, None, DirectionIntervalSet.full())
    if case is WedgeCase.VERTEX_DOUBLEWEDGE:
        before, after = hull.neighbours(hull.index_of(p))
        wedge = _wedge_between(p, before, after, hull.vertices)
    else:
        cw, ccw = tangents_from_external_point(p, hull)
        wedge = _wedge_between(p, cw, ccw, hull.vertices)
    return WedgeRecord(case, wedge, wedge.arcs())


@dataclass(frozen=True)
class VertexWedgeSystem:
    vertex: Point
    records: Tuple[WedgeRecord, ...]
    union: DirectionIntervalSet
    boundary_lines: Tuple[Line, ...]

    def contains_point(self, q: Point) -> bool:
        """Whether q lies in the union of this vertex's wedges."""
        if q == self.vertex:
            return not self.union.is_empty
        return self.union.contains_vector(q.x - self.vertex.x, q.y - self.vertex.y)


def vertex_wedge_system(p: Point, barrier: Barrier) -> VertexWedgeSystem:
    if not any(comp.hull.is_vertex(p) for comp in barrier.components):
        raise ContractViolationError(f"{p} is not a hull vertex of the barrier")
    records = tuple(wedge_of(p, comp) for comp in barrier.components)
    union = DirectionIntervalSet.union_of(r.arcs for r in records)
    lines: List[Line] = []
    for r in records:
        if r.wedge is not None:
            for line in (r.wedge.line1, r.wedge.line2):
                if line not in lines:
                    lines.append(line)
    logger.debug("wedge system at %s: %s, %d lines", p, union, len(lines))
    return VertexWedgeSystem(p, records, union, tuple(lines))
