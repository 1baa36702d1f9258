"""Ground-truth blocked-point decisions by a radial sweep around the query.

Kept independent of the wedge and arrangement code on purpose: it regroups
the segments itself and reads directions straight off the segment
endpoints, relying only on the exact primitives in geom_core.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cmp_to_key
from typing import List, Optional, Sequence, Tuple

from app.errors import InvariantViolationError
from app.geom_core import (
    Direction,
    DirectionIntervalSet,
    Point,
    Segment,
    point_on_segment,
    segments_intersect,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockedVerdict:
    blocked: bool
    witness: Optional[Direction]
    coverage_arcs: DirectionIntervalSet

    def __str__(self):
        return "blocked" if self.blocked else f"clear {self.witness}"


def _full_turn_cmp(u, v) -> int:
    hu = 0 if u[1] > 0 or (u[1] == 0 and u[0] > 0) else 1
    hv = 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _group_segments(segments: Sequence[Segment]) -> List[List[Segment]]:
    unseen = set(range(len(segments)))
    groups = []
    while unseen:
        seed = min(unseen)
        unseen.discard(seed)
        queue = deque([seed])
        members = [seed]
        while queue:
            i = queue.popleft()
            touching = [j for j in unseen if segments_intersect(segments[i], segments[j])]
            for j in touching:
                unseen.discard(j)
                queue.append(j)
                members.append(j)
        groups.append([segments[i] for i in sorted(members)])
    return groups


def line_misses_segments(p: Point, d: Direction, segments: Sequence[Segment]) -> bool:
    """True iff the line through p with direction d meets none of the segments."""
    for s in segments:
        side_a = d.dx * (s.a.y - p.y) - d.dy * (s.a.x - p.x)
        side_b = d.dx * (s.b.y - p.y) - d.dy * (s.b.x - p.x)
        if side_a == 0 or side_b == 0 or (side_a > 0) != (side_b > 0):
            return False
    return True


class Oracle:
    """A barrier prepared for repeated blocked-point queries."""

    def __init__(self, barrier):
        self.segments: Tuple[Segment, ...] = tuple(barrier.segments)
        self.groups = []
        for group in _group_segments(self.segments):
            endpoints = list(dict.fromkeys(p for s in group for p in (s.a, s.b)))
            self.groups.append(endpoints)

    def _group_arc(self, p: Point, endpoints):
        """Directions of lines through p meeting one connected group.

        Returns a DirectionIntervalSet, or a single Direction when p lies on
        the supporting line of a collinear group.
        """
        vectors = [(e.x - p.x, e.y - p.y) for e in endpoints]
        ux, uy = vectors[0]
        if all(ux * vy - uy * vx == 0 for vx, vy in vectors):
            return Direction.of(ux, uy)
        vectors.sort(key=cmp_to_key(_full_turn_cmp))
        count = len(vectors)
        for k in range(count):
            (ax, ay), (bx, by) = vectors[k], vectors[(k + 1) % count]
            if ax * by - ay * bx < 0:
                # reflex gap from a to b: the group spans b .. a counter-clockwise
                return DirectionIntervalSet.from_arc(Direction.of(bx, by), Direction.of(ax, ay))
        return DirectionIntervalSet.full()

    def is_blocked(self, p: Point) -> BlockedVerdict:
        if any(point_on_segment(p, s) for s in self.segments):
            return BlockedVerdict(True, None, DirectionIntervalSet.full())
        arcs, dropped = [], []
        for endpoints in self.groups:
            arc = self._group_arc(p, endpoints)
            if isinstance(arc, Direction):
                dropped.append(arc)
            elif arc.is_full:
                return BlockedVerdict(True, None, arc)
            else:
                arcs.append(arc)
        union = DirectionIntervalSet.union_of(arcs)
        if union.is_full:
            return BlockedVerdict(True, None, union)
        witness = union.uncovered_direction(avoid=dropped)
        if witness is None or not line_misses_segments(p, witness, self.segments):
            raise InvariantViolationError(f"no valid witness line through {p}")
        return BlockedVerdict(False, witness, union)


def is_blocked(p: Point, barrier) -> BlockedVerdict:
    return Oracle(barrier).is_blocked(p)


def brute_force_coverage_check(barrier, candidate_points: Sequence[Point]) -> List[BlockedVerdict]:
    oracle = Oracle(barrier)
    return [oracle.is_blocked(p) for p in candidate_points]
