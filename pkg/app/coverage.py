"""Coverage of a barrier: full-depth faces merged into maximal regions, the
barrier itself, and the isolated blocked points.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from app import arrangement
from app.arrangement import Arrangement, build_arrangement, clip_box_for, line_crossings
from app.barrier import Barrier, validate_and_build
from app.errors import InvariantViolationError
from app.generator import fix_iso_segments
from app.geom_core import Point, Segment, polygon_area
from app.oracle import Oracle
from app.wedge import VertexWedgeSystem, vertex_wedge_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaximalRegion:
    boundary: Tuple[Point, ...]
    face_ids: Tuple[int, ...]
    area: Fraction


@dataclass
class CoverageResult:
    regions: List[MaximalRegion]
    barrier_segments: Tuple[Segment, ...]
    isolated_points: List[Point]
    stats: Dict[str, object]
    barrier: Optional[Barrier] = field(default=None, repr=False)
    systems: List[VertexWedgeSystem] = field(default_factory=list, repr=False)
    arrangement: Optional[Arrangement] = field(default=None, repr=False)
    depths: List[int] = field(default_factory=list, repr=False)

    @property
    def full_depth(self) -> int:
        return len(self.systems)


# ---------------- Regions ----------------

def _rotate_to_smallest(cycle: Tuple[Point, ...]) -> Tuple[Point, ...]:
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def _trace_region(arr: Arrangement, members: set) -> List[Tuple[Point, ...]]:
    """Boundary cycles of a union of faces, walking around shared vertices."""
    outside = lambda he: arr.he_face[he ^ 1] not in members
    boundary_hes = [he for f in sorted(members) for he in arr.faces[f].half_edges if outside(he)]
    seen = set()
    cycles = []
    for start in boundary_hes:
        if start in seen:
            continue
        cycle = []
        he = start
        while he not in seen:
            seen.add(he)
            cycle.append(arr.vertices[arr.he_origin[he]])
            candidate = arr.he_next[he]
            while not outside(candidate):
                candidate = arr.he_next[candidate ^ 1]
            he = candidate
        cycles.append(tuple(cycle))
    return cycles


def merge_full_depth_faces(arr: Arrangement, depths: List[int], full_depth: int) -> List[MaximalRegion]:
    full = [f.id for f in arr.faces if depths[f.id] == full_depth and full_depth > 0]
    parent = {f: f for f in full}

    def find(f):
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    for f in full:
        for g in arr.adjacency[f]:
            if g in parent and find(f) != find(g):
                parent[find(g)] = find(f)

    groups: Dict[int, List[int]] = {}
    for f in full:
        groups.setdefault(find(f), []).append(f)

    regions = []
    for members in groups.values():
        cycles = _trace_region(arr, set(members))
        outer = [c for c in cycles if polygon_area(c) > 0]
        if len(cycles) != 1 or len(outer) != 1:
            raise InvariantViolationError(
                f"region of faces {sorted(members)} has {len(cycles)} boundary cycles")
        area = sum((arr.faces[f].area for f in members), Fraction(0))
        regions.append(MaximalRegion(_rotate_to_smallest(outer[0]), tuple(sorted(members)), area))
    regions.sort(key=lambda r: r.boundary[0])
    return regions


# ---------------- Isolated points ----------------

def detect_isolated_points(arr: Arrangement, barrier: Barrier, regions: List[MaximalRegion],
                           oracle: Optional[Oracle] = None) -> List[Point]:
    oracle = oracle or Oracle(barrier)
    closure = set()
    for region in regions:
        for f in region.face_ids:
            closure.update(arr.faces[f].boundary)
    found = []
    for v in arr.vertices:
        if len(arr.lines_through(v)) < 3 or v in closure:
            continue
        if barrier.contains_point(v):
            continue
        if oracle.is_blocked(v).blocked:
            found.append(v)
    return sorted(set(found))


# ---------------- Fixtures ----------------

def fix_iso_barrier() -> Barrier:
    """A barrier whose coverage is the barrier itself plus the single
    point (0, 0)."""
    return validate_and_build(fix_iso_segments())


# ---------------- Pipeline ----------------

def _shared_vertex_pairs(regions: List[MaximalRegion]) -> List[List[int]]:
    pairs = []
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            if set(regions[i].boundary) & set(regions[j].boundary):
                pairs.append([i, j])
    return pairs


def compute_coverage(barrier: Barrier, with_timings: bool = False) -> CoverageResult:
    timings = {}
    clock = time.perf_counter()

    def lap(stage):
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = round(now - clock, 6)
        clock = now

    systems = [vertex_wedge_system(p, barrier) for p in barrier.hull_vertices()]
    lap("wedges")

    lines = []
    for system in systems:
        lines.extend(system.boundary_lines)
    lines.extend(s.supporting_line() for s in barrier.segments)
    lines = list(dict.fromkeys(lines))
    crossings = line_crossings(lines)
    box = clip_box_for(barrier.endpoints(), crossings.values())
    arr = build_arrangement(lines, box, crossings)
    lap("arrangement")

    depths = arrangement.face_depths(arr, systems)
    lap("depths")

    regions = merge_full_depth_faces(arr, depths, len(systems))
    lap("regions")

    isolated = detect_isolated_points(arr, barrier, regions)
    lap("isolated")

    stats = {
        "n": barrier.n,
        "m": barrier.m,
        "hull_vertices": len(systems),
        "lines": len(arr.lines),
        "faces": len(arr.faces),
        "full_depth_faces": sum(1 for d in depths if d == len(systems)),
        "regions": len(regions),
        "isolated_points": len(isolated),
        "shared_vertex_pairs": _shared_vertex_pairs(regions),
    }
    if with_timings:
        stats["timings"] = timings
    logger.info("coverage: %d regions, %d isolated points (n=%d, m=%d, faces=%d)",
                len(regions), len(isolated), barrier.n, barrier.m, len(arr.faces))
    return CoverageResult(regions, barrier.segments, isolated, stats,
                          barrier=barrier, systems=systems, arrangement=arr, depths=depths)
