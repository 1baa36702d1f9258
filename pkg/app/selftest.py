"""Randomised self-test: run the pipeline on random barriers and check every
output invariant against the independent oracle."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from app import settings
from app.barrier import Barrier, hull_of_points, validate_and_build
from app.coverage import CoverageResult, compute_coverage
from app.errors import OpaqueError
from app.geom_core import (
    Orientation,
    Point,
    Segment,
    line_through,
    orientation,
    point_in_convex_polygon,
    polygon_area,
    polygon_corners,
)
from app.oracle import Oracle

logger = logging.getLogger(__name__)


# ---------------- Random barriers ----------------

def _random_point(rng: random.Random, bound: int) -> Point:
    return Point(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_segments(rng: random.Random, max_segments: int, bound: int) -> List[Segment]:
    segments = []
    for _ in range(rng.randint(1, max_segments)):
        a = _random_point(rng, bound)
        b = _random_point(rng, bound)
        while b == a:
            b = _random_point(rng, bound)
        segments.append(Segment(a, b))
    return segments


def random_chain(rng: random.Random, max_segments: int, bound: int) -> List[Segment]:
    """A connected polygonal chain of 1..max_segments segments."""
    points = [_random_point(rng, bound)]
    for _ in range(rng.randint(1, max_segments)):
        nxt = _random_point(rng, bound)
        while nxt == points[-1]:
            nxt = _random_point(rng, bound)
        points.append(nxt)
    return [Segment(p, q) for p, q in zip(points, points[1:])]


def random_sample_point(rng: random.Random, barrier: Barrier) -> Point:
    xs = [p.x for p in barrier.endpoints()]
    ys = [p.y for p in barrier.endpoints()]
    denominator = rng.randint(1, 7)

    def coordinate(lo, hi):
        lo, hi = int(lo) - 1, int(hi) + 1
        return Fraction(rng.randint(lo * denominator, hi * denominator), denominator)

    return Point(coordinate(min(xs), max(xs)), coordinate(min(ys), max(ys)))


# ---------------- Invariant checks ----------------

def _check_arrangement(result: CoverageResult) -> List[str]:
    arr = result.arrangement
    problems = []
    if sum((f.area for f in arr.faces), Fraction(0)) != arr.box.area:
        problems.append("face areas do not sum to the clip box area")
    if polygon_area(arr.outer_boundary) != -arr.box.area:
        problems.append("outer face does not trace the clip box")
    if len(arr.vertices) - arr.edge_count + len(arr.faces) + 1 != 2:
        problems.append("Euler's formula fails for the arrangement")
    for face in arr.faces:
        cycle = face.boundary
        if any(orientation(cycle[i - 2], cycle[i - 1], cycle[i]) != Orientation.CCW
               for i in range(len(cycle))):
            problems.append(f"face {face.id} is not strictly convex")
        if not point_in_convex_polygon(face.representative, cycle, strict=True):
            problems.append(f"face {face.id} representative is not interior")
    return problems


def verify_result(result: CoverageResult, rng: random.Random, samples: int) -> List[str]:
    barrier = result.barrier
    arr = result.arrangement
    oracle = Oracle(barrier)
    full = result.full_depth
    problems = _check_arrangement(result)

    endpoints = barrier.endpoints()
    overall_hull = hull_of_points(endpoints)
    closure = set()
    full_faces = []
    for region in result.regions:
        if region.area <= 0:
            problems.append(f"region at {region.boundary[0]} has no area")
        for f in region.face_ids:
            closure.update(arr.faces[f].boundary)
            full_faces.append(arr.faces[f])
        for p, q in zip(region.boundary, region.boundary[1:] + region.boundary[:1]):
            line = line_through(p, q)
            if sum(1 for e in endpoints if line.contains(e)) < 2:
                problems.append(f"region edge {p} {q} is not on a line through two barrier endpoints")
            if not overall_hull.contains(p):
                problems.append(f"region vertex {p} lies outside the barrier hull")
    if any(arr.box.on_boundary(v) for face in full_faces for v in face.boundary):
        problems.append("a full-depth face touches the clip box")

    for face in arr.faces:
        verdict = oracle.is_blocked(face.representative)
        if face.depth == full and not verdict.blocked:
            problems.append(f"full-depth face {face.id} representative {face.representative} is clear")
        if face.depth != full and verdict.blocked:
            problems.append(f"face {face.id} of depth {face.depth} has blocked representative "
                            f"{face.representative}")

    isolated = set(result.isolated_points)
    for p in result.isolated_points:
        if len(arr.lines_through(p)) < 3:
            problems.append(f"isolated point {p} lies on fewer than three lines")
        if p in closure or barrier.contains_point(p):
            problems.append(f"isolated point {p} is in a region or on the barrier")
        if not overall_hull.contains(p):
            problems.append(f"isolated point {p} lies outside the barrier hull")
        if not oracle.is_blocked(p).blocked:
            problems.append(f"isolated point {p} is clear")

    for v in arr.vertices:
        if v in closure or v in isolated or barrier.contains_point(v):
            continue
        if oracle.is_blocked(v).blocked:
            problems.append(f"blocked arrangement vertex {v} was not reported")

    if barrier.m == 1:
        hull = barrier.components[0].hull
        expected = 0 if hull.degenerate else 1
        area = sum((r.area for r in result.regions), Fraction(0))
        if len(result.regions) != expected:
            problems.append(f"connected barrier gave {len(result.regions)} regions")
        elif expected and area != polygon_area(hull.vertices):
            problems.append(f"connected barrier region area {area} differs from its hull")
        elif expected and set(polygon_corners(result.regions[0].boundary)) != set(hull.vertices):
            problems.append("connected barrier region corners differ from its hull vertices")

    for _ in range(samples):
        q = random_sample_point(rng, barrier)
        expected = (q in isolated or barrier.contains_point(q)
                    or any(point_in_convex_polygon(q, f.boundary) for f in full_faces))
        if oracle.is_blocked(q).blocked != expected:
            problems.append(f"sample {q}: oracle and coverage disagree")
    return problems


def verify_instance(barrier: Barrier, rng: random.Random, samples: int) -> List[str]:
    try:
        result = compute_coverage(barrier)
    except OpaqueError as exc:
        return [f"pipeline error: {exc}"]
    return verify_result(result, rng, samples)


# ---------------- Harness ----------------

@dataclass
class SelftestReport:
    lines: List[str] = field(default_factory=list)
    instances: int = 0
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def run_selftest(count: int, max_segments: int, bound: int, seed: int,
                 samples: Optional[int] = None) -> SelftestReport:
    samples = settings.SELFTEST_SAMPLES if samples is None else samples
    master = random.Random(seed)
    report = SelftestReport()
    for index in range(count):
        instance_seed = master.randrange(2 ** 32)
        rng = random.Random(instance_seed)
        barrier = validate_and_build(random_segments(rng, max_segments, bound))
        problems = verify_instance(barrier, rng, samples)
        report.instances += 1
        head = f"instance {index} seed {instance_seed} n={barrier.n} m={barrier.m}"
        if problems:
            report.failures += 1
            report.lines.append(f"{head}: FAIL")
            report.lines.extend(f"  {p}" for p in problems)
            logger.warning("%s failed with %d problems", head, len(problems))
        else:
            report.lines.append(f"{head}: ok")
    report.lines.append(f"{report.instances} instances, {report.failures} failed")
    return report
