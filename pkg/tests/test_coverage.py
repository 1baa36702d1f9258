import random
from fractions import Fraction

import pytest

from app.arrangement import ClipBox, build_arrangement
from app.barrier import validate_and_build
from app.coverage import compute_coverage, detect_isolated_points, merge_full_depth_faces
from app.generator import gapped_ngon
from app.geom_core import Line, Point, Segment, point_on_segment, polygon_area, polygon_corners
from app.oracle import Oracle
from app.selftest import random_chain, random_sample_point, verify_result

UNIT_BOX = ClipBox(Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
POINTS_NEAR_ORIGIN = [
    Point("1/50", 0), Point("-1/50", 0), Point(0, "1/50"), Point(0, "-1/50"),
    Point("1/50", "1/100"), Point("1/50", "-1/100"), Point("-1/50", "1/100"), Point("-1/50", "-1/100"),
]


def check_connected_barrier(seed):
    rng = random.Random(seed)
    barrier = validate_and_build(random_chain(rng, 8, 20))
    result = compute_coverage(barrier)
    hull = barrier.components[0].hull
    assert barrier.m == 1
    if hull.degenerate:
        assert result.regions == []
    else:
        assert len(result.regions) == 1
        assert result.regions[0].area == polygon_area(hull.vertices)
        assert set(polygon_corners(result.regions[0].boundary)) == set(hull.vertices)
    oracle = Oracle(barrier)
    for face in result.arrangement.faces:
        assert oracle.is_blocked(face.representative).blocked == (face.depth == result.full_depth)


def test_single_segment_covers_only_itself(single_segment):
    result = compute_coverage(single_segment)
    assert result.regions == [] and result.isolated_points == []


def test_triangle_is_filled(triangle):
    result = compute_coverage(triangle)
    assert len(result.regions) == 1
    region = result.regions[0]
    assert region.area == 8
    assert region.boundary == (Point(0, 0), Point(4, 0), Point(0, 4))
    assert result.isolated_points == []


def test_fixiso_has_an_isolated_origin(fixiso):
    result = compute_coverage(fixiso)
    assert result.regions == []
    assert result.isolated_points == [Point(0, 0)]
    oracle = Oracle(fixiso)
    assert oracle.is_blocked(Point(0, 0)).blocked
    assert [oracle.is_blocked(p).blocked for p in POINTS_NEAR_ORIGIN] == [False] * 8


def test_isolated_point_lies_on_three_lines(fixiso):
    result = compute_coverage(fixiso)
    assert len(result.arrangement.lines_through(Point(0, 0))) >= 3


def test_stats_and_timings(triangle):
    plain = compute_coverage(triangle)
    assert "timings" not in plain.stats
    assert plain.stats["n"] == 3 and plain.stats["m"] == 1
    assert plain.stats["hull_vertices"] == 3
    assert plain.stats["regions"] == 1
    assert plain.stats["shared_vertex_pairs"] == []
    timed = compute_coverage(triangle, with_timings=True)
    assert set(timed.stats["timings"]) == {"wedges", "arrangement", "depths", "regions", "isolated"}


def test_results_are_deterministic(fixiso):
    first, second = compute_coverage(fixiso), compute_coverage(fixiso)
    assert first.regions == second.regions
    assert first.isolated_points == second.isolated_points
    assert first.stats == second.stats


def test_merge_faces_sharing_an_edge():
    arr = build_arrangement([Line(1, 0, 0), Line(0, 1, 0)], UNIT_BOX)
    depths = [1 if f.representative.x > 0 else 0 for f in arr.faces]
    regions = merge_full_depth_faces(arr, depths, 1)
    assert len(regions) == 1
    assert regions[0].area == 2
    assert regions[0].boundary[0] == Point(0, -1)


def test_merge_faces_sharing_a_vertex():
    arr = build_arrangement([Line(1, 0, 0), Line(0, 1, 0)], UNIT_BOX)
    depths = [1 if f.representative.x * f.representative.y > 0 else 0 for f in arr.faces]
    regions = merge_full_depth_faces(arr, depths, 1)
    assert len(regions) == 2
    assert all(r.area == 1 for r in regions)
    assert regions[0].boundary[0] < regions[1].boundary[0]


def test_merge_without_full_depth_faces():
    arr = build_arrangement([Line(1, 0, 0)], UNIT_BOX)
    assert merge_full_depth_faces(arr, [0, 0], 1) == []


def test_detect_isolated_points(triangle, single_segment, fixiso):
    for barrier, expected in ((triangle, []), (single_segment, []), (fixiso, [Point(0, 0)])):
        result = compute_coverage(barrier)
        assert detect_isolated_points(result.arrangement, barrier, result.regions) == expected


def test_bowtie_barrier_fills_its_hull():
    # two closed triangles meeting at the origin form one component
    barrier = validate_and_build([
        Segment(Point(0, 0), Point(2, 0)), Segment(Point(2, 0), Point(0, 2)), Segment(Point(0, 2), Point(0, 0)),
        Segment(Point(0, 0), Point(-2, 0)), Segment(Point(-2, 0), Point(0, -2)), Segment(Point(0, -2), Point(0, 0)),
    ])
    result = compute_coverage(barrier)
    assert barrier.m == 1
    assert [r.area for r in result.regions] == [8]
    assert verify_result(result, random.Random(3), 50) == []


@pytest.mark.parametrize("seed", range(10))
def test_connected_barrier_covers_its_hull(seed):
    check_connected_barrier(seed)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10, 50))
def test_connected_barrier_covers_its_hull_full(seed):
    check_connected_barrier(seed)


@pytest.mark.parametrize("seed", range(5))
def test_random_single_segment_samples(seed):
    rng = random.Random(seed)
    a = Point(rng.randint(-10, 10), rng.randint(-10, 10))
    b = Point(rng.randint(-10, 10), rng.randint(-10, 10))
    if a == b:
        b = Point(a.x + 1, a.y)
    barrier = validate_and_build([Segment(a, b)])
    result = compute_coverage(barrier)
    assert result.regions == [] and result.isolated_points == []
    oracle = Oracle(barrier)
    for _ in range(200):
        q = random_sample_point(rng, barrier)
        assert oracle.is_blocked(q).blocked == point_on_segment(q, barrier.segments[0])


def test_small_gapped_ngon_agrees_with_oracle():
    barrier = validate_and_build(gapped_ngon(4, Fraction(1, 10)))
    result = compute_coverage(barrier)
    assert barrier.m == 4
    assert verify_result(result, random.Random(5), 30) == []
