import pytest
from hypothesis import assume, given, strategies as st

from app.barrier import (
    ConvexHull,
    connected_components,
    convex_hull,
    hull_of_points,
    tangents_from_external_point,
    validate_and_build,
)
from app.errors import ContractViolationError, ValidationError
from app.geom_core import Orientation, Point, Segment, orientation, squared_distance

coords = st.integers(min_value=-12, max_value=12)
points = st.builds(Point, coords, coords)


def S(a, b):
    return Segment(Point(*a), Point(*b))


def brute_force_tangents(p, verts):
    """Hull vertices whose line through p keeps every vertex on one closed side,
    nearest to p when a tangent runs along an edge."""
    found = {}
    for t in verts:
        sides = {orientation(p, t, v) for v in verts} - {Orientation.COLLINEAR}
        if len(sides) <= 1:
            side = sides.pop() if sides else Orientation.COLLINEAR
            best = found.get(side)
            if best is None or squared_distance(p, t) < squared_distance(p, best):
                found[side] = t
    # every other vertex counter-clockwise of t means t is the clockwise tangent
    return found.get(Orientation.CCW), found.get(Orientation.CW)


def test_components_examples():
    assert connected_components([S((0, 0), (1, 0)), S((1, 0), (1, 1)), S((3, 3), (4, 3))]) == [[0, 1], [2]]
    assert connected_components([S((0, 0), (2, 2)), S((0, 2), (2, 0))]) == [[0, 1]]
    chain = [S((0, 0), (1, 0)), S((1, 0), (2, 1)), S((2, 1), (3, 1))]
    assert connected_components(chain) == [[0, 1, 2]]
    apart = [S((0, 0), (1, 0)), S((0, 2), (1, 2)), S((0, 4), (1, 4))]
    assert connected_components(apart) == [[0], [1], [2]]


def test_validate_and_build():
    barrier = validate_and_build([S((0, 0), (1, 0)), S((1, 0), (1, 1)), S((3, 3), (4, 3))])
    assert barrier.n == 3 and barrier.m == 2
    square = validate_and_build([S((0, 0), (1, 0)), S((1, 0), (1, 1)), S((1, 1), (0, 1)), S((0, 1), (0, 0))])
    assert square.m == 1
    assert set(square.components[0].hull.vertices) == {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}


def test_validate_rejects_bad_input():
    with pytest.raises(ValidationError) as info:
        validate_and_build([S((0, 0), (1, 0)), S((2, 2), (2, 2))])
    assert info.value.index == 1
    with pytest.raises(ValidationError):
        validate_and_build([])


def test_duplicate_segments_are_dropped():
    barrier = validate_and_build([S((0, 0), (1, 0)), S((1, 0), (0, 0))])
    assert barrier.n == 1


def test_hull_examples():
    hull = convex_hull([S((0, 0), (1, 0)), S((1, 0), (1, 1))])
    assert hull.vertices == (Point(0, 0), Point(1, 0), Point(1, 1))
    segment = convex_hull([S((0, -1), (0, 1))])
    assert segment.degenerate and len(segment) == 2


def test_hull_drops_collinear_points():
    hull = hull_of_points([Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 2), Point(0, 2), Point(1, 1)])
    assert hull.vertices == (Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2))


def test_tangent_examples():
    hull = convex_hull([S((0, -1), (0, 1))])
    assert set(tangents_from_external_point(Point(2, 0), hull)) == {Point(0, 1), Point(0, -1)}
    square = ConvexHull((Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)))
    cw, ccw = tangents_from_external_point(Point(3, 0), square)
    assert (cw, ccw) == brute_force_tangents(Point(3, 0), square.vertices)
    assert {cw, ccw} == {Point(1, 0), Point(1, 1)}
    cw, ccw = tangents_from_external_point(Point("1/2", 3), square)
    assert {cw, ccw} == {Point(0, 1), Point(1, 1)}


def test_tangent_from_inside_is_a_contract_violation():
    square = ConvexHull((Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)))
    with pytest.raises(ContractViolationError):
        tangents_from_external_point(Point("1/2", "1/2"), square)
    with pytest.raises(ContractViolationError):
        tangents_from_external_point(Point(1, "1/2"), square)


@given(st.lists(points, min_size=1, max_size=12), points)
def test_tangents_match_brute_force(cloud, p):
    hull = hull_of_points(cloud)
    assume(not hull.contains(p))
    assume(len(hull) >= 3 or (len(hull) == 2 and orientation(p, *hull.vertices) != Orientation.COLLINEAR))
    assert tangents_from_external_point(p, hull) == brute_force_tangents(p, hull.vertices)


@given(st.lists(points, min_size=3, max_size=15))
def test_hull_contains_every_input_point(cloud):
    hull = hull_of_points(cloud)
    assert all(hull.contains(p) for p in cloud)
