import pytest

from app.errors import ContractViolationError
from app.geom_core import Direction, Orientation, Point, orientation
from app.wedge import (
    DirectionIntervalSet,
    WedgeCase,
    classify_wedge_case,
    vertex_wedge_system,
    wedge_of,
)

SAMPLE_DIRECTIONS = sorted({Direction.of(dx, dy) for dx in range(-12, 13) for dy in range(0, 13)
                            if (dx, dy) != (0, 0)})


def line_enters_hull(p, d, hull):
    """Does the line through p with direction d meet the hull anywhere but a
    single touching point at p?"""
    tip = Point(p.x + d.dx, p.y + d.dy)
    sides = {orientation(p, tip, v) for v in hull.vertices if v != p}
    return not (len(sides) == 1 and Orientation.COLLINEAR not in sides)


def sampled_arcs_agree(p, barrier, arcs, skip=()):
    for d in SAMPLE_DIRECTIONS:
        expected = any(line_enters_hull(p, d, comp.hull) for comp in barrier.components
                       if comp not in skip)
        if arcs.contains(d) != expected:
            return d
    return None


def test_case_classification(make_barrier):
    segment = make_barrier(((0, -1), (0, 1))).components[0]
    corner = make_barrier(((0, 0), (1, 0)), ((1, 0), (1, 1))).components[0]
    assert classify_wedge_case(Point(0, 5), segment) is WedgeCase.COLLINEAR_EMPTY
    assert classify_wedge_case(Point(0, 0), corner) is WedgeCase.VERTEX_DOUBLEWEDGE
    assert classify_wedge_case(Point("1/2", "1/4"), corner) is WedgeCase.INSIDE_FULLPLANE
    assert classify_wedge_case(Point(2, 0), segment) is WedgeCase.EXTERNAL_DOUBLEWEDGE


def test_trivial_cases(make_barrier):
    segment = make_barrier(((0, -1), (0, 1))).components[0]
    corner = make_barrier(((0, 0), (1, 0)), ((1, 0), (1, 1))).components[0]
    assert wedge_of(Point(0, 5), segment).arcs.is_empty
    assert wedge_of(Point("1/2", "1/4"), corner).arcs.is_full


def test_external_wedge_of_segment(make_barrier):
    barrier = make_barrier(((0, -1), (0, 1)))
    record = wedge_of(Point(2, 0), barrier.components[0])
    assert record.case is WedgeCase.EXTERNAL_DOUBLEWEDGE
    assert {record.wedge.start, record.wedge.end} == {Direction.of(-2, 1), Direction.of(-2, -1)}
    assert record.arcs.contains(Direction(1, 0))
    assert not record.arcs.contains(Direction(0, 1))
    assert sampled_arcs_agree(Point(2, 0), barrier, record.arcs) is None


def test_double_wedge_contains_points(make_barrier):
    barrier = make_barrier(((0, -1), (0, 1)))
    wedge = wedge_of(Point(2, 0), barrier.components[0]).wedge
    assert wedge.contains(Point(0, 0))
    assert wedge.contains(Point(4, 0))      # the opposite half of the double wedge
    assert wedge.contains(Point(0, 1))
    assert not wedge.contains(Point(2, 5))


def test_single_component_vertex_union(triangle):
    p = Point(0, 0)
    system = vertex_wedge_system(p, triangle)
    assert len(system.records) == 1
    assert system.union == system.records[0].arcs
    assert sampled_arcs_agree(p, triangle, system.union) is None


def test_fixiso_vertex_union(fixiso):
    p = Point(2, 2)
    system = vertex_wedge_system(p, fixiso)
    own = [c for c in fixiso.components if c.hull.is_vertex(p)]
    assert sampled_arcs_agree(p, fixiso, system.union, skip=own) is None


def test_far_apart_squares(make_barrier):
    barrier = make_barrier(
        ((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (0, 1)), ((0, 1), (0, 0)),
        ((-10, 4), (-9, 4)), ((-9, 4), (-9, 5)), ((-9, 5), (-10, 5)), ((-10, 5), (-10, 4)),
    )
    p = Point(1, 1)
    system = vertex_wedge_system(p, barrier)
    cases = sorted(r.case.value for r in system.records)
    assert cases == [WedgeCase.VERTEX_DOUBLEWEDGE.value, WedgeCase.EXTERNAL_DOUBLEWEDGE.value]
    a, b = (r.arcs for r in system.records)
    assert a.union(b) == system.union
    assert not any(a.contains(d) and b.contains(d) for d in SAMPLE_DIRECTIONS)
    assert sampled_arcs_agree(p, barrier, system.union) is None


def test_system_requires_hull_vertex(triangle):
    with pytest.raises(ContractViolationError):
        vertex_wedge_system(Point(1, 1), triangle)


def test_system_contains_point(triangle):
    system = vertex_wedge_system(Point(0, 0), triangle)
    assert system.contains_point(Point(1, 1))
    assert system.contains_point(Point(-1, -1))
    assert not system.contains_point(Point(1, -1))
    assert system.contains_point(Point(0, 0))


def test_interval_set_reexported():
    assert DirectionIntervalSet.full().is_full
