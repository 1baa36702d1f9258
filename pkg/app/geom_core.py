"""Exact rational geometry: points, segments, lines, directions and predicates.

Every coordinate is a ``fractions.Fraction``; no predicate ever rounds.
Directions are undirected (taken modulo pi) and are ordered by angle in
[0, pi) using cross-product signs only.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Sequence, Tuple, Union

from app.errors import DegenerateInputError

Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    return Fraction(value)


# ---------------- Points and segments ----------------

@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_rational(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_rational(self.y))

    def __str__(self):
        return f"{self.x},{self.y}"


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def canonical(self) -> "Segment":
        return self if self.a <= self.b else Segment(self.b, self.a)

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    def contains(self, p: Point) -> bool:
        return point_on_segment(p, self)

    def supporting_line(self) -> "Line":
        return line_through(self.a, self.b)

    def __str__(self):
        return f"({self.a})-({self.b})"


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    value = cross(p, q, r)
    if value > 0:
        return Orientation.CCW
    if value < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def squared_distance(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def point_on_segment(p: Point, s: Segment) -> bool:
    if cross(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    o1 = orientation(s1.a, s1.b, s2.a)
    o2 = orientation(s1.a, s1.b, s2.b)
    o3 = orientation(s2.a, s2.b, s1.a)
    o4 = orientation(s2.a, s2.b, s1.b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and point_on_segment(s2.a, s1))
            or (o2 == 0 and point_on_segment(s2.b, s1))
            or (o3 == 0 and point_on_segment(s1.a, s2))
            or (o4 == 0 and point_on_segment(s1.b, s2)))


# ---------------- Lines ----------------

def _integer_triple(values: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    ints = [int(v * scale) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints) if g > 1 else tuple(ints)


@dataclass(frozen=True, order=True)
class Line:
    """The line a*x + b*y + c = 0 in canonical integer form.

    Coefficients are coprime integers with the first nonzero of (a, b)
    positive, so equal lines compare equal.
    """
    a: int
    b: int
    c: int

    @classmethod
    def from_coefficients(cls, a: Number, b: Number, c: Number) -> "Line":
        a, b, c = _integer_triple([as_rational(a), as_rational(b), as_rational(c)])
        if a == 0 and b == 0:
            raise DegenerateInputError("line coefficients a and b are both zero")
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def evaluate(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.evaluate(p) == 0

    @property
    def direction(self) -> "Direction":
        return Direction.of(self.b, -self.a)

    def __str__(self):
        return f"{self.a}x{self.b:+d}y{self.c:+d}=0"


class LineRelation(enum.Enum):
    PARALLEL = "parallel"
    IDENTICAL = "identical"


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise DegenerateInputError(f"no unique line through identical points {p}")
    return Line.from_coefficients(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def line_intersection(l1: Line, l2: Line) -> Union[Point, LineRelation]:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return LineRelation.IDENTICAL if l1 == l2 else LineRelation.PARALLEL
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Point(x, y)


# ---------------- Directions ----------------

def upper_half(dx, dy):
    """Flip a nonzero vector into the half-plane used for line directions."""
    if dy < 0 or (dy == 0 and dx < 0):
        return -dx, -dy
    return dx, dy


def _before(ax, ay, bx, by) -> bool:
    # both vectors already in the upper half-plane
    return ax * by - ay * bx > 0


@total_ordering
@dataclass(frozen=True)
class Direction:
    """An undirected line direction, canonical with dy > 0 or (dy == 0, dx > 0)."""
    dx: int
    dy: int

    @classmethod
    def of(cls, dx: Number, dy: Number) -> "Direction":
        if dx == 0 and dy == 0:
            raise DegenerateInputError("zero vector has no direction")
        dx, dy = upper_half(as_rational(dx), as_rational(dy))
        ix, iy = _integer_triple([dx, dy])
        return cls(ix, iy)

    def __lt__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        return _before(self.dx, self.dy, other.dx, other.dy)

    def precedes_vector(self, dx, dy) -> bool:
        return _before(self.dx, self.dy, dx, dy)

    def follows_vector(self, dx, dy) -> bool:
        return _before(dx, dy, self.dx, self.dy)

    def __str__(self):
        return f"{self.dx},{self.dy}"


HORIZONTAL = Direction(1, 0)


def direction_between(p: Point, q: Point) -> Direction:
    if p == q:
        raise DegenerateInputError(f"no direction between identical points {p}")
    return Direction.of(q.x - p.x, q.y - p.y)


def ccw_arc_contains(start: Direction, end: Direction, d: Direction) -> bool:
    """Membership in the closed arc swept counter-clockwise from start to end."""
    if start <= end:
        return start <= d <= end
    return d >= start or d <= end


# ---------------- Direction interval sets ----------------

Span = Tuple[Direction, Optional[Direction]]   # hi None means "up to pi"


@dataclass(frozen=True)
class DirectionIntervalSet:
    """Closed arcs of the direction circle [0, pi), sorted and merged.

    A span whose upper end is ``None`` runs up to pi; an arc that crosses
    pi is stored as that span plus a span starting at direction 0.
    """
    spans: Tuple[Span, ...] = ()

    @classmethod
    def empty(cls) -> "DirectionIntervalSet":
        return cls(())

    @classmethod
    def full(cls) -> "DirectionIntervalSet":
        return cls(((HORIZONTAL, None),))

    @classmethod
    def from_arc(cls, start: Direction, end: Direction) -> "DirectionIntervalSet":
        if start <= end:
            return cls(((start, end),))
        return cls._normalized([(start, None), (HORIZONTAL, end)])

    @classmethod
    def union_of(cls, sets: Iterable["DirectionIntervalSet"]) -> "DirectionIntervalSet":
        spans = []
        for s in sets:
            spans.extend(s.spans)
        return cls._normalized(spans)

    def union(self, other: "DirectionIntervalSet") -> "DirectionIntervalSet":
        return DirectionIntervalSet.union_of((self, other))

    @classmethod
    def _normalized(cls, spans) -> "DirectionIntervalSet":
        merged = []
        for lo, hi in sorted(spans, key=lambda span: span[0]):
            if merged:
                prev_lo, prev_hi = merged[-1]
                if prev_hi is None or lo <= prev_hi:
                    if prev_hi is not None and (hi is None or hi > prev_hi):
                        merged[-1] = (prev_lo, hi)
                    continue
            merged.append((lo, hi))
        return cls(tuple(merged))

    @property
    def is_full(self) -> bool:
        return len(self.spans) == 1 and self.spans[0] == (HORIZONTAL, None)

    @property
    def is_empty(self) -> bool:
        return not self.spans

    def endpoints(self) -> Tuple[Direction, ...]:
        found = []
        for lo, hi in self.spans:
            found.append(lo)
            if hi is not None:
                found.append(hi)
        return tuple(found)

    def contains(self, d: Direction) -> bool:
        return self.contains_vector(d.dx, d.dy)

    def contains_vector(self, dx, dy) -> bool:
        """Membership of the direction of a nonzero vector (need not be reduced)."""
        if not self.spans:
            return False
        ux, uy = upper_half(dx, dy)
        # last span whose lower end is not after u
        lo_i, hi_i = 0, len(self.spans)
        while lo_i < hi_i:
            mid = (lo_i + hi_i) // 2
            if self.spans[mid][0].follows_vector(ux, uy):
                hi_i = mid
            else:
                lo_i = mid + 1
        if lo_i == 0:
            return False
        upper = self.spans[lo_i - 1][1]
        return upper is None or not upper.precedes_vector(ux, uy)

    def _gaps(self):
        if not self.spans:
            return [((1, 0), (0, 1))]
        gaps = []
        first_lo = self.spans[0][0]
        if first_lo != HORIZONTAL:
            gaps.append(((1, 0), (first_lo.dx, first_lo.dy)))
        for (_, hi), (next_lo, _) in zip(self.spans, self.spans[1:]):
            gaps.append(((hi.dx, hi.dy), (next_lo.dx, next_lo.dy)))
        last_hi = self.spans[-1][1]
        if last_hi is not None:
            if last_hi == HORIZONTAL:
                gaps.append(((0, 1), (-1, 0)))
            else:
                gaps.append(((last_hi.dx, last_hi.dy), (-1, 0)))
        return gaps

    def uncovered_direction(self, avoid: Iterable[Direction] = ()) -> Optional[Direction]:
        """A direction outside every span and outside `avoid`, or None when full."""
        if self.is_full:
            return None
        avoid = set(avoid)
        if not self.spans or self.spans[0][0] != HORIZONTAL:
            if HORIZONTAL not in avoid:
                return HORIZONTAL
        for (ax, ay), (bx, by) in self._gaps():
            # a + k*b lies strictly inside the open gap for every k >= 1
            for k in range(1, len(avoid) + 2):
                candidate = Direction.of(ax + k * bx, ay + k * by)
                if candidate not in avoid:
                    return candidate
        return None

    def __str__(self):
        if self.is_full:
            return "[full]"
        parts = [f"[{lo}..{hi if hi is not None else 'pi'}]" for lo, hi in self.spans]
        return " ".join(parts) or "[empty]"


# ---------------- Polygons ----------------

def polygon_area(vertices: Sequence[Point]) -> Fraction:
    """Signed area, positive for counter-clockwise cycles."""
    total = Fraction(0)
    count = len(vertices)
    for i in range(count):
        p, q = vertices[i], vertices[(i + 1) % count]
        total += p.x * q.y - q.x * p.y
    return total / 2


def polygon_corners(vertices: Sequence[Point]) -> Tuple[Point, ...]:
    """Vertices of a cycle where the boundary actually turns."""
    count = len(vertices)
    return tuple(
        v for i, v in enumerate(vertices)
        if orientation(vertices[i - 1], v, vertices[(i + 1) % count]) != Orientation.COLLINEAR
    )


def centroid_of_vertices(vertices: Sequence[Point]) -> Point:
    count = len(vertices)
    return Point(sum((v.x for v in vertices), Fraction(0)) / count,
                 sum((v.y for v in vertices), Fraction(0)) / count)


def point_in_convex_polygon(p: Point, vertices: Sequence[Point], strict: bool = False) -> bool:
    """Point test against a counter-clockwise convex cycle; closed unless `strict`."""
    count = len(vertices)
    for i in range(count):
        turn = orientation(vertices[i], vertices[(i + 1) % count], p)
        if turn == Orientation.CW or (strict and turn == Orientation.COLLINEAR):
            return False
    return True
