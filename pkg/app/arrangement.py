"""Line arrangements clipped to a box, stored as half-edges.

Construction splits every line at its crossings with the other lines and
with the box, links the pieces into twin half-edges, orders the outgoing
half-edges of each vertex by angle and walks `next` pointers to recover
the faces. Faces lie to the left of their half-edges, so bounded faces come
out counter-clockwise and the single outer face clockwise.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from app.errors import ContractViolationError, InvariantViolationError
from app.geom_core import (
    Line,
    Point,
    centroid_of_vertices,
    line_intersection,
    polygon_area,
)

logger = logging.getLogger(__name__)

BOX_SIDE = -1   # line index carried by half-edges on the clipping box


@dataclass(frozen=True)
class ClipBox:
    xmin: Fraction
    ymin: Fraction
    xmax: Fraction
    ymax: Fraction

    @property
    def area(self) -> Fraction:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin)

    def corners(self) -> Tuple[Point, ...]:
        return (Point(self.xmin, self.ymin), Point(self.xmax, self.ymin),
                Point(self.xmax, self.ymax), Point(self.xmin, self.ymax))

    def strictly_contains(self, p: Point) -> bool:
        return self.xmin < p.x < self.xmax and self.ymin < p.y < self.ymax

    def on_boundary(self, p: Point) -> bool:
        inside = self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax
        return inside and not self.strictly_contains(p)

    def clip(self, line: Line) -> Tuple[Point, Point]:
        """The two points where a line leaves the box."""
        hits = []
        if line.b != 0:
            for x in (self.xmin, self.xmax):
                y = -(line.a * x + line.c) / Fraction(line.b)
                if self.ymin <= y <= self.ymax:
                    hits.append(Point(x, y))
        if line.a != 0:
            for y in (self.ymin, self.ymax):
                x = -(line.b * y + line.c) / Fraction(line.a)
                if self.xmin <= x <= self.xmax:
                    hits.append(Point(x, y))
        hits = sorted(set(hits))
        if len(hits) != 2:
            raise ContractViolationError(f"line {line} does not cross the clip box")
        return hits[0], hits[1]


def line_crossings(lines: Sequence[Line]) -> Dict[Tuple[int, int], Point]:
    """All pairwise crossing points, keyed by index pairs (i < j)."""
    crossings = {}
    for i, j in combinations(range(len(lines)), 2):
        hit = line_intersection(lines[i], lines[j])
        if isinstance(hit, Point):
            crossings[(i, j)] = hit
    return crossings


def clip_box_for(points: Iterable[Point], crossings: Iterable[Point], margin: int = 1) -> ClipBox:
    """Axis-aligned box strictly containing every given point, with a margin."""
    xs, ys = [], []
    for p in list(points) + list(crossings):
        xs.append(p.x)
        ys.append(p.y)
    if not xs:
        raise ContractViolationError("clip box of an empty point set")
    return ClipBox(min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


# ---------------- Data model ----------------

@dataclass
class Face:
    id: int
    boundary: Tuple[Point, ...]
    half_edges: Tuple[int, ...]
    representative: Point
    area: Fraction
    bounded: bool
    depth: int = 0


@dataclass
class Arrangement:
    lines: Tuple[Line, ...]
    box: ClipBox
    vertices: Tuple[Point, ...]
    vertex_lines: Dict[Point, FrozenSet[int]]
    he_origin: List[int]
    he_line: List[int]
    he_next: List[int]
    he_face: List[int]              # -1 for the outer face
    faces: List[Face]
    adjacency: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    outer_boundary: Tuple[Point, ...] = ()

    @staticmethod
    def twin(he: int) -> int:
        return he ^ 1

    @property
    def edge_count(self) -> int:
        return len(self.he_origin) // 2

    def he_destination(self, he: int) -> int:
        return self.he_origin[he ^ 1]

    def lines_through(self, p: Point) -> FrozenSet[int]:
        return self.vertex_lines.get(p, frozenset())


# ---------------- Construction ----------------

def _half(dx, dy) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def build_arrangement(lines: Sequence[Line], clip_box: ClipBox,
                      crossings: Optional[Dict[Tuple[int, int], Point]] = None) -> Arrangement:
    unique = tuple(dict.fromkeys(lines))
    if len(unique) != len(lines):
        crossings = None    # indices no longer match
    lines = unique
    if crossings is None:
        crossings = line_crossings(lines)

    on_line: List[List[Point]] = [[] for _ in lines]
    vertex_lines: Dict[Point, set] = {}
    for (i, j), p in crossings.items():
        if not clip_box.strictly_contains(p):
            raise ContractViolationError(f"crossing {p} lies outside the clip box")
        on_line[i].append(p)
        on_line[j].append(p)
        vertex_lines.setdefault(p, set()).update((i, j))

    side_points: List[List[Point]] = [[c] for c in clip_box.corners()]
    for index, line in enumerate(lines):
        for p in clip_box.clip(line):
            on_line[index].append(p)
            vertex_lines.setdefault(p, set()).add(index)
            if p.y == clip_box.ymin:
                side_points[0].append(p)
            elif p.x == clip_box.xmax:
                side_points[1].append(p)
            elif p.y == clip_box.ymax:
                side_points[2].append(p)
            else:
                side_points[3].append(p)

    vertex_id: Dict[Point, int] = {}
    vertices: List[Point] = []

    def vid(p: Point) -> int:
        index = vertex_id.get(p)
        if index is None:
            index = vertex_id[p] = len(vertices)
            vertices.append(p)
        return index

    he_origin: List[int] = []
    he_line: List[int] = []

    def add_chain(points: Iterable[Point], line_index: int, key):
        chain = sorted(set(points), key=key)
        for p, q in zip(chain, chain[1:]):
            he_origin.extend((vid(p), vid(q)))
            he_line.extend((line_index, line_index))

    for index, line in enumerate(lines):
        add_chain(on_line[index], index, lambda p, l=line: l.b * p.x - l.a * p.y)
    corners = clip_box.corners()
    for side in range(4):
        points = side_points[side] + [corners[(side + 1) % 4]]
        add_chain(points, BOX_SIDE, lambda p: (p.x, p.y))

    # outgoing half-edges of each vertex in counter-clockwise order
    outgoing: List[List[int]] = [[] for _ in vertices]
    for he, origin in enumerate(he_origin):
        outgoing[origin].append(he)
    position: Dict[int, int] = {}
    for origin, hes in enumerate(outgoing):
        o = vertices[origin]

        def vector(he, o=o):
            d = vertices[he_origin[he ^ 1]]
            return d.x - o.x, d.y - o.y

        hes.sort(key=cmp_to_key(lambda a, b: _angle_cmp(vector(a), vector(b))))
        for k, he in enumerate(hes):
            position[he] = k

    he_next = [0] * len(he_origin)
    for he in range(len(he_origin)):
        twin = he ^ 1
        around = outgoing[he_origin[twin]]
        he_next[he] = around[(position[twin] - 1) % len(around)]

    he_face = [-2] * len(he_origin)
    faces: List[Face] = []
    outer_boundary: Tuple[Point, ...] = ()
    outer_count = 0
    for start in range(len(he_origin)):
        if he_face[start] != -2:
            continue
        cycle = []
        he = start
        while he_face[he] == -2:
            he_face[he] = -3
            cycle.append(he)
            he = he_next[he]
        boundary = tuple(vertices[he_origin[e]] for e in cycle)
        area = polygon_area(boundary)
        if area < 0:
            outer_count += 1
            outer_boundary = boundary
            for e in cycle:
                he_face[e] = -1
            continue
        face_id = len(faces)
        for e in cycle:
            he_face[e] = face_id
        bounded = all(he_line[e] != BOX_SIDE and not clip_box.on_boundary(vertices[he_origin[e]])
                      for e in cycle)
        faces.append(Face(face_id, boundary, tuple(cycle), centroid_of_vertices(boundary),
                          area, bounded))
    if outer_count != 1:
        raise InvariantViolationError(f"expected one outer face, found {outer_count}")

    neighbours: Dict[int, set] = {f.id: set() for f in faces}
    for he in range(0, len(he_origin), 2):
        f, g = he_face[he], he_face[he + 1]
        if f >= 0 and g >= 0:
            neighbours[f].add(g)
            neighbours[g].add(f)

    logger.debug("arrangement: %d lines, %d vertices, %d edges, %d faces",
                 len(lines), len(vertices), len(he_origin) // 2, len(faces))
    return Arrangement(
        lines=lines,
        box=clip_box,
        vertices=tuple(vertices),
        vertex_lines={p: frozenset(s) for p, s in vertex_lines.items()},
        he_origin=he_origin,
        he_line=he_line,
        he_next=he_next,
        he_face=he_face,
        faces=faces,
        adjacency={f: frozenset(g) for f, g in neighbours.items()},
        outer_boundary=outer_boundary,
    )


# ---------------- Depths ----------------

def _check_system_lines(arr: Arrangement, systems) -> None:
    known = set(arr.lines)
    for system in systems:
        for line in system.boundary_lines:
            if line not in known:
                raise ContractViolationError(
                    f"boundary line {line} of the system at {system.vertex} is not in the arrangement")


def face_depths_direct(arr: Arrangement, systems) -> List[int]:
    """Number of vertex wedge systems containing each face, one membership
    test per face and system.

    Faces are open cells that no boundary line crosses, so a face lies in a
    system's union exactly when its representative point does.
    """
    _check_system_lines(arr, systems)
    depths = []
    for face in arr.faces:
        rep = face.representative
        depth = sum(1 for system in systems if system.contains_point(rep))
        face.depth = depth
        depths.append(depth)
    return depths


def face_depths(arr: Arrangement, systems) -> List[int]:
    """Number of vertex wedge systems containing each face, by a walk over
    the dual graph.

    Membership is tested in full at one seed face only. Crossing an edge on
    line L can change membership only for the systems having L as a
    boundary line, so only those are retested in the neighbouring face.
    """
    _check_system_lines(arr, systems)
    if not arr.faces:
        return []
    line_index = {line: i for i, line in enumerate(arr.lines)}
    systems_on_line: Dict[int, List[int]] = {}
    for k, system in enumerate(systems):
        for line in system.boundary_lines:
            systems_on_line.setdefault(line_index[line], []).append(k)

    seed = arr.faces[0]
    members: List[Optional[List[bool]]] = [None] * len(arr.faces)
    members[seed.id] = [system.contains_point(seed.representative) for system in systems]
    queue = deque([seed.id])
    while queue:
        f = queue.popleft()
        for he in arr.faces[f].half_edges:
            g = arr.he_face[he ^ 1]
            if g < 0 or members[g] is not None:
                continue
            inside = list(members[f])
            rep = arr.faces[g].representative
            for k in systems_on_line.get(arr.he_line[he], ()):
                inside[k] = systems[k].contains_point(rep)
            members[g] = inside
            queue.append(g)

    if any(m is None for m in members):
        raise InvariantViolationError("dual graph of the arrangement is not connected")
    depths = []
    for face, inside in zip(arr.faces, members):
        face.depth = sum(inside)
        depths.append(face.depth)
    return depths
