"""SVG pictures of a barrier and its coverage.

This is the only lossy surface: coordinates are rendered as floats and
the isolated-point marker radius is a display size, not a geometric one.
"""
from __future__ import annotations

from typing import Iterable, List

from app import settings
from app.geom_core import Point

SVG_NS = "http://www.w3.org/2000/svg"
PADDING = 20

STYLES = {
    "region": {"fill": "#9ecae1", "fill_opacity": 0.8, "stroke": "#3182bd", "stroke_width": 1},
    "segment": {"stroke": "#252525", "stroke_width": 2, "stroke_linecap": "round"},
    "isolated": {"fill": "#e6550d", "stroke": "none"},
}


def _demangle(key: str) -> str:
    return key.replace("_", "-")


def _number(value) -> str:
    text = f"{float(value):.6f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def _props(props: dict) -> str:
    return " ".join(
        f'{_demangle(k)}="{_number(v) if isinstance(v, (int, float)) else v}"'
        for k, v in props.items()
    )


class _Frame:
    """Maps plane coordinates onto the canvas, flipping the y axis."""

    def __init__(self, points: Iterable[Point], size: int):
        points = list(points) or [Point(0, 0)]
        self.xmin = min(p.x for p in points)
        self.ymax = max(p.y for p in points)
        span = max(max(p.x for p in points) - self.xmin, self.ymax - min(p.y for p in points), 1)
        self.scale = (size - 2 * PADDING) / float(span)
        self.size = size

    def __call__(self, p: Point):
        return (PADDING + float(p.x - self.xmin) * self.scale,
                PADDING + float(self.ymax - p.y) * self.scale)


def render_svg(result, size: int = None, marker_radius: int = None) -> str:
    size = size or settings.SVG_SIZE
    marker_radius = marker_radius or settings.SVG_MARKER_RADIUS
    points: List[Point] = [p for s in result.barrier_segments for p in (s.a, s.b)]
    points += list(result.isolated_points)
    frame = _Frame(points, size)

    body = []
    for region in result.regions:
        coords = " ".join(f"{_number(x)},{_number(y)}" for x, y in map(frame, region.boundary))
        body.append(f'<polygon points="{coords}" {_props(STYLES["region"])}/>')
    for s in result.barrier_segments:
        (x1, y1), (x2, y2) = frame(s.a), frame(s.b)
        props = dict(x1=x1, y1=y1, x2=x2, y2=y2, **STYLES["segment"])
        body.append(f"<line {_props(props)}/>")
    for p in result.isolated_points:
        cx, cy = frame(p)
        props = dict(cx=cx, cy=cy, r=marker_radius, **STYLES["isolated"])
        body.append(f"<circle {_props(props)}/>")

    header = f'<svg xmlns="{SVG_NS}" width="{size}" height="{size}" viewBox="0 0 {size} {size}">'
    return "\n".join([header, *("  " + line for line in body), "</svg>"]) + "\n"
