"""JSON documents read and written by the command line.

Coordinates are exact: integers or "num/den" strings on input, strings on
output. Floats are refused so no value is ever rounded on the way in.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from app.barrier import Barrier, validate_and_build
from app.errors import ParseError
from app.geom_core import Point, Segment

RATIONAL_TOKEN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


# ---------------- Rationals ----------------

def parse_rational(token, location: str = "value") -> Fraction:
    if isinstance(token, bool) or isinstance(token, float):
        raise ParseError(location, "coordinate must be an integer or a num/den string", token)
    if isinstance(token, int):
        return Fraction(token)
    if not isinstance(token, str):
        raise ParseError(location, "coordinate must be an integer or a num/den string", token)
    match = RATIONAL_TOKEN.match(token)
    if not match:
        raise ParseError(location, "malformed rational", token)
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ParseError(location, "zero denominator", token)
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_point(token, location: str = "point") -> Point:
    if isinstance(token, str):
        parts = token.split(",")
        if len(parts) != 2:
            raise ParseError(location, "point must look like x,y", token)
        token = parts
    if not isinstance(token, (list, tuple)) or len(token) != 2:
        raise ParseError(location, "point must be a pair of coordinates", token)
    return Point(parse_rational(token[0], f"{location}[0]"),
                 parse_rational(token[1], f"{location}[1]"))


def point_json(p: Point) -> List[str]:
    return [format_rational(p.x), format_rational(p.y)]


def segment_json(s: Segment) -> List[List[str]]:
    return [point_json(s.a), point_json(s.b)]


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------- Input ----------------

@dataclass(frozen=True)
class InputDocument:
    segments: Tuple[Segment, ...]

    def to_barrier(self) -> Barrier:
        return validate_and_build(list(self.segments))


def parse_input(text: str) -> InputDocument:
    data = _load(text)
    if not isinstance(data, dict) or "segments" not in data:
        raise ParseError("document", "expected an object with a 'segments' field")
    raw = data["segments"]
    if not isinstance(raw, list):
        raise ParseError("segments", "expected a list of segments")
    segments = []
    for index, item in enumerate(raw):
        location = f"segments[{index}]"
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(location, "segment must be a pair of points", item)
        segments.append(Segment(parse_point(item[0], f"{location}[0]"),
                                parse_point(item[1], f"{location}[1]")))
    return InputDocument(tuple(segments))


def serialize_input(doc: InputDocument) -> str:
    return _dump({"segments": [segment_json(s) for s in doc.segments]})


# ---------------- Output ----------------

@dataclass(frozen=True)
class RegionRecord:
    boundary: Tuple[Point, ...]
    area: Fraction


@dataclass
class OutputDocument:
    regions: List[RegionRecord]
    segments: List[Segment]
    isolated_points: List[Point]
    stats: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_result(cls, result) -> "OutputDocument":
        return cls(
            regions=[RegionRecord(tuple(r.boundary), r.area) for r in result.regions],
            segments=list(result.barrier_segments),
            isolated_points=list(result.isolated_points),
            stats=dict(result.stats),
        )


def serialize_output(doc: OutputDocument) -> str:
    return _dump({
        "regions": [
            {"boundary": [point_json(p) for p in r.boundary], "area": format_rational(r.area)}
            for r in doc.regions
        ],
        "segments": [segment_json(s) for s in doc.segments],
        "isolated_points": [point_json(p) for p in doc.isolated_points],
        "stats": doc.stats,
    })


def parse_output(text: str) -> OutputDocument:
    data = _load(text)
    if not isinstance(data, dict):
        raise ParseError("document", "expected an object")
    try:
        regions = [
            RegionRecord(
                tuple(parse_point(p, f"regions[{i}].boundary[{k}]") for k, p in enumerate(r["boundary"])),
                parse_rational(r["area"], f"regions[{i}].area"),
            )
            for i, r in enumerate(data["regions"])
        ]
        segments = [
            Segment(parse_point(s[0], f"segments[{i}][0]"), parse_point(s[1], f"segments[{i}][1]"))
            for i, s in enumerate(data["segments"])
        ]
        isolated = [parse_point(p, f"isolated_points[{i}]") for i, p in enumerate(data["isolated_points"])]
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError("document", f"missing or malformed field: {exc}")
    return OutputDocument(regions, segments, isolated, dict(data.get("stats", {})))
