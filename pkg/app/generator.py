"""Barrier generators: the gapped n-gon worst case and the isolated-point fixture."""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List, Optional

from app.errors import ValidationError
from app.geom_core import Point, Segment


def circle_point(t: Fraction) -> Point:
    """Rational point on the unit circle, t = tan(angle / 2)."""
    denominator = 1 + t * t
    return Point((1 - t * t) / denominator, 2 * t / denominator)


def circle_parameters(n: int, seed: Optional[int] = None) -> List[Fraction]:
    # angles -pi + 2*pi*(k + 1/2)/n keep every half-angle inside (-pi/2, pi/2)
    params = []
    for k in range(n):
        half_angle = (-math.pi + 2 * math.pi * (k + 0.5) / n) / 2
        params.append(Fraction(math.tan(half_angle)).limit_denominator(1000))
    if seed is not None:
        rng = random.Random(seed)
        params = [t + Fraction(rng.randint(-10, 10), 100000) for t in params]
    if any(a >= b for a, b in zip(params, params[1:])):
        raise ValidationError(None, f"n={n} is too large for distinct circle parameters")
    return params


def gapped_ngon(n: int, gap: Fraction, seed: Optional[int] = None) -> List[Segment]:
    """Edges of a convex n-gon on the unit circle, each shortened by `gap`
    (a fraction of its length) at both ends."""
    if n < 3:
        raise ValidationError(None, f"n must be at least 3, got {n}")
    gap = Fraction(gap)
    if not 0 < gap < Fraction(1, 2):
        raise ValidationError(None, f"gap must lie strictly between 0 and 1/2, got {gap}")
    corners = [circle_point(t) for t in circle_parameters(n, seed)]
    segments = []
    for k in range(n):
        p, q = corners[k], corners[(k + 1) % n]
        dx, dy = q.x - p.x, q.y - p.y
        segments.append(Segment(Point(p.x + gap * dx, p.y + gap * dy),
                                Point(q.x - gap * dx, q.y - gap * dy)))
    return segments


def fix_iso_segments() -> List[Segment]:
    """Three segments in a pinwheel around the origin.

    Seen from the origin their direction arcs tile the circle, each pair
    meeting at a direction through two collinear endpoints on opposite
    rays, so the origin is blocked while every other point is clear.
    """
    return [
        Segment(Point(2, 0), Point(2, 2)),
        Segment(Point(-2, -2), Point(2, -2)),
        Segment(Point(-2, 2), Point(-2, 0)),
    ]
