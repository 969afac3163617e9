"""Seeded generators for random axis-symmetric balls and polygons.

Everything is driven by ``random.Random`` so sweeps are reproducible from a
single integer seed. All generated shapes are mirror symmetric about the
vertical axis x = 0, which keeps the half-perimeter well defined once the
center is placed on that axis.
"""

from __future__ import annotations

import random

from .errors import DegenerateInput
from .gauge import Ball
from .geom2d import ConvexPolygon, Vec2, convex_hull


def random_symmetric_polygon(
    rng: random.Random, min_vertices: int = 8, max_vertices: int = 40
) -> ConvexPolygon:
    """Random convex polygon, mirror symmetric about the vertical axis."""
    while True:
        k = rng.randint(4, 20)
        pts = [Vec2(rng.uniform(0.05, 2.0), rng.uniform(-2.0, 2.0)) for _ in range(k)]
        if rng.random() < 0.5:
            pts.append(Vec2(0.0, rng.uniform(0.2, 2.5)))
        if rng.random() < 0.5:
            pts.append(Vec2(0.0, -rng.uniform(0.2, 2.5)))
        mirrored = [Vec2(-p.x, p.y) for p in pts]
        try:
            hull = convex_hull(pts + mirrored)
        except DegenerateInput:
            continue
        if min_vertices <= len(hull.vertices) <= max_vertices:
            return hull


def _axis_segment(poly: ConvexPolygon) -> tuple[float, float]:
    # intersection of the open polygon with the vertical axis, as a y-range
    ys: list[float] = []
    vs = poly.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        if a.x == 0.0:
            ys.append(a.y)
        if (a.x > 0.0) != (b.x > 0.0) and a.x != 0.0 and b.x != 0.0:
            t = a.x / (a.x - b.x)
            ys.append(a.y + t * (b.y - a.y))
    return min(ys), max(ys)


def random_symmetric_ball(
    rng: random.Random, min_vertices: int = 8, max_vertices: int = 40
) -> Ball:
    """Random axis-symmetric ball with its center placed randomly on the axis."""
    poly = random_symmetric_polygon(rng, min_vertices, max_vertices)
    lo, hi = _axis_segment(poly)
    f = rng.uniform(0.08, 0.92)
    return Ball(poly, Vec2(0.0, lo + f * (hi - lo)))


def random_ball(rng: random.Random, max_points: int = 12) -> Ball:
    """Random convex ball with no imposed symmetry, center strictly inside."""
    from .errors import CenterNotInterior

    while True:
        k = rng.randint(3, max_points)
        pts = [Vec2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)) for _ in range(k)]
        try:
            hull = convex_hull(pts)
        except DegenerateInput:
            continue
        weights = [rng.uniform(0.05, 1.0) for _ in hull.vertices]
        total = sum(weights)
        cx = sum(w * v.x for w, v in zip(weights, hull.vertices)) / total
        cy = sum(w * v.y for w, v in zip(weights, hull.vertices)) / total
        try:
            return Ball(hull, Vec2(cx, cy))
        except CenterNotInterior:
            continue
