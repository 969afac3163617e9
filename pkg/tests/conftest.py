"""Shared independent oracles for the test suite.

These deliberately avoid the library's own algorithms: the gauge oracle works
by bisection on point containment, and the hull oracle by exhaustive support
tests, so they can arbitrate the fast implementations.
"""

from __future__ import annotations

import math

import pytest

from minkpi.geom2d import ConvexPolygon, Vec2


def gauge_by_bisection(ball, v: Vec2, iters: int = 200) -> float:
    """Gauge via binary search on 'center + s*v still inside the shape'."""
    if v.is_zero():
        return 0.0
    inside = ball.shape.contains
    lo, hi = 0.0, 1.0
    while inside(ball.center + v * hi, 0.0) and hi < 1e12:
        lo, hi = hi, hi * 2.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if inside(ball.center + v * mid, 0.0):
            lo = mid
        else:
            hi = mid
    return 1.0 / (0.5 * (lo + hi))


def brute_force_hull(points: list[Vec2]) -> list[Vec2]:
    """Hull by gift wrapping (counterclockwise), independent of the library."""
    start = min(points, key=lambda p: (p.y, p.x))
    hull = [start]
    while True:
        cur = hull[-1]
        cand = None
        for p in points:
            if (p - cur).norm() < 1e-12:
                continue
            if cand is None:
                cand = p
                continue
            turn = (cand - cur).cross(p - cur)
            if turn < -1e-12 or (abs(turn) <= 1e-12 and (p - cur).norm() > (cand - cur).norm()):
                cand = p
        if (cand - start).norm() < 1e-12:
            return hull
        hull.append(cand)
        if len(hull) > len(points) + 1:
            raise RuntimeError("gift wrapping failed to close")


def vertex_set(poly: ConvexPolygon) -> set[tuple[float, float]]:
    return {(round(v.x, 9), round(v.y, 9)) for v in poly.vertices}


@pytest.fixture
def equilateral():
    s = math.sqrt(3.0) / 2.0
    return ConvexPolygon([Vec2(0.0, 1.0), Vec2(-s, -0.5), Vec2(s, -0.5)])
