"""The offset gauge: measure vectors against a convex polygon from an interior center.

A ``Ball`` is a convex polygon together with a chosen interior point. The
gauge of a vector v is 1/s, where s is the largest scalar such that
center + s*v still lies in the polygon. With an off-center choice the gauge
of v and of -v differ, which is the whole point: the resulting function is
positively homogeneous and subadditive but not symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CenterNotInterior
from .geom2d import (
    ALG_TOL,
    ConvexPolygon,
    Vec2,
    convex_hull,
    intersect_convex,
    negate,
    vertex_sets_equal,
)


@dataclass(frozen=True)
class Ball:
    """Unit ball of one asymmetric gauge: a convex shape plus an interior center.

    Construction fails with ``CenterNotInterior`` unless the center keeps a
    positive distance (at least 1e-12) from every edge line. Instances are
    immutable and safe to share between threads.
    """

    shape: ConvexPolygon
    center: Vec2

    def __post_init__(self) -> None:
        c = self.center
        for a, b in self.shape.edges():
            e = b - a
            if e.cross(c - a) / e.norm() < ALG_TOL:
                raise CenterNotInterior(
                    f"center ({c.x}, {c.y}) is not strictly inside the shape"
                )
        rel = tuple((v.x - c.x, v.y - c.y) for v in self.shape.vertices)
        object.__setattr__(self, "_rel", rel)

    def translated(self, v: Vec2) -> "Ball":
        return Ball(self.shape.translated(v), self.center + v)

    def scaled(self, s: float) -> "Ball":
        """Scale shape and center together about the origin."""
        return Ball(self.shape.scaled(s), self.center * s)

    def to_dict(self) -> dict:
        """JSON fixture form: {"vertices": [[x, y], ...], "center": [x, y]}."""
        return {"vertices": self.shape.to_pairs(), "center": [self.center.x, self.center.y]}

    @staticmethod
    def from_dict(data: dict) -> "Ball":
        shape = ConvexPolygon.from_pairs(data["vertices"])
        cx, cy = data["center"]
        return Ball(shape, Vec2(float(cx), float(cy)))


def validate_ball(shape: ConvexPolygon | Sequence[Sequence[float]], center: Vec2) -> Ball:
    """Build a ``Ball`` after checking convexity and strict interiority.

    Raises ``NotConvex`` for a bad vertex loop and ``CenterNotInterior`` for a
    center on or outside the boundary.
    """
    if not isinstance(shape, ConvexPolygon):
        shape = ConvexPolygon.from_pairs(shape)
    return Ball(shape, center)


def _gauge_xy(ball: Ball, vx: float, vy: float) -> float:
    # Walk the edge fan around the center: direction v falls in exactly one
    # half-open cone [w_i, w_{i+1}); the exit scale comes from that edge line.
    if vx == 0.0 and vy == 0.0:
        return 0.0
    rel = ball._rel
    n = len(rel)
    w0x, w0y = rel[0]
    c_prev = w0x * vy - w0y * vx  # cross(w_i, v)
    for i in range(n):
        w1x, w1y = rel[(i + 1) % n]
        c_next = w1x * vy - w1y * vx
        # cross(w_i, v) >= 0 and cross(v, w_{i+1}) > 0
        if c_prev >= 0.0 and c_next < 0.0:
            ex, ey = w1x - w0x, w1y - w0y
            return (vx * ey - vy * ex) / (w0x * w1y - w0y * w1x)
        w0x, w0y, c_prev = w1x, w1y, c_next
    raise RuntimeError("gauge cone walk failed; ball invariant violated")


def gauge(ball: Ball, v: Vec2) -> float:
    """Gauge of ``v`` for ``ball``: 0 for the zero vector, else 1/s with s the
    largest scalar keeping center + s*v inside the shape."""
    return _gauge_xy(ball, v.x, v.y)


def boundary_point(ball: Ball, v: Vec2) -> Vec2:
    """Point where the ray from the center along ``v`` leaves the shape."""
    g = gauge(ball, v)
    return ball.center + v * (1.0 / g)


def symmetrize_intersection(ball: Ball) -> Ball:
    """Ball of the symmetric norm with unit ball B intersected with -B (about the center).

    The result is the largest centrally symmetric ball inside the original, so
    its gauge dominates both directed gauges of the original.
    """
    rel = ConvexPolygon([v - ball.center for v in ball.shape.vertices])
    core = intersect_convex(rel, negate(rel))
    return Ball(core.translated(ball.center), ball.center)


def symmetrize_hull(ball: Ball) -> Ball:
    """Ball of the symmetric norm with unit ball conv(B union -B) about the center."""
    rel = [v - ball.center for v in ball.shape.vertices]
    hull = convex_hull(rel + [-v for v in rel])
    return Ball(hull.translated(ball.center), ball.center)


def is_centrally_symmetric(ball: Ball, tol: float = 1e-9) -> bool:
    """True when the shape equals its point reflection about the center."""
    rel = [v - ball.center for v in ball.shape.vertices]
    return vertex_sets_equal(rel, [-v for v in rel], tol)
