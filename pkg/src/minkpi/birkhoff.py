"""Birkhoff orthogonality and the Radon test for centrally symmetric polygonal norms.

y is Birkhoff orthogonal to x when the whole line x + t*y stays outside the
open ball of radius gauge(x), i.e. the line supports that ball at x. For a
polygonal gauge the map t -> gauge(x + t*y) is piecewise linear and convex
with breakpoints where x + t*y crosses a vertex direction, so the minimum is
found exactly. A norm is Radon when the relation is symmetric; the test
sweeps boundary points and checks every supporting direction both ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameter, NotSymmetricBall, ZeroVector
from .gauge import Ball, _gauge_xy, gauge, is_centrally_symmetric
from .geom2d import Vec2


@dataclass(frozen=True)
class OrthoPair:
    """One tested pair: forward means y orthogonal to x, backward the reverse."""

    x: Vec2
    y: Vec2
    forward: bool
    backward: bool


def _require_norm(ball: Ball, tol: float) -> None:
    if not is_centrally_symmetric(ball, max(tol, 1e-9)):
        raise NotSymmetricBall(
            "Birkhoff orthogonality needs a norm: the ball must be centrally symmetric"
        )


def _line_min_gauge(ball: Ball, x: Vec2, y: Vec2) -> float:
    # exact minimum of the convex piecewise-linear t -> gauge(x + t*y):
    # it is attained where x + t*y is parallel to some vertex direction
    best = gauge(ball, x)
    for wx, wy in ball._rel:
        denom = y.x * wy - y.y * wx
        if denom == 0.0:
            continue
        t = -(x.x * wy - x.y * wx) / denom
        g = _gauge_xy(ball, x.x + t * y.x, x.y + t * y.y)
        if g < best:
            best = g
    return best


def birkhoff_orthogonal(ball: Ball, x: Vec2, y: Vec2, tol: float = 1e-9) -> bool:
    """True when gauge(x + t*y) >= gauge(x) for every real t (within ``tol``)."""
    _require_norm(ball, tol)
    if x.is_zero() or y.is_zero():
        raise ZeroVector("Birkhoff orthogonality needs nonzero vectors")
    return _line_min_gauge(ball, x, y) >= gauge(ball, x) - tol


def _boundary_samples(ball: Ball, directions: int) -> list[tuple[Vec2, bool, int]]:
    # (point relative to center, is_vertex, edge index); vertices always included
    rel = [Vec2(x, y) for x, y in ball._rel]
    n = len(rel)
    per_edge = max(1, -(-directions // n))  # ceil
    out: list[tuple[Vec2, bool, int]] = []
    for i in range(n):
        a, b = rel[i], rel[(i + 1) % n]
        out.append((a, True, i))
        for j in range(1, per_edge):
            f = j / per_edge
            out.append((a + (b - a) * f, False, i))
    return out


def _supporting_directions(ball: Ball, sample: tuple[Vec2, bool, int]) -> list[Vec2]:
    # edge-interior point: the single edge direction; vertex: the closed cone
    # between the adjacent edge directions, represented by its two extreme
    # rays and the angular bisector
    rel = [Vec2(x, y) for x, y in ball._rel]
    n = len(rel)
    p, is_vertex, i = sample
    e_here = (rel[(i + 1) % n] - rel[i]).normalized()
    if not is_vertex:
        return [e_here]
    e_prev = (rel[i] - rel[i - 1]).normalized()
    return [e_prev, e_here, (e_prev + e_here).normalized()]


def radon_witness(
    ball: Ball, directions: int = 0, tol: float = 1e-9
) -> Optional[OrthoPair]:
    """A boundary pair violating symmetry of the orthogonality relation, if any.

    Sweeps boundary points (default 8 per edge), enumerates the supporting
    directions at each, and returns the first pair where y is orthogonal to x
    but x is not orthogonal to y. ``None`` means no violation was found.
    """
    _require_norm(ball, tol)
    n = len(ball._rel)
    if directions == 0:
        directions = 8 * n
    if directions < 8:
        raise InvalidParameter("need at least 8 sweep directions")
    for sample in _boundary_samples(ball, directions):
        x = sample[0]
        for y in _supporting_directions(ball, sample):
            backward = _line_min_gauge(ball, y, x) >= gauge(ball, y) - tol
            if not backward:
                return OrthoPair(x=x, y=y, forward=True, backward=False)
    return None


def is_radon(ball: Ball, directions: int = 0, tol: float = 1e-9) -> bool:
    """True when Birkhoff orthogonality is symmetric on the sampled boundary."""
    return radon_witness(ball, directions, tol) is None
