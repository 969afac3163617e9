"""Birkhoff orthogonality and the Radon property of polygonal norms."""

import math
import random

import pytest

from minkpi.birkhoff import birkhoff_orthogonal, is_radon, radon_witness
from minkpi.errors import InvalidParameter, NotSymmetricBall, ZeroVector
from minkpi.gauge import Ball, gauge
from minkpi.geom2d import ConvexPolygon, Vec2, regular_polygon

SQUARE = Ball(ConvexPolygon([Vec2(-1, -1), Vec2(1, -1), Vec2(1, 1), Vec2(-1, 1)]), Vec2(0, 0))


def test_square_axis_pair_is_orthogonal():
    assert birkhoff_orthogonal(SQUARE, Vec2(1, 0), Vec2(0, 1))
    assert birkhoff_orthogonal(SQUARE, Vec2(0, 1), Vec2(1, 0))


def test_square_edge_point_asymmetry():
    # the vertical line supports the right edge at (1, 0.5), but the reversed
    # relation fails: t = -0.5 drags (0, 1) to gauge 0.75 < 1
    x, y = Vec2(1, 0.5), Vec2(0, 1)
    assert birkhoff_orthogonal(SQUARE, x, y)
    assert not birkhoff_orthogonal(SQUARE, y, x)
    assert gauge(SQUARE, y + x * -0.5) == pytest.approx(0.75, abs=1e-12)


def test_hexagon_edge_midpoints_symmetric():
    ball = Ball(regular_polygon(6, 1.0, 0.0), Vec2(0, 0))
    vs = ball.shape.vertices
    for i in range(6):
        mid = (vs[i] + vs[(i + 1) % 6]) * 0.5
        edge = vs[(i + 1) % 6] - vs[i]
        assert birkhoff_orthogonal(ball, mid, edge)
        assert birkhoff_orthogonal(ball, edge, mid)


def test_rejects_asymmetric_ball_and_zero_vectors(equilateral):
    tri = Ball(equilateral, Vec2(0, 0))
    with pytest.raises(NotSymmetricBall):
        birkhoff_orthogonal(tri, Vec2(1, 0), Vec2(0, 1))
    with pytest.raises(NotSymmetricBall):
        is_radon(tri)
    with pytest.raises(ZeroVector):
        birkhoff_orthogonal(SQUARE, Vec2(0, 0), Vec2(0, 1))
    with pytest.raises(InvalidParameter):
        is_radon(SQUARE, directions=4)


def test_radon_small_cases():
    assert is_radon(Ball(regular_polygon(6, 1.0, 0.0), Vec2(0, 0)))
    assert is_radon(Ball(regular_polygon(10, 1.0, 0.0), Vec2(0, 0)))
    assert not is_radon(SQUARE)


def test_square_witness_certifies():
    witness = radon_witness(SQUARE)
    assert witness is not None
    assert witness.forward and not witness.backward
    assert birkhoff_orthogonal(SQUARE, witness.x, witness.y)
    assert not birkhoff_orthogonal(SQUARE, witness.y, witness.x)


@pytest.mark.parametrize("n", range(4, 31))
def test_radon_classification_even_and_odd(n):
    ball = Ball(regular_polygon(n, 1.0, 0.0), Vec2(0, 0))
    if n % 2 == 1:
        with pytest.raises(NotSymmetricBall):
            is_radon(ball)
    else:
        assert is_radon(ball) == (n % 4 == 2)


def test_vertex_wedge_of_radon_polygons():
    for n in (6, 10):
        ball = Ball(regular_polygon(n, 1.0, 0.0), Vec2(0, 0))
        vs = ball.shape.vertices
        e_prev = (vs[0] - vs[-1]).normalized()
        e_next = (vs[1] - vs[0]).normalized()
        wedge = math.acos(max(-1.0, min(1.0, e_prev.dot(e_next))))
        assert wedge == pytest.approx(2.0 * math.pi / n, abs=1e-12)
        # directions inside the closed cone support the vertex, outside do not
        inside = (e_prev + e_next).normalized()
        assert birkhoff_orthogonal(ball, vs[0], inside)
        ang = math.atan2(e_prev.y, e_prev.x) - 0.15
        outside = Vec2(math.cos(ang), math.sin(ang))
        assert not birkhoff_orthogonal(ball, vs[0], outside)


def test_orthogonality_scale_invariant():
    rng = random.Random(53)
    for _ in range(100):
        x = Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2))
        y = Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if x.is_zero() or y.is_zero():
            continue
        base = birkhoff_orthogonal(SQUARE, x, y)
        assert base == birkhoff_orthogonal(SQUARE, x * rng.uniform(0.1, 8.0), y * rng.uniform(0.1, 8.0))


def test_near_disc_matches_euclidean_orthogonality():
    disc = Ball(regular_polygon(64, 1.0, 0.0), Vec2(0, 0))
    step = 2.0 * math.pi / 64.0
    for k in range(12):
        ang = 0.11 + 0.5 * k
        x = Vec2(math.cos(ang), math.sin(ang))
        assert birkhoff_orthogonal(disc, x, x.perp(), tol=2e-3)
        skew_ang = ang + math.pi / 2.0 + 2.5 * step
        assert not birkhoff_orthogonal(disc, x, Vec2(math.cos(skew_ang), math.sin(skew_ang)), tol=1e-4)
