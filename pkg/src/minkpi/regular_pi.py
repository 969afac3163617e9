"""Closed forms for the self-measured half-perimeter of regular polygons.

Six algebraically equivalent forms are kept side by side (a max over inner
products, a floor-index form, a piecewise trigonometric form, and variants in
terms of Beraha numbers, polygonal circle numbers, and the inscribed side
length), plus a nested-radical evaluation for power-of-two side counts. They
agree to near machine precision and cross-check the geometric measurement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameter

PI = math.pi


class FamilyKind(Enum):
    QUARTER_TURN = "quarter-turn"
    ODD_ASYMMETRIC = "odd-asymmetric"
    RADON_EVEN = "radon-even"


@dataclass(frozen=True)
class PiFamily:
    """Value range of the half-perimeter for one residue class of side counts."""

    kind: FamilyKind
    range_low: float
    range_high: float
    low_closed: bool
    high_closed: bool

    def contains(self, value: float, tol: float = 0.0) -> bool:
        lo_ok = value >= self.range_low - tol if self.low_closed else value > self.range_low - tol
        hi_ok = value <= self.range_high + tol if self.high_closed else value < self.range_high + tol
        return lo_ok and hi_ok


def _require_n(n: int) -> None:
    if n < 3:
        raise InvalidParameter("regular polygons need n >= 3 sides")


def classify_family(n: int) -> PiFamily:
    """Family of n by residue mod 4: (pi, 4] for 4m, (pi, 9/2) for odd, [3, pi) for 4m+2."""
    _require_n(n)
    if n % 4 == 0:
        return PiFamily(FamilyKind.QUARTER_TURN, PI, 4.0, False, True)
    if n % 2 == 1:
        return PiFamily(FamilyKind.ODD_ASYMMETRIC, PI, 4.5, False, False)
    return PiFamily(FamilyKind.RADON_EVEN, 3.0, PI, True, False)


def pi_n_max_form(n: int) -> float:
    """Half-perimeter as n/(2cos(pi/n)) times a maximum over cosine differences."""
    _require_n(n)
    a = PI / n
    best = max(math.cos(3 * a - 2 * m * a) - math.cos(a - 2 * m * a) for m in range(1, n + 1))
    return n / (2.0 * math.cos(a)) * best


def max_form_argmax(n: int) -> list[int]:
    """All indices m in 1..n attaining the max-form maximum (within 1e-12)."""
    _require_n(n)
    a = PI / n
    vals = [math.cos(3 * a - 2 * m * a) - math.cos(a - 2 * m * a) for m in range(1, n + 1)]
    top = max(vals)
    return [m for m, v in zip(range(1, n + 1), vals) if v >= top - 1e-12]


def subtended_sides(n: int) -> int:
    """Index of the side a side vector lands on: floor((n+5)/4)."""
    _require_n(n)
    return (n + 5) // 4


def pi_n_closed(n: int) -> float:
    """Floor-index closed form, valid for every n >= 3."""
    _require_n(n)
    a = PI / n
    k = (n + 1) // 4
    return n / (2.0 * math.cos(a)) * (math.cos(a * (2 * k - 1)) - math.cos(a * (2 * k + 1)))


def pi_n_piecewise(n: int) -> float:
    """Piecewise form: n tan(pi/n), times cos(pi/2n) for odd n, n sin(pi/n) for 4m+2."""
    _require_n(n)
    a = PI / n
    if n % 4 == 0:
        return n * math.tan(a)
    if n % 2 == 1:
        return n * math.tan(a) * math.cos(a / 2.0)
    return n * math.sin(a)


def beraha(n: int) -> float:
    """The n-th Beraha constant 2 + 2cos(2*pi/n)."""
    if n < 1:
        raise InvalidParameter("Beraha constants are defined for n >= 1")
    return 2.0 + 2.0 * math.cos(2.0 * PI / n)


def pi_n_beraha(n: int) -> float:
    """Half-perimeter written with Beraha constants."""
    _require_n(n)
    b = beraha(n)
    if n % 4 == 0:
        return n * math.sqrt((4.0 - b) / b)
    if n % 2 == 1:
        return n * math.sqrt(beraha(2 * n) * (4.0 - b) / (4.0 * b))
    return n * math.sqrt((4.0 - b) / 4.0)


def pi_n_circle(n: int) -> tuple[float, float]:
    """(circle number c_n, half-perimeter) with c_n = n sin(pi/n) cos(pi/n)."""
    _require_n(n)
    a = PI / n
    c = n * math.sin(a) * math.cos(a)
    cos2 = math.cos(a) ** 2
    if n % 4 == 0:
        return c, c / cos2
    if n % 2 == 1:
        return c, c * math.cos(a / 2.0) / cos2
    return c, c / math.cos(a)


def pi_n_side_relation(n: int) -> float:
    """Half-perimeter via the inscribed side length r_n = 2 sin(pi/n)."""
    _require_n(n)
    a = PI / n
    r = 2.0 * math.sin(a)
    if n % 4 == 0:
        return n * r / (2.0 * math.cos(a))
    if n % 2 == 1:
        return n * r * math.cos(a / 2.0) / (2.0 * math.cos(a))
    return n * r / 2.0


def viete_pi(m: int) -> float:
    """Nested-radical value 2^m sqrt(2 - R_{m-2}) / sqrt(2 + R_{m-2}) for n = 2^m sides.

    R_0 is the empty radical 0 and R_k = sqrt(2 + R_{k-1}). The numerator is
    evaluated through the equivalent quotient recurrence t_k = t_{k-1} / R_{k+1}
    (t_k = sqrt(2 - R_k)), which avoids the catastrophic cancellation of
    forming 2 - R_{m-2} directly once R_{m-2} approaches 2.
    """
    if m < 2:
        raise InvalidParameter("need m >= 2 (at least a square)")
    radicals = [0.0]
    for k in range(1, m):
        radicals.append(math.sqrt(2.0 + radicals[k - 1]))
    t = math.sqrt(2.0)  # t_0 = sqrt(2 - R_0)
    for k in range(1, m - 1):
        t /= radicals[k + 1]
    return (2.0**m) * t / radicals[m - 1]
