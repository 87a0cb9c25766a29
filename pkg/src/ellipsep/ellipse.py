"""Minimal contractor and minimal separator for a filled ellipse.

The boundary arc between the North (top) and East (rightmost) cardinal points
is the graph of a monotone function in both directions:

* ``x1 = phi(q, x2)``, the larger root of ``f(q, (., x2)) = 0``;
* ``x2 = phi(swap(q), x1)`` where ``swap`` exchanges the roles of x1 and x2.

Contracting a box against that arc therefore only needs ``phi`` at the box
corners. The other three arcs reuse the same contractor through the plane
sign flips and their conjugate parameter symmetries.

All bounds that end up in a returned box are computed in outward-rounded
interval arithmetic, so the contractors never lose a point of the set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptyEllipse, InfeasibleOrdinate, NotAnEllipse
from .interval import Box, Interval, div, mul, sqr, sqrt_iv
from .quadric import QuadraticForm, apply_param_symmetry, eval_box, is_ellipse
from .symmetry import (QUADRANT_SYMMETRIES, SWAP_PARAMS, act_on_contractor,
                       choice_function)

Point = tuple[float, float]

_CLAMP_RTOL = 1e-12
_NONNEG = Interval(0.0, math.inf)


def _require_ellipse(q: QuadraticForm) -> None:
    if not is_ellipse(q):
        raise NotAnEllipse(
            f"not an ellipse: need q3 > 0 and 4*q3*q5 - q4^2 > 0, got q={q.coeffs}")


# ---------------------------------------------------------------------------
# Point versions of the closed forms
# ---------------------------------------------------------------------------

def phi(q: QuadraticForm, x2: float) -> float:
    """Abscissa of the right-hand boundary point on the line at height ``x2``."""
    _require_ellipse(q)
    a1 = q.q3
    b1 = q.q1 + q.q4 * x2
    c1 = q.q0 + q.q2 * x2 + q.q5 * x2 * x2
    delta = b1 * b1 - 4 * a1 * c1
    if delta < 0:
        scale = max(1.0, b1 * b1, abs(4 * a1 * c1))
        if delta < -_CLAMP_RTOL * scale:
            raise InfeasibleOrdinate(f"no boundary point at x2={x2} (discriminant {delta})")
        delta = 0.0
    return (-b1 + math.sqrt(delta)) / (2 * a1)


def _ordinate_quadratic(q: QuadraticForm) -> tuple[float, float, float]:
    # x2 admits a boundary point iff a2 x2² + b2 x2 + c2 <= 0
    a2 = 4 * q.q3 * q.q5 - q.q4 * q.q4
    b2 = 4 * q.q3 * q.q2 - 2 * q.q1 * q.q4
    c2 = 4 * q.q3 * q.q0 - q.q1 * q.q1
    return a2, b2, c2


def max_feasible(q: QuadraticForm) -> float:
    """Largest ``x2`` reached by the ellipse (ordinate of the North)."""
    _require_ellipse(q)
    a2, b2, c2 = _ordinate_quadratic(q)
    delta = b2 * b2 - 4 * a2 * c2
    if delta < 0:
        raise EmptyEllipse(f"quadratic form {q.coeffs} has no real zero")
    return (-b2 + math.sqrt(delta)) / (2 * a2)


def min_feasible(q: QuadraticForm) -> float:
    """Smallest ``x2`` reached by the ellipse (ordinate of the South)."""
    _require_ellipse(q)
    a2, b2, c2 = _ordinate_quadratic(q)
    delta = b2 * b2 - 4 * a2 * c2
    if delta < 0:
        raise EmptyEllipse(f"quadratic form {q.coeffs} has no real zero")
    return (-b2 - math.sqrt(delta)) / (2 * a2)


# ---------------------------------------------------------------------------
# Interval enclosures
# ---------------------------------------------------------------------------

def _phi_iv(q: QuadraticForm, t: Interval) -> Interval:
    # negative part of the discriminant clipped: callers only evaluate where
    # the true discriminant is >= 0, or patch the apex bound themselves
    a1 = Interval.point(q.q3)
    b1 = q.q1 + q.q4 * t
    c1 = q.q0 + q.q2 * t + q.q5 * sqr(t)
    delta = (sqr(b1) - 4.0 * mul(a1, c1)) & _NONNEG
    root = sqrt_iv(delta) if not delta.is_empty else Interval(0.0, 0.0)
    return div(root - b1, 2.0 * a1)


def _feasible_range_iv(q: QuadraticForm) -> tuple[Interval, Interval]:
    """Enclosures of the minimal and maximal ordinates."""
    q0, q1, q2, q3, q4, q5 = (Interval.point(c) for c in q.coeffs)
    a2 = 4.0 * q3 * q5 - sqr(q4)
    b2 = 4.0 * q3 * q2 - 2.0 * q1 * q4
    c2 = 4.0 * q3 * q0 - sqr(q1)
    delta = sqr(b2) - 4.0 * a2 * c2
    if delta.hi < 0:
        raise EmptyEllipse(f"quadratic form {q.coeffs} has no real zero")
    root = sqrt_iv(delta)
    den = 2.0 * a2
    return div(-b2 - root, den), div(root - b2, den)


def _apex_abscissa_iv(q: QuadraticForm, t: Interval) -> Interval:
    # where the discriminant vanishes the two roots merge at -b1 / (2 a1)
    return div(-(q.q1 + q.q4 * t), Interval.point(2.0 * q.q3))


@dataclass(frozen=True)
class CardinalPoints:
    north: Point
    east: Point
    south: Point
    west: Point


@dataclass(frozen=True)
class _CardinalEnclosure:
    north: tuple[Interval, Interval]
    east: tuple[Interval, Interval]
    south: tuple[Interval, Interval]
    west: tuple[Interval, Interval]


def _cardinal_enclosure(q: QuadraticForm) -> _CardinalEnclosure:
    sq = apply_param_symmetry(SWAP_PARAMS, q)
    s2, n2 = _feasible_range_iv(q)
    w1, e1 = _feasible_range_iv(sq)
    return _CardinalEnclosure(
        north=(_apex_abscissa_iv(q, n2), n2),
        east=(e1, _apex_abscissa_iv(sq, e1)),
        south=(_apex_abscissa_iv(q, s2), s2),
        west=(w1, _apex_abscissa_iv(sq, w1)),
    )


def cardinal_points(q: QuadraticForm) -> CardinalPoints:
    """North, East, South and West boundary points.

    The free coordinate of each point is the apex ``-b1 / (2 a1)`` of the
    line quadratic, which equals ``phi`` there but avoids the square root of
    a vanishing discriminant.
    """
    _require_ellipse(q)
    north = max_feasible(q)
    south = min_feasible(q)
    sq = apply_param_symmetry(SWAP_PARAMS, q)
    east = max_feasible(sq)
    west = min_feasible(sq)

    def apex(p: QuadraticForm, t: float) -> float:
        return -(p.q1 + p.q4 * t) / (2 * p.q3)

    return CardinalPoints(
        north=(apex(q, north), north),
        east=(east, apex(sq, east)),
        south=(apex(q, south), south),
        west=(west, apex(sq, west)),
    )


# ---------------------------------------------------------------------------
# Positive-arc contractor
# ---------------------------------------------------------------------------

class _PositiveArc:
    """Prepared contractor for the North-East arc of one quadratic form."""

    __slots__ = ("q", "sq", "north", "east", "hull")

    def __init__(self, q: QuadraticForm):
        _require_ellipse(q)
        self.q = q
        self.sq = apply_param_symmetry(SWAP_PARAMS, q)
        enc = _cardinal_enclosure(q)
        self.north = enc.north
        self.east = enc.east
        self.hull = Box([Interval(enc.north[0].lo, enc.east[0].hi),
                         Interval(enc.east[1].lo, enc.north[1].hi)])

    def __call__(self, x: Box) -> Box:
        b = x & self.hull
        if b.is_empty:
            return b
        b1, b2 = b
        (n1, n2), (e1, e2) = self.north, self.east
        # x1 = phi(q, x2) is non-increasing in x2 on the arc
        lo1 = n1.lo if b2.hi >= n2.lo else _phi_iv(self.q, Interval.point(b2.hi)).lo
        hi1 = e1.hi if b2.lo <= e2.hi else _phi_iv(self.q, Interval.point(b2.lo)).hi
        # x2 = phi(swap(q), x1) is non-increasing in x1 on the arc
        lo2 = e2.lo if b1.hi >= e1.lo else _phi_iv(self.sq, Interval.point(b1.hi)).lo
        hi2 = n2.hi if b1.lo <= n1.hi else _phi_iv(self.sq, Interval.point(b1.lo)).hi
        if lo1 > hi1 or lo2 > hi2:
            return Box.empty(2)
        return b & Box([Interval(lo1, hi1), Interval(lo2, hi2)])


def positive_quadrant_hull(q: QuadraticForm) -> Box:
    """Outward-rounded box spanned by the North and the East."""
    return _PositiveArc(q).hull


def contract_positive(q: QuadraticForm, x: Box) -> Box:
    """Smallest box (up to rounding) enclosing ``x`` ∩ North-East arc."""
    return _prepare(q).arcs[0](x)


# ---------------------------------------------------------------------------
# Boundary contractor and separator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SepResult:
    """``x_in`` keeps every point of the box not in the set; ``x_out`` keeps
    every point of the box in the set."""

    x_in: Box
    x_out: Box


class PreparedEllipse:
    """An ellipse with its four quadrant contractors built once."""

    def __init__(self, q: QuadraticForm):
        _require_ellipse(q)
        self.q = q
        self.arcs = []
        self.contractors = []
        for eps in QUADRANT_SYMMETRIES:
            arc = _PositiveArc(apply_param_symmetry(choice_function(eps), q))
            self.arcs.append(arc)
            self.contractors.append(act_on_contractor(eps, arc))

    def contract_boundary(self, x: Box) -> Box:
        if len(x) != 2:
            raise ValueError("ellipse contractors take 2-dimensional boxes")
        out = Box.empty(2)
        for c in self.contractors:
            out = out | c(x)
        return out

    def classify(self, x: Box) -> int:
        """Sign of ``f`` at the midpoint of ``x``: -1 in, +1 out, 0 unknown."""
        v = eval_box(self.q, Box.point(x.mid()))
        if v.hi <= 0:
            return -1
        if v.lo > 0:
            return 1
        return 0

    def separate(self, x: Box) -> SepResult:
        if x.is_empty:
            return SepResult(x, x)
        c = self.contract_boundary(x)
        if c.is_empty:
            s = self.classify(x)
            if s < 0:
                return SepResult(Box.empty(2), x)
            if s > 0:
                return SepResult(x, Box.empty(2))
            return SepResult(x, x)
        x_in = x_out = c
        for slab in box_difference(x, c):
            s = self.classify(slab)
            if s <= 0:
                x_out = x_out | slab
            if s >= 0:
                x_in = x_in | slab
        return SepResult(x_in, x_out)

    __call__ = separate


def box_difference(x: Box, c: Box) -> list[Box]:
    """Cover ``x`` minus the interior of ``c`` by non-overlapping slabs.

    Slabs come axis by axis, low side before high side; zero-width slabs
    are dropped.
    """
    c = x & c
    if c.is_empty:
        return [x]
    slabs = []
    rest = list(x)
    for i, (xi, ci) in enumerate(zip(x, c)):
        if xi.lo < ci.lo:
            slabs.append(Box(rest[:i] + [Interval(xi.lo, ci.lo)] + rest[i + 1:]))
        if ci.hi < xi.hi:
            slabs.append(Box(rest[:i] + [Interval(ci.hi, xi.hi)] + rest[i + 1:]))
        rest[i] = ci
    return slabs


@lru_cache(maxsize=256)
def _prepare(q: QuadraticForm) -> PreparedEllipse:
    return PreparedEllipse(q)


def prepare(q: QuadraticForm) -> PreparedEllipse:
    return _prepare(q)


def contract_boundary(q: QuadraticForm, x: Box) -> Box:
    """Hull of the four quadrant contractions; encloses ``x`` ∩ boundary."""
    return _prepare(q).contract_boundary(x)


def separate(q: QuadraticForm, x: Box) -> SepResult:
    return _prepare(q).separate(x)
