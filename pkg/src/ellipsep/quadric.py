"""Quadratic forms in the plane and ellipses given by foci.

The form is ``f(q, x) = q0 + q1 x1 + q2 x2 + q3 x1² + q4 x1 x2 + q5 x2²``;
the filled ellipse is ``{x : f(q, x) <= 0}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateEllipse
from .interval import Box, Interval, EMPTY, mul, sqr
from .symmetry import SignedPerm, apply_to_point

Point = tuple[float, float]


@dataclass(frozen=True)
class QuadraticForm:
    q0: float
    q1: float
    q2: float
    q3: float
    q4: float
    q5: float

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3", "q4", "q5"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"coefficient {name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, q: Sequence[float]) -> QuadraticForm:
        if len(q) != 6:
            raise ValueError(f"expected 6 coefficients, got {len(q)}")
        return cls(*q)

    @property
    def coeffs(self) -> tuple[float, float, float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3, self.q4, self.q5)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x: Sequence[float]) -> float:
        return eval_point(self, x)

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coeffs)


def eval_point(q: QuadraticForm, x: Sequence[float]) -> float:
    x1, x2 = x
    return q.q0 + q.q1 * x1 + q.q2 * x2 + q.q3 * x1 * x1 + q.q4 * x1 * x2 + q.q5 * x2 * x2


def eval_box(q: QuadraticForm, b: Box) -> Interval:
    """Natural interval extension of ``f`` over ``b`` (outward rounded)."""
    if len(b) != 2:
        raise ValueError("quadratic form takes 2-dimensional boxes")
    if b.is_empty:
        return EMPTY
    x1, x2 = b
    lin = Interval.point(q.q0) + q.q1 * x1 + q.q2 * x2
    quad = q.q3 * sqr(x1) + q.q4 * mul(x1, x2) + q.q5 * sqr(x2)
    return lin + quad


def is_ellipse(q: QuadraticForm) -> bool:
    """Positive-definite quadratic part: ``q3 > 0`` and ``4 q3 q5 - q4² > 0``."""
    return q.q3 > 0 and 4 * q.q3 * q.q5 - q.q4 * q.q4 > 0


def apply_param_symmetry(s: SignedPerm, q: QuadraticForm) -> QuadraticForm:
    if len(s) != 6:
        raise ValueError("parameter symmetries act on 6 coefficients")
    return QuadraticForm(*apply_to_point(s, q.coeffs))


@dataclass(frozen=True)
class Foci:
    """Points whose distances to ``a`` and ``b`` sum to at most ``ell``."""

    a: Point
    b: Point
    ell: float

    @property
    def focal_distance(self) -> float:
        return math.dist(self.a, self.b)

    def distance_sum(self, x: Sequence[float]) -> float:
        return math.dist(x, self.a) + math.dist(x, self.b)


def from_foci(f: Foci) -> QuadraticForm:
    """Coefficients of ``4|x-a|²|x-b|² - (ℓ² - |x-a|² - |x-b|²)²``.

    The quartic terms cancel, leaving a quadratic form that is negative
    strictly inside the ellipse.
    """
    if not f.ell > f.focal_distance:
        raise DegenerateEllipse(
            f"distance sum {f.ell} must exceed the focal distance {f.focal_distance}")
    a1, a2 = (float(v) for v in f.a)
    b1, b2 = (float(v) for v in f.b)
    l = float(f.ell)
    q0 = (-a1**4 - 2*a1**2*a2**2 + 2*a1**2*b1**2 + 2*a1**2*b2**2 + 2*a1**2*l**2
          - a2**4 + 2*a2**2*b1**2 + 2*a2**2*b2**2
          + 2*a2**2*l**2 - b1**4 - 2*b1**2*b2**2 + 2*b1**2*l**2 - b2**4 + 2*b2**2*l**2 - l**4)
    q1 = (4*a1**3 - 4*a1**2*b1 + 4*a1*a2**2 - 4*a1*b1**2 - 4*a1*b2**2
          - 4*a1*l**2 - 4*a2**2*b1 + 4*b1**3 + 4*b1*b2**2 - 4*b1*l**2)
    q2 = (4*a1**2*a2 - 4*a1**2*b2 + 4*a2**3 - 4*a2**2*b2 - 4*a2*b1**2
          - 4*a2*b2**2 - 4*a2*l**2 + 4*b1**2*b2 + 4*b2**3 - 4*b2*l**2)
    q3 = -4*a1**2 + 8*a1*b1 - 4*b1**2 + 4*l**2
    q4 = -8*a1*a2 + 8*a1*b2 + 8*a2*b1 - 8*b1*b2
    q5 = -4*a2**2 + 8*a2*b2 - 4*b2**2 + 4*l**2
    q = QuadraticForm(q0, q1, q2, q3, q4, q5)
    centre = (0.5 * (a1 + b1), 0.5 * (a2 + b2))
    if not eval_point(q, centre) <= 0:
        raise ArithmeticError("foci coefficients have the wrong orientation at the centre")
    return q
