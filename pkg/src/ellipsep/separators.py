"""Separators, their combinators, and the forward-backward baseline.

A separator maps a box ``x`` to a pair ``(x_in, x_out)`` with both parts
inside ``x`` and ``x_in ∪ x_out = x``. Points of ``x`` outside ``x_out``
are proven outside the set; points outside ``x_in`` are proven inside.
"""

from __future__ import annotations

import math
from typing import Sequence

from .ellipse import SepResult, prepare
from .interval import Box, Interval, mul, mul_rev, sqr, sqr_rev
from .quadric import QuadraticForm

_LE_ZERO = Interval(-math.inf, 0.0)
_GE_ZERO = Interval(0.0, math.inf)


class Separator:
    label = "separator"

    def __call__(self, x: Box) -> SepResult:
        raise NotImplementedError

    def __invert__(self) -> Separator:
        return sep_complement(self)

    def __and__(self, other: Separator) -> Separator:
        return sep_intersect([self, other])

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label}>"


class EllipseSeparator(Separator):
    """Minimal separator for ``{x : f(q, x) <= 0}``."""

    def __init__(self, q: QuadraticForm, label: str | None = None):
        self.q = q
        self._ellipse = prepare(q)
        self.label = label or f"f{q.coeffs} <= 0"

    def __call__(self, x: Box) -> SepResult:
        return self._ellipse.separate(x)


class Complement(Separator):
    def __init__(self, inner: Separator):
        self.inner = inner
        self.label = f"not ({inner.label})"

    def __call__(self, x: Box) -> SepResult:
        r = self.inner(x)
        return SepResult(r.x_out, r.x_in)


class Intersection(Separator):
    def __init__(self, members: Sequence[Separator]):
        if not members:
            raise ValueError("intersection of an empty separator list")
        self.members = tuple(members)
        self.label = " and ".join(f"({m.label})" for m in self.members)

    def __call__(self, x: Box) -> SepResult:
        x_out = x
        x_in = Box.empty(len(x))
        for s in self.members:
            r = s(x)
            if len(r.x_in) != len(x):
                raise ValueError("separator dimension mismatch")
            x_out = x_out & r.x_out
            x_in = x_in | r.x_in
        return SepResult(x_in & x, x_out)


class FwdBwdSeparator(Separator):
    """Separator built from two forward-backward contractions of ``f``."""

    def __init__(self, q: QuadraticForm, fixpoint: bool = False):
        self.q = q
        self.fixpoint = fixpoint
        self.label = f"fwdbwd f{q.coeffs} <= 0"

    def __call__(self, x: Box) -> SepResult:
        x_out = fwd_bwd_contract(self.q, _LE_ZERO, x, fixpoint=self.fixpoint)
        x_in = fwd_bwd_contract(self.q, _GE_ZERO, x, fixpoint=self.fixpoint)
        return SepResult(x_in, x_out)


def sep_from_inequality(q: QuadraticForm) -> Separator:
    return EllipseSeparator(q)


def sep_complement(s: Separator) -> Separator:
    if isinstance(s, Complement):
        return s.inner
    return Complement(s)


def sep_intersect(members: Sequence[Separator]) -> Separator:
    return Intersection(members)


def _fwd_bwd_once(q: QuadraticForm, bound: Interval, x: Box) -> Box:
    x1, x2 = x
    q0, q1, q2, q3, q4, q5 = (Interval.point(c) for c in q.coeffs)

    # forward: ((q0 + q1 x1) + q2 x2) + ((q3 x1² + q4 (x1 x2)) + q5 x2²)
    t1 = mul(q1, x1)
    l1 = q0 + t1
    t2 = mul(q2, x2)
    lin = l1 + t2
    s1 = sqr(x1)
    u1 = mul(q3, s1)
    p = mul(x1, x2)
    u2 = mul(q4, p)
    m1 = u1 + u2
    s2 = sqr(x2)
    u3 = mul(q5, s2)
    quad = m1 + u3
    f = (lin + quad) & bound
    if f.is_empty:
        return Box.empty(2)

    # backward
    lin = lin & (f - quad)
    quad = quad & (f - lin)
    m1 = m1 & (quad - u3)
    u3 = u3 & (quad - m1)
    s2 = mul_rev(u3, q5, s2)
    x2 = sqr_rev(s2, x2)
    u1 = u1 & (m1 - u2)
    u2 = u2 & (m1 - u1)
    p = mul_rev(u2, q4, p)
    x1 = mul_rev(p, x2, x1)
    x2 = mul_rev(p, x1, x2)
    s1 = mul_rev(u1, q3, s1)
    x1 = sqr_rev(s1, x1)
    l1 = l1 & (lin - t2)
    t2 = t2 & (lin - l1)
    x2 = mul_rev(t2, q2, x2)
    t1 = t1 & (l1 - q0)
    x1 = mul_rev(t1, q1, x1)
    return Box([x1, x2])


def fwd_bwd_contract(q: QuadraticForm, bound: Interval, x: Box,
                     fixpoint: bool = False, max_iter: int = 100) -> Box:
    """Contract ``x`` against ``f(q, x) ∈ bound`` by one forward-backward
    sweep over the expression tree (or sweeps until nothing changes)."""
    if len(x) != 2:
        raise ValueError("fwd_bwd_contract takes 2-dimensional boxes")
    if x.is_empty:
        return x
    y = _fwd_bwd_once(q, bound, x)
    if fixpoint:
        for _ in range(max_iter):
            if y.is_empty or y == x:
                break
            x, y = y, _fwd_bwd_once(q, bound, y)
    return y
