"""Outward-rounded interval arithmetic and axis-aligned boxes.

Endpoints are binary64 floats. Python only offers round-to-nearest, so every
endpoint operation is followed by an exactness check built on error-free
transformations (TwoSum, Dekker's TwoProduct). When the rounded result lies
on the wrong side of the exact value it is moved one ulp outward; exact
results are kept as is. When the check cannot be performed (overflow,
underflow) the endpoint is stepped outward unconditionally.

The empty interval is a single normalized state, ``Interval.empty()``. A Box
with any empty component is normalized to the all-empty box of its dimension.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Interval",
    "Box",
    "EMPTY",
    "ENTIRE",
    "arith",
    "add",
    "sub",
    "mul",
    "neg",
    "sqr",
    "div",
    "sqrt_iv",
    "intersect",
    "hull",
    "bisect",
]

INF = math.inf
MAXF = sys.float_info.max
_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitter for binary64
_SAFE_BIG = 1e290
_SAFE_TINY = 1e-250  # keeps the low-order products of TwoProduct normal


# ---------------------------------------------------------------------------
# Directed-rounding helpers
# ---------------------------------------------------------------------------

def _down(x: float) -> float:
    return math.nextafter(x, -INF)


def _up(x: float) -> float:
    return math.nextafter(x, INF)


def _two_sum_err(a: float, b: float, s: float) -> float:
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def _split(a: float) -> tuple[float, float]:
    c = _SPLIT * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod_err(a: float, b: float, p: float) -> float | None:
    """Exact ``a*b - p`` for ``p = fl(a*b)``, or None if it cannot be certified."""
    if not (abs(a) < _SAFE_BIG and abs(b) < _SAFE_BIG):
        return None
    if p == 0.0 or abs(p) < _SAFE_TINY:
        return None
    ah, al = _split(a)
    bh, bl = _split(b)
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _add_lo(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        if s > 0 and math.isfinite(a) and math.isfinite(b):
            return MAXF
        return s
    return s if _two_sum_err(a, b, s) >= 0 else _down(s)


def _add_hi(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        if s < 0 and math.isfinite(a) and math.isfinite(b):
            return -MAXF
        return s
    return s if _two_sum_err(a, b, s) <= 0 else _up(s)


def _mul_lo(a: float, b: float) -> float:
    # 0 * inf counts as 0: endpoint products of closed real sets
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if p > 0 and math.isfinite(a) and math.isfinite(b):
            return MAXF
        return p
    e = _two_prod_err(a, b, p)
    if e is None:
        return _down(p)
    return p if e >= 0 else _down(p)


def _mul_hi(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if p < 0 and math.isfinite(a) and math.isfinite(b):
            return -MAXF
        return p
    e = _two_prod_err(a, b, p)
    if e is None:
        return _up(p)
    return p if e <= 0 else _up(p)


def _div_sign(a: float, b: float, q: float) -> int | None:
    """Sign of ``a/b - q`` (exact), or None when it cannot be certified."""
    p = q * b
    e = _two_prod_err(q, b, p)
    if e is None:
        return None
    # a - p is exact (Sterbenz) when p is within a factor 2 of a
    if not (0.5 * abs(p) <= abs(a) <= 2.0 * abs(p)) or (a > 0) != (p > 0):
        return None
    r = (a - p) - e
    if r == 0.0:
        return 0
    return 1 if (r > 0) == (b > 0) else -1


def _div_lo(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if math.isinf(q):
        return MAXF if q > 0 else q
    sgn = _div_sign(a, b, q)
    if sgn is None:
        return _down(q)
    return q if sgn >= 0 else _down(q)


def _div_hi(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if math.isinf(q):
        return -MAXF if q < 0 else q
    sgn = _div_sign(a, b, q)
    if sgn is None:
        return _up(q)
    return q if sgn <= 0 else _up(q)


def _sqrt_bounds(x: float) -> tuple[float, float]:
    """Enclosure of sqrt(x) for x >= 0."""
    if x == 0.0:
        return 0.0, 0.0
    if math.isinf(x):
        return MAXF, INF
    s = math.sqrt(x)
    p = s * s
    e = _two_prod_err(s, s, p)
    if e is None:
        return max(0.0, _down(s)), _up(s)
    d = (p - x) + e  # sign of s*s - x
    if d == 0.0:
        return s, s
    if d > 0:
        return max(0.0, _down(s)), s
    return s, _up(s)


# ---------------------------------------------------------------------------
# Interval
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Interval:
    """Closed real interval ``[lo, hi]``; endpoints may be infinite.

    >>> Interval(1, 2) + Interval(3, 4)
    Interval(4.0, 6.0)
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi and not (lo == INF and hi == -INF):
            raise ValueError(f"invalid interval [{lo}, {hi}]; use Interval.empty()")
        if lo == INF or hi == -INF:
            if not (lo == INF and hi == -INF):
                raise ValueError("an interval cannot be a single infinite point")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    # canonical empty: the only instance with lo > hi
    @staticmethod
    def empty() -> Interval:
        return EMPTY

    @staticmethod
    def point(x: float) -> Interval:
        return Interval(x, x)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    @property
    def width(self) -> float:
        if self.is_empty:
            return 0.0
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        if self.is_empty:
            raise ValueError("midpoint of an empty interval")
        if math.isinf(self.lo) or math.isinf(self.hi):
            if self.lo == -INF and self.hi == INF:
                return 0.0
            return MAXF if self.hi == INF else -MAXF
        m = 0.5 * (self.lo + self.hi)
        if math.isinf(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def __contains__(self, x: float) -> bool:
        return self.contains(x)

    def is_subset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        return other.lo <= self.lo and self.hi <= other.hi

    def intersect(self, other: Interval) -> Interval:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return EMPTY
        return Interval(lo, hi)

    def hull(self, other: Interval) -> Interval:
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    __and__ = intersect
    __or__ = hull

    def __add__(self, other: Interval | float) -> Interval:
        return add(self, _as_interval(other))

    __radd__ = __add__

    def __sub__(self, other: Interval | float) -> Interval:
        return sub(self, _as_interval(other))

    def __rsub__(self, other: float) -> Interval:
        return sub(_as_interval(other), self)

    def __mul__(self, other: Interval | float) -> Interval:
        return mul(self, _as_interval(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Interval | float) -> Interval:
        return div(self, _as_interval(other))

    def __rtruediv__(self, other: float) -> Interval:
        return div(_as_interval(other), self)

    def __neg__(self) -> Interval:
        return neg(self)

    def __repr__(self) -> str:
        if self.is_empty:
            return "Interval.empty()"
        return f"Interval({self.lo!r}, {self.hi!r})"


EMPTY = object.__new__(Interval)
object.__setattr__(EMPTY, "lo", INF)
object.__setattr__(EMPTY, "hi", -INF)
ENTIRE = Interval(-INF, INF)


def _as_interval(x: Interval | float) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(x, x)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def add(a: Interval, b: Interval) -> Interval:
    if a.is_empty or b.is_empty:
        return EMPTY
    return Interval(_add_lo(a.lo, b.lo), _add_hi(a.hi, b.hi))


def neg(a: Interval) -> Interval:
    if a.is_empty:
        return EMPTY
    return Interval(-a.hi, -a.lo)


def sub(a: Interval, b: Interval) -> Interval:
    if a.is_empty or b.is_empty:
        return EMPTY
    return Interval(_add_lo(a.lo, -b.hi), _add_hi(a.hi, -b.lo))


def mul(a: Interval, b: Interval) -> Interval:
    if a.is_empty or b.is_empty:
        return EMPTY
    ends = ((a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi))
    return Interval(min(_mul_lo(x, y) for x, y in ends),
                    max(_mul_hi(x, y) for x, y in ends))


def sqr(a: Interval) -> Interval:
    if a.is_empty:
        return EMPTY
    # squares are non-negative even when the product underflows
    if a.lo >= 0:
        return Interval(max(0.0, _mul_lo(a.lo, a.lo)), _mul_hi(a.hi, a.hi))
    if a.hi <= 0:
        return Interval(max(0.0, _mul_lo(a.hi, a.hi)), _mul_hi(a.lo, a.lo))
    m = max(-a.lo, a.hi)
    return Interval(0.0, _mul_hi(m, m))


def _recip(b: Interval) -> Interval:
    # b does not contain 0, so 1/b = [1/b.hi, 1/b.lo] with 1/inf = 0
    lo = 0.0 if b.hi == INF else _div_lo(1.0, b.hi)
    hi = 0.0 if b.lo == -INF else _div_hi(1.0, b.lo)
    return Interval(lo, hi)


def div(a: Interval, b: Interval) -> Interval:
    """Interval quotient. A divisor containing 0 yields the entire line
    (or empty for ``b == [0, 0]``); use :func:`mul_rev` for sharper
    relational division."""
    if a.is_empty or b.is_empty:
        return EMPTY
    if b.lo <= 0.0 <= b.hi:
        if b.lo == 0.0 and b.hi == 0.0:
            return EMPTY
        return ENTIRE
    finite = all(math.isfinite(v) for v in (a.lo, a.hi, b.lo, b.hi))
    if not finite:
        return mul(a, _recip(b))
    ends = ((a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi))
    return Interval(min(_div_lo(x, y) for x, y in ends),
                    max(_div_hi(x, y) for x, y in ends))


def sqrt_iv(a: Interval) -> Interval:
    """Enclosure of ``{sqrt(x) : x in a, x >= 0}``; empty if ``a < 0``."""
    if a.is_empty or a.hi < 0:
        return EMPTY
    lo, _ = _sqrt_bounds(max(a.lo, 0.0))
    _, hi = _sqrt_bounds(a.hi)
    return Interval(lo, hi)


_OPS = {"add": add, "sub": sub, "mul": mul, "div": div}
_UNARY = {"neg": neg, "sqr": sqr, "sqrt": sqrt_iv}


def arith(op: str, a: Interval, b: Interval | None = None) -> Interval:
    """Dispatch by name: add, sub, mul, div, neg, sqr, sqrt."""
    if op in _UNARY:
        if b is not None:
            raise TypeError(f"{op} takes one operand")
        return _UNARY[op](a)
    if op in _OPS:
        if b is None:
            raise TypeError(f"{op} takes two operands")
        return _OPS[op](a, b)
    raise ValueError(f"unknown interval operation {op!r}")


# ---------------------------------------------------------------------------
# Relational (backward) operators used by forward-backward contractors
# ---------------------------------------------------------------------------

def sqr_rev(y: Interval, x: Interval) -> Interval:
    """Contract ``x`` to the hull of ``{x in x : x**2 in y}``."""
    r = sqrt_iv(y)
    if r.is_empty:
        return EMPTY
    return x.intersect(r).hull(x.intersect(neg(r)))


def mul_rev(c: Interval, b: Interval, x: Interval) -> Interval:
    """Contract ``x`` to the hull of ``{x in x : exists y in b, x*y in c}``."""
    if c.is_empty or b.is_empty or x.is_empty:
        return EMPTY
    if not (b.lo <= 0.0 <= b.hi):
        return x.intersect(div(c, b))
    if c.lo <= 0.0 <= c.hi:
        return x
    if b.lo == 0.0 and b.hi == 0.0:
        return EMPTY
    # 0 in b, 0 not in c: quotient is a union of (at most) two half-lines
    left = right = EMPTY
    if c.lo > 0:
        if b.lo < 0:
            left = Interval(-INF, _div_hi(c.lo, b.lo))
        if b.hi > 0:
            right = Interval(_div_lo(c.lo, b.hi), INF)
    else:
        if b.hi > 0:
            left = Interval(-INF, _div_hi(c.hi, b.hi))
        if b.lo < 0:
            right = Interval(_div_lo(c.hi, b.lo), INF)
    return x.intersect(left).hull(x.intersect(right))


# ---------------------------------------------------------------------------
# Box
# ---------------------------------------------------------------------------

class Box(Sequence[Interval]):
    """Axis-aligned product of intervals; immutable."""

    __slots__ = ("_iv",)

    def __init__(self, components: Iterable[Interval | tuple[float, float]]):
        ivs = tuple(c if isinstance(c, Interval) else Interval(*c) for c in components)
        if not ivs:
            raise ValueError("a box needs at least one component")
        if any(c.is_empty for c in ivs):
            ivs = (EMPTY,) * len(ivs)
        self._iv = ivs

    @classmethod
    def empty(cls, n: int) -> Box:
        return cls([EMPTY] * n)

    @classmethod
    def point(cls, x: Sequence[float]) -> Box:
        return cls([Interval(v, v) for v in x])

    def __getitem__(self, i):  # type: ignore[override]
        return self._iv[i]

    def __len__(self) -> int:
        return len(self._iv)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._iv)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Box) and self._iv == other._iv

    def __hash__(self) -> int:
        return hash(self._iv)

    def __repr__(self) -> str:
        if self.is_empty:
            return f"Box.empty({len(self)})"
        return "Box(" + " x ".join(f"[{c.lo!r}, {c.hi!r}]" for c in self._iv) + ")"

    @property
    def dim(self) -> int:
        return len(self._iv)

    @property
    def is_empty(self) -> bool:
        return self._iv[0].is_empty

    @property
    def width(self) -> float:
        return max(c.width for c in self._iv)

    @property
    def lo(self) -> tuple[float, ...]:
        return tuple(c.lo for c in self._iv)

    @property
    def hi(self) -> tuple[float, ...]:
        return tuple(c.hi for c in self._iv)

    def mid(self) -> tuple[float, ...]:
        return tuple(c.mid for c in self._iv)

    def volume(self) -> float:
        if self.is_empty:
            return 0.0
        return math.prod(c.width for c in self._iv)

    def contains(self, x: Sequence[float]) -> bool:
        return all(c.contains(v) for c, v in zip(self._iv, x, strict=True))

    def is_subset(self, other: Box) -> bool:
        _check_dims(self, other)
        return all(a.is_subset(b) for a, b in zip(self._iv, other._iv))

    def intersect(self, other: Box) -> Box:
        return intersect(self, other)

    def hull(self, other: Box) -> Box:
        return hull(self, other)

    __and__ = intersect
    __or__ = hull

    def replace(self, i: int, iv: Interval) -> Box:
        comps = list(self._iv)
        comps[i] = iv
        return Box(comps)

    def as_list(self) -> list[list[float]]:
        return [[c.lo, c.hi] for c in self._iv]


def _check_dims(a: Box, b: Box) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def intersect(a: Box, b: Box) -> Box:
    _check_dims(a, b)
    return Box(x.intersect(y) for x, y in zip(a, b))


def hull(a: Box, b: Box) -> Box:
    _check_dims(a, b)
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    return Box(x.hull(y) for x, y in zip(a, b))


def bisect(a: Box) -> tuple[Box, Box]:
    """Split at the midpoint of the widest component (lowest index on ties)."""
    if a.is_empty:
        raise ValueError("cannot bisect an empty box")
    widths = [c.width for c in a]
    w = max(widths)
    if not w > 0:
        raise ValueError("cannot bisect a degenerate box")
    i = widths.index(w)
    c = a[i]
    m = c.mid
    if not c.lo < m < c.hi:
        raise ValueError("component too narrow to bisect")
    return a.replace(i, Interval(c.lo, m)), a.replace(i, Interval(m, c.hi))
