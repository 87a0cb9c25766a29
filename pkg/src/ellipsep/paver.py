"""SIVIA paver driven by a separator."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ellipse import box_difference
from .interval import Box, Interval, bisect, sub, mul

INSIDE = "inside"
OUTSIDE = "outside"
UNDETERMINED = "undetermined"
CLASSES = (INSIDE, OUTSIDE, UNDETERMINED)


@dataclass
class Paving:
    frame: Box
    eps: float
    inside: list[Box] = field(default_factory=list)
    outside: list[Box] = field(default_factory=list)
    undetermined: list[Box] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=lambda: {"bisections": 0, "separator_calls": 0})

    def boxes(self) -> list[tuple[Box, str]]:
        """All boxes with their class, in emission order."""
        return list(self._ordered)

    def __post_init__(self) -> None:
        self._ordered: list[tuple[Box, str]] = (
            [(b, INSIDE) for b in self.inside]
            + [(b, OUTSIDE) for b in self.outside]
            + [(b, UNDETERMINED) for b in self.undetermined])

    def add(self, box: Box, cls: str) -> None:
        getattr(self, cls).append(box)
        self._ordered.append((box, cls))

    def __len__(self) -> int:
        return len(self._ordered)

    def classify_point(self, x) -> set[str]:
        """Classes of every box containing ``x`` (boxes are closed)."""
        return {c for b, c in self._ordered if b.contains(x)}


def pave(separator, frame: Box, eps: float) -> Paving:
    """Classify ``frame`` into inside / outside / undetermined boxes.

    Depth-first: the residual box kept by both sides of the separator is
    bisected along its widest side until narrower than ``eps``.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if frame.is_empty:
        raise ValueError("frame must be non-empty")
    paving = Paving(frame, eps)
    stack = [frame]
    while stack:
        x = stack.pop()
        paving.stats["separator_calls"] += 1
        r = separator(x)
        for slab in box_difference(x, r.x_out):
            paving.add(slab, OUTSIDE)
        for slab in box_difference(x, r.x_in):
            paving.add(slab, INSIDE)
        rest = r.x_in & r.x_out
        if rest.is_empty:
            continue
        if rest.width < eps:
            paving.add(rest, UNDETERMINED)
            continue
        lower, upper = bisect(rest)
        paving.stats["bisections"] += 1
        stack.append(lower)
        stack.append(upper)
    return paving


def _area_iv(b: Box) -> Interval:
    area = Interval(1.0, 1.0)
    for c in b:
        area = mul(area, sub(Interval.point(c.hi), Interval.point(c.lo)))
    return area


def paving_areas(p: Paving) -> tuple[float, float]:
    """Guaranteed bracket ``(inner, inner + undetermined)`` on the set's area
    within the frame."""
    inner = Interval(0.0, 0.0)
    for b in p.inside:
        inner = inner + _area_iv(b)
    outer = inner
    for b in p.undetermined:
        outer = outer + _area_iv(b)
    return inner.lo, outer.hi
