"""Shared test utilities."""

import math

import numpy as np
import pytest

from ellipsep.interval import Box
from ellipsep.quadric import Foci, QuadraticForm, from_foci

from oracles import f_exact

CIRCLE = QuadraticForm(-1, 0, 0, 1, 0, 1)
TILTED = QuadraticForm(-5, 1, 1, 3, 1, 2)
STANDARD = QuadraticForm(-192, 0, 0, 48, 0, 64)


def B(*bounds):
    return Box(bounds)


def assert_box_close(box, expected, tol):
    assert not box.is_empty
    for c, (lo, hi) in zip(box, expected):
        assert c.lo == pytest.approx(lo, abs=tol)
        assert c.hi == pytest.approx(hi, abs=tol)


def random_ellipse(rng) -> QuadraticForm:
    """Ellipse-valid form with random centre, axes and orientation."""
    q3, q5 = rng.uniform(0.2, 5, 2)
    q4 = rng.uniform(-1, 1) * 2 * math.sqrt(q3 * q5) * 0.95
    c = rng.uniform(-2, 2, 2)
    A = np.array([[q3, q4 / 2], [q4 / 2, q5]])
    b = -2 * A @ c
    q0 = float(c @ A @ c) - rng.uniform(0.3, 4)
    return QuadraticForm(q0, b[0], b[1], q3, q4, q5)


def random_box(rng, lo=-3.0, hi=3.0) -> Box:
    a, b = np.sort(rng.uniform(lo, hi, 2)), np.sort(rng.uniform(lo, hi, 2))
    return B(tuple(a), tuple(b))


def sample(rng, x: Box, n: int) -> np.ndarray:
    return np.column_stack([rng.uniform(x[0].lo, x[0].hi, n), rng.uniform(x[1].lo, x[1].hi, n)])


def grid_feasible(constraints, point) -> bool:
    """All ``(q, sense)`` hold at ``point`` in exact arithmetic; sense is
    ``"le"`` for f <= 0 and ``"ge"`` for f >= 0."""
    for q, sense in constraints:
        v = f_exact(q.coeffs, point)
        if (v > 0) if sense == "le" else (v < 0):
            return False
    return True


def grid_violated(constraints, point) -> bool:
    """``point`` is not in the interior of the feasible set: some constraint
    fails or is active. Closed outside boxes may touch the boundary."""
    for q, sense in constraints:
        v = f_exact(q.coeffs, point)
        if (v >= 0) if sense == "le" else (v <= 0):
            return True
    return False


def localization_constraints(config):
    """The ``(q, sense)`` list describing the feasible set of ``config``."""
    out = []
    for m in config.measurements:
        e, r = config.sonars[m.emitter], config.sonars[m.receiver]
        out.append((from_foci(Foci(e, r, m.hi)), "le"))
        if m.lo > math.dist(e, r):
            out.append((from_foci(Foci(e, r, m.lo)), "ge"))
    return out
