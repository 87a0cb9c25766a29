import math
import random

import numpy as np
import pytest
import sympy as sp

from ellipsep.errors import DegenerateEllipse
from ellipsep.interval import Box
from ellipsep.quadric import (Foci, QuadraticForm, apply_param_symmetry, eval_box,
                              eval_point, from_foci, is_ellipse)
from ellipsep.symmetry import SWAP_PARAMS, SignedPerm

from oracles import ParamEllipse

CIRCLE = QuadraticForm(-1, 0, 0, 1, 0, 1)
TILTED = QuadraticForm(-5, 1, 1, 3, 1, 2)
STANDARD = QuadraticForm(-192, 0, 0, 48, 0, 64)  # x1²/4 + x2²/3 <= 1, scaled


def ulps(x: float, n: int) -> float:
    return n * math.ulp(x)


class TestEval:
    def test_points(self):
        assert eval_point(CIRCLE, (0, 0)) == -1
        assert eval_point(TILTED, (1, 1)) == 3
        assert eval_point(STANDARD, (2, 0)) == 0

    def test_standard_ellipse_boundary(self):
        pts = ParamEllipse(STANDARD.coeffs).points(100)
        for x in pts.T:
            assert x[0] ** 2 / 4 + x[1] ** 2 / 3 == pytest.approx(1.0)
            assert abs(eval_point(STANDARD, x)) < 1e-9 * STANDARD.max_abs()

    def test_box_point(self):
        r = eval_box(CIRCLE, Box([(0, 0), (0, 0)]))
        assert r.contains(-1.0) and r.width <= ulps(1.0, 2)

    def test_box_lower_bound(self):
        r = eval_box(CIRCLE, Box([(2, 3), (0, 1)]))
        assert r.lo >= 3 - ulps(3.0, 4)

    def test_box_empty(self):
        assert eval_box(TILTED, Box.empty(2)).is_empty

    def test_box_encloses_points(self):
        rng = random.Random(5)
        for _ in range(300):
            q = QuadraticForm(*(rng.uniform(-5, 5) for _ in range(6)))
            a, b, c, d = (rng.uniform(-4, 4) for _ in range(4))
            box = Box([(min(a, b), max(a, b)), (min(c, d), max(c, d))])
            r = eval_box(q, box)
            for _ in range(20):
                x = (rng.uniform(box[0].lo, box[0].hi), rng.uniform(box[1].lo, box[1].hi))
                assert r.contains(eval_point(q, x))


class TestPredicate:
    def test_values(self):
        assert is_ellipse(TILTED)
        assert not is_ellipse(QuadraticForm(0, 0, 0, 1, 0, -1))
        assert not is_ellipse(QuadraticForm(0, 0, 0, 1, 2, 1))

    def test_coefficients_must_be_finite(self):
        with pytest.raises(ValueError):
            QuadraticForm(math.inf, 0, 0, 1, 0, 1)


class TestParamSymmetry:
    def test_swap(self):
        assert apply_param_symmetry(SWAP_PARAMS, TILTED).coeffs == (-5, 1, 1, 2, 1, 3)

    def test_identity(self):
        assert apply_param_symmetry(SignedPerm.identity(6), TILTED) == TILTED

    def test_flip(self):
        s = SignedPerm((1, -2, 3, 4, -5, 6))
        assert apply_param_symmetry(s, TILTED).coeffs == (-5, -1, 1, 3, -1, 2)

    def test_swap_is_involution(self):
        rng = random.Random(2)
        for _ in range(50):
            q = QuadraticForm(*(rng.uniform(-5, 5) for _ in range(6)))
            assert apply_param_symmetry(SWAP_PARAMS, apply_param_symmetry(SWAP_PARAMS, q)) == q


class TestFromFoci:
    def test_circle(self):
        assert from_foci(Foci((0, 0), (0, 0), 2)).coeffs == (-16, 0, 0, 16, 0, 16)

    def test_standard(self):
        assert from_foci(Foci((-1, 0), (1, 0), 4)).coeffs == (-192, 0, 0, 48, 0, 64)

    def test_sonar_pair(self):
        # expected vector from the symbolic expansion below
        q = from_foci(Foci((-2, 1), (-2, -1), 6))
        assert q.coeffs == (-576, 576, 0, 144, 0, 128)

    def test_degenerate(self):
        with pytest.raises(DegenerateEllipse):
            from_foci(Foci((-2, 1), (-2, -1), 1.5))
        with pytest.raises(DegenerateEllipse):
            from_foci(Foci((-2, 1), (-2, -1), 2.0))

    def test_coefficients_match_symbolic_expansion(self):
        a1, a2, b1, b2, l, x1, x2 = sp.symbols("a1 a2 b1 b2 l x1 x2")
        da = (x1 - a1) ** 2 + (x2 - a2) ** 2
        db = (x1 - b1) ** 2 + (x2 - b2) ** 2
        poly = sp.Poly(sp.expand(4 * da * db - (l ** 2 - da - db) ** 2), x1, x2)
        assert poly.total_degree() == 2
        monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        exprs = [poly.coeff_monomial(x1 ** i * x2 ** j) for i, j in monomials]
        for vals in [(-2, 1, -2, -1, 6), (-2, 1, 3, 2, 9), (0.5, -1.25, 2, 0.75, 5)]:
            sub = dict(zip((a1, a2, b1, b2, l), vals))
            expected = [float(e.subs(sub)) for e in exprs]
            q = from_foci(Foci(vals[0:2], vals[2:4], vals[4]))
            assert q.coeffs == pytest.approx(expected, rel=1e-12, abs=1e-9)

    def test_quartic_identity(self):
        rng = random.Random(11)
        for _ in range(20):
            a = (rng.uniform(-3, 3), rng.uniform(-3, 3))
            b = (rng.uniform(-3, 3), rng.uniform(-3, 3))
            ell = math.dist(a, b) + rng.uniform(0.1, 4)
            q = from_foci(Foci(a, b, ell))
            for _ in range(50):
                x = (rng.uniform(-6, 6), rng.uniform(-6, 6))
                da = (x[0] - a[0]) ** 2 + (x[1] - a[1]) ** 2
                db = (x[0] - b[0]) ** 2 + (x[1] - b[1]) ** 2
                ref = 4 * da * db - (ell ** 2 - da - db) ** 2
                assert eval_point(q, x) == pytest.approx(ref, rel=1e-9, abs=1e-9 * q.max_abs())

    def test_consistency_with_distance_sum(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            a, b = rng.uniform(-3, 3, 2), rng.uniform(-3, 3, 2)
            ell = float(np.linalg.norm(a - b)) + rng.uniform(0.2, 4)
            foci = Foci(tuple(a), tuple(b), ell)
            q = from_foci(foci)
            assert is_ellipse(q)
            # parametric boundary from centre, semi-axes and focal direction
            c = (a + b) / 2
            half = np.linalg.norm(b - a) / 2
            u = (b - a) / (2 * half) if half > 0 else np.array([1.0, 0.0])
            v = np.array([-u[1], u[0]])
            ma = ell / 2
            mb = math.sqrt(ma ** 2 - half ** 2)
            th = rng.uniform(0, 2 * np.pi, 100)
            for t in th:
                x = c + ma * math.cos(t) * u + mb * math.sin(t) * v
                assert abs(eval_point(q, x)) <= 1e-6 * q.max_abs()
            for _ in range(100):
                x = rng.uniform(-8, 8, 2)
                s = foci.distance_sum(x)
                if abs(s - ell) < 1e-6:
                    continue
                assert (eval_point(q, x) < 0) == (s < ell)
