import random

import pytest
from hypothesis import given, strategies as st

from ellipsep.interval import Box, Interval, hull, intersect
from ellipsep.quadric import QuadraticForm, eval_point
from ellipsep.symmetry import (QUADRANT_SYMMETRIES, SignedPerm, act_on_contractor,
                               apply_to_box, apply_to_point, choice_function, compose,
                               inverse)

P = SignedPerm


def B(*bounds):
    return Box(bounds)


def test_rejects_non_permutations():
    for bad in [(1, 1), (0, 2), (1, 3), ()]:
        with pytest.raises(ValueError):
            P(bad)


class TestCompose:
    def test_identity_is_neutral(self):
        p = P((-2, 1, 5, -4, 3))
        assert compose(P.identity(5), p) == p
        assert compose(p, P.identity(5)) == p

    def test_sign_flip_involution(self):
        assert compose(P((-1, 2)), P((-1, 2))) == P((1, 2))

    def test_order_matches_function_composition(self):
        # swap after flipping x1: (3, 5) -> (-3, 5) -> (5, -3)
        p, q = P((2, 1)), P((-1, 2))
        assert compose(p, q) == P((2, -1))
        assert apply_to_point(compose(p, q), (3, 5)) == (5, -3)
        assert apply_to_point(p, apply_to_point(q, (3, 5))) == (5, -3)
        # flip after swapping: (3, 5) -> (5, 3) -> (-5, 3)
        assert compose(q, p) == P((-2, 1))
        assert apply_to_point(compose(q, p), (3, 5)) == (-5, 3)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            compose(P((1, 2)), P((1, 2, 3)))


class TestInverse:
    def test_examples(self):
        assert inverse(P((1, 2, 3, 4, 5, 6))) == P((1, 2, 3, 4, 5, 6))
        assert inverse(P((-1, -2))) == P((-1, -2))
        assert inverse(P((-2, 1, 5, -4, 3))) == P((2, -1, 5, -4, 3))

    def test_basis_vectors_round_trip(self):
        p = P((-2, 1, 5, -4, 3))
        inv = inverse(p)
        for k in range(5):
            e = tuple(1.0 if i == k else 0.0 for i in range(5))
            assert apply_to_point(inv, apply_to_point(p, e)) == e
        assert compose(p, inv) == P.identity(5)


class TestApply:
    def test_cauchy_one_line_example(self):
        x = (1.0, 2.0, 3.0, 4.0, 5.0)
        assert apply_to_point(P((-2, 1, 5, -4, 3)), x) == (-2.0, 1.0, 5.0, -4.0, 3.0)

    def test_small_examples(self):
        assert apply_to_point(P((1, 2)), (7, 9)) == (7, 9)
        assert apply_to_point(P((-1, 2)), (3, 7)) == (-3, 7)
        with pytest.raises(ValueError):
            apply_to_point(P((1, 2)), (1, 2, 3))

    def test_boxes(self):
        assert apply_to_box(P((-1, 2)), B((1, 2), (3, 4))) == B((-2, -1), (3, 4))
        assert apply_to_box(P((2, 1)), B((1, 2), (3, 4))) == B((3, 4), (1, 2))
        assert apply_to_box(P((-1, -2)), B((0, 1), (-2, 5))) == B((-1, 0), (-5, 2))
        assert apply_to_box(P((2, 1)), Box.empty(2)).is_empty


class TestChoiceFunction:
    @pytest.mark.parametrize("eps, expected", [
        ((1, 2), (1, 2, 3, 4, 5, 6)),
        ((-1, 2), (1, -2, 3, 4, -5, 6)),
        ((-1, -2), (1, -2, -3, 4, 5, 6)),
        ((1, -2), (1, 2, -3, 4, -5, 6)),
    ])
    def test_values(self, eps, expected):
        assert choice_function(P(eps)) == P(expected)

    @pytest.mark.parametrize("bad", [(2, 1), (-2, 1), (1, 2, 3)])
    def test_rejects_non_diagonal(self, bad):
        with pytest.raises(ValueError):
            choice_function(P(bad))

    def test_conjugacy_is_exact(self):
        rng = random.Random(7)
        for eps in QUADRANT_SYMMETRIES:
            s = choice_function(eps)
            for _ in range(2000):
                q = [rng.uniform(-10, 10) for _ in range(6)]
                x = (rng.uniform(-10, 10), rng.uniform(-10, 10))
                lhs = eval_point(QuadraticForm(*apply_to_point(s, q)), x)
                rhs = eval_point(QuadraticForm(*q), apply_to_point(eps, x))
                assert lhs == rhs


class TestContractorAction:
    def test_identity_action(self):
        rng = random.Random(3)
        target = B((0.2, 0.9), (-0.5, 0.4))

        def c(x):
            return intersect(x, target)

        acted = act_on_contractor(P((1, 2)), c)
        for _ in range(100):
            a, b, c2, d = (rng.uniform(-2, 2) for _ in range(4))
            x = B((min(a, b), max(a, b)), (min(c2, d), max(c2, d)))
            assert acted(x) == c(x)

    def test_image_of_fixed_box(self):
        def c(x):
            return intersect(x, B((0, 1), (0, 1)))

        acted = act_on_contractor(P((-1, 2)), c)
        assert acted(B((-2, 2), (-2, 2))) == B((-1, 0), (0, 1))

    def test_swap_of_symmetric_arc(self):
        from ellipsep.ellipse import contract_positive
        circle = QuadraticForm(-1, 0, 0, 1, 0, 1)

        def c(x):
            return contract_positive(circle, x)

        acted = act_on_contractor(P((2, 1)), c)
        for x in [B((-2, 2), (-2, 2)), B((0.1, 0.5), (0, 2)), B((0.3, 2), (0.1, 0.2))]:
            r, s = acted(x), c(x)
            for u, v in zip(r, s):
                assert abs(u.lo - v.lo) < 1e-12 and abs(u.hi - v.hi) < 1e-12


signed_perms = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)),
                        st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n))
    .map(lambda t: P([s * e for e, s in zip(*t)])))


@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(1, 6))
    perm = st.tuples(st.permutations(range(1, n + 1)),
                     st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n)
                     ).map(lambda t: P([s * e for e, s in zip(*t)]))
    p, q, r = data.draw(perm), data.draw(perm), data.draw(perm)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)) == P.identity(n)
    assert compose(inverse(p), p) == P.identity(n)
    x = tuple(float(i) for i in range(1, n + 1))
    assert apply_to_point(compose(p, q), x) == apply_to_point(p, apply_to_point(q, x))


iv = st.tuples(st.floats(-100, 100), st.floats(-100, 100)).map(lambda t: Interval(min(t), max(t)))


@given(signed_perms.filter(lambda p: len(p) == 2), iv, iv, iv, iv)
def test_box_action_commutes_with_lattice(p, a1, a2, b1, b2):
    a, b = Box([a1, a2]), Box([b1, b2])
    assert apply_to_box(p, hull(a, b)) == hull(apply_to_box(p, a), apply_to_box(p, b))
    assert apply_to_box(p, intersect(a, b)) == intersect(apply_to_box(p, a), apply_to_box(p, b))
