"""Signed permutations (hyperoctahedral group B_n) in Cauchy one-line notation.

Entry ``i`` (1-based) holds ``s*j``: component ``i`` of the image is ``s``
times component ``j`` of the argument. For example ``(-2, 1, 5, -4, 3)`` maps
``(x1, x2, x3, x4, x5)`` to ``(-x2, x1, x5, -x4, x3)``.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .interval import Box, Interval, neg

Contractor = Callable[[Box], Box]


class SignedPerm:
    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[int]):
        ent = tuple(int(e) for e in entries)
        n = len(ent)
        if n == 0 or sorted(abs(e) for e in ent) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {tuple(entries)}")
        self.entries = ent

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignedPerm):
            return self.entries == other.entries
        if isinstance(other, tuple):
            return self.entries == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"SignedPerm({self.entries})"

    def __matmul__(self, other: SignedPerm) -> SignedPerm:
        return compose(self, other)

    def __call__(self, x):
        if isinstance(x, Box):
            return apply_to_box(self, x)
        return apply_to_point(self, x)

    @property
    def is_diagonal(self) -> bool:
        return all(abs(e) == i for i, e in enumerate(self.entries, 1))

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if e > 0 else -1 for e in self.entries)


def _check_len(p: SignedPerm, n: int) -> None:
    if len(p) != n:
        raise ValueError(f"length mismatch: permutation of {len(p)} applied to {n} components")


def compose(p: SignedPerm, q: SignedPerm) -> SignedPerm:
    """``p ∘ q``: apply ``q`` first, then ``p``."""
    _check_len(p, len(q))
    out = []
    for e in p.entries:
        f = q.entries[abs(e) - 1]
        out.append(f if e > 0 else -f)
    return SignedPerm(out)


def inverse(p: SignedPerm) -> SignedPerm:
    out = [0] * len(p)
    for i, e in enumerate(p.entries, 1):
        out[abs(e) - 1] = i if e > 0 else -i
    return SignedPerm(out)


def apply_to_point(p: SignedPerm, x: Sequence[float]) -> tuple:
    _check_len(p, len(x))
    return tuple(x[e - 1] if e > 0 else -x[-e - 1] for e in p.entries)


def apply_to_box(p: SignedPerm, b: Box) -> Box:
    """Image of ``b``; exact, since only negations and reorderings occur."""
    _check_len(p, len(b))
    if b.is_empty:
        return b
    comps: list[Interval] = []
    for e in p.entries:
        c = b[abs(e) - 1]
        comps.append(c if e > 0 else neg(c))
    return Box(comps)


_DIAGONAL_2 = {(1, 2), (1, -2), (-1, 2), (-1, -2)}


def choice_function(eps: SignedPerm) -> SignedPerm:
    """Parameter symmetry conjugate to the plane symmetry ``eps``.

    For the quadratic form ``f(q, x) = q0 + q1 x1 + q2 x2 + q3 x1² + q4 x1 x2
    + q5 x2²`` the returned 6-element permutation ``s`` satisfies
    ``f(s(q), x) == f(q, eps(x))``.
    """
    if eps.entries not in _DIAGONAL_2:
        raise ValueError(f"choice function defined for diagonal plane symmetries only, got {eps.entries}")
    e1, e2 = eps.signs()
    return SignedPerm((1, 2 * e1, 3 * e2, 4, 5 * e1 * e2, 6))


def act_on_contractor(eps: SignedPerm, c: Contractor) -> Contractor:
    """The contractor ``x ↦ eps(c(eps⁻¹(x)))``."""
    inv = inverse(eps)

    def acted(x: Box) -> Box:
        return apply_to_box(eps, c(apply_to_box(inv, x)))

    return acted


# the four quadrant symmetries of the plane used by the ellipse contractor
QUADRANT_SYMMETRIES = tuple(SignedPerm(e) for e in ((1, 2), (1, -2), (-1, 2), (-1, -2)))
# exchanges x1 and x2 in the quadratic form: (q0, q2, q1, q5, q4, q3)
SWAP_PARAMS = SignedPerm((1, 3, 2, 6, 5, 4))
