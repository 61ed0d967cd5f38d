"""Transfer-weight symbols between strictly increasing row tuples.

The scalar square bracket [c/b] is t, 1 or 0 according to c > b, c = b
or c < b.  It is the weight a path picks up in one column: t when the
path enters the column and then descends (creating a corner), 1 when it
passes straight through, 0 when it would have to rise.

The tuple square bracket multiplies scalar brackets componentwise and
vanishes when c_i >= b_{i+1} for some i, which is exactly the condition
for two consecutive vertical runs in a column to collide.  The curly
bracket is the signed (determinantal) version used by the determinant
transfer recursion.
"""

from __future__ import annotations

from functools import lru_cache

from .polyring import ONE, Poly, T, ZERO, poly_det


class IncTuple(tuple):
    """A strictly increasing tuple of positive integers.

    The empty tuple is allowed and stands for the degenerate empty
    family; the bracket operations below require length >= 1.
    """

    def __new__(cls, entries=()):
        vals = tuple(int(x) for x in entries)
        for k, v in enumerate(vals):
            if v < 1:
                raise ValueError(f"entries must be positive, got {v}")
            if k and vals[k - 1] >= v:
                raise ValueError(f"entries must be strictly increasing, got {vals}")
        return super().__new__(cls, vals)


def sq_scalar(c: int, b: int) -> Poly:
    """[c/b]: t if c > b, 1 if c = b, 0 if c < b."""
    if c > b:
        return T
    return ONE if c == b else ZERO


def sq_tuple(c, b) -> Poly:
    """Tuple bracket [c_1..c_l / b_1..b_l].

    Zero when c_i >= b_{i+1} for some i < l, otherwise the product of
    the scalar brackets [c_i/b_i].
    """
    if len(c) != len(b):
        raise ValueError("tuple brackets need equal lengths")
    for i in range(len(c) - 1):
        if c[i] >= b[i + 1]:
            return ZERO
    descents = 0
    for ci, bi in zip(c, b):
        if ci < bi:
            return ZERO
        if ci > bi:
            descents += 1
    return (0,) * descents + (1,)


@lru_cache(maxsize=None)
def _curly_cached(c: tuple, b: tuple) -> Poly:
    grid = [[sq_scalar(cj, bi) for cj in c] for bi in b]
    return poly_det(grid)


def curly(c, b) -> Poly:
    """Curly bracket {c_1..c_l / b_1..b_l}, the signed permutation sum.

    Computed as the l x l determinant with entry (i, j) = [c_j/b_i],
    which equals the Leibniz sum over permutations of the c entries.
    """
    if len(c) != len(b):
        raise ValueError("curly brackets need equal lengths")
    return _curly_cached(tuple(c), tuple(b))
