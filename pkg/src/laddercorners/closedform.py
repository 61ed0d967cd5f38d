"""Closed formulas for rectangles.

On an m x n rectangle the number of paths from (a, n) to (m, b) with
exactly k corners is C(m-a, k) * C(n-b, k), which makes the single-path
corner polynomial a terminating hypergeometric sum.  Families of r
disjoint paths are covered by two determinant formulas: a general one
for arbitrary strictly increasing starts a and ends b (with shifted
binomial entries), and the t^(-C(r,2)) * det[W(P_i, Q_j)] form for the
staircase endpoints a_i = b_i = i.
"""

from __future__ import annotations

import math

from .brackets import IncTuple
from .polyring import Poly, div_t_power, poly, poly_det


def binom(n: int, k: int) -> int:
    """C(n, k), zero for k < 0, k > n, or n < 0.

    The zero convention for negative upper index is what makes the
    off-diagonal determinant entries below well defined; it is validated
    against the brute-force oracle rather than assumed.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rect_single_poly(m: int, n: int, a: int, b: int) -> Poly:
    """Corner polynomial of a single path from (a, n) to (m, b) in a rectangle."""
    if not (1 <= a <= m and 1 <= b <= n):
        raise ValueError(f"endpoints ({a}, {b}) outside the {m} x {n} rectangle")
    kmax = min(m - a, n - b)
    return poly(binom(m - a, k) * binom(n - b, k) for k in range(kmax + 1))


def _kk_entry(m: int, n: int, ai: int, bj: int, i: int, j: int) -> Poly:
    u1 = m - ai + i - j
    u2 = n - bj + j - i
    kmax = min(u1, u2 + i - j)
    if kmax < 0:
        return ()
    return poly(binom(u1, k) * binom(u2, k + j - i) for k in range(kmax + 1))


def kk_det(m: int, n: int, a, b) -> Poly:
    """Family corner polynomial for starts (a_i, n), ends (m, b_j), as a determinant.

    Hypotheses: 1 = a_1 < ... < a_r <= m and 1 = b_1 < ... < b_r <= n.
    """
    a = IncTuple(a)
    b = IncTuple(b)
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    r = len(a)
    if r == 0:
        return (1,)
    if a[0] != 1 or b[0] != 1:
        raise ValueError("the determinant formula needs a_1 = b_1 = 1")
    if a[-1] > m or b[-1] > n:
        raise ValueError("endpoints outside the rectangle")
    grid = [
        [_kk_entry(m, n, a[i], b[j], i + 1, j + 1) for j in range(r)]
        for i in range(r)
    ]
    return poly_det(grid)


def conca_herzog_det(m: int, n: int, r: int) -> Poly:
    """t^(-C(r,2)) * det[sum_k C(m-i,k) C(n-j,k) t^k] for the staircase endpoints.

    Propagates NotDivisible if the determinant were not divisible, which
    would falsify the identity this formula encodes.
    """
    if r < 0 or r > min(m, n):
        raise ValueError(f"need 0 <= r <= min(m, n), got r={r}")
    grid = [
        [rect_single_poly(m, n, i, j) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    return div_t_power(poly_det(grid), math.comb(r, 2))
