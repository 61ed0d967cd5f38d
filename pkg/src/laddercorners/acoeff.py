"""The integer coefficients A(b; c) and the three B-sums built from them.

A(b; c) is defined recursively on pairs of strictly increasing l-tuples,
l >= 2: for l = 2 it is 1 when b_2 = c_2 and b_1 <= c_1, else 0; for
l > 2 it vanishes unless b_l = c_l and otherwise sums A(b_1..b_{l-1}; c')
over all strictly increasing c' <= (c_1..c_{l-1}) componentwise.

A consequence (tested, not assumed): A(b; c) is nonzero exactly when
b <= c componentwise and b_l = c_l, and is then positive.  The B-sums
below run over all of S_l on paper; the implementations restrict to the
window where A is nonzero, and the test suite compares against padded
wide-window summation to guard the restriction.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .brackets import IncTuple, curly, sq_tuple
from .polyring import ONE, Poly, ZERO, add, mul, one_minus_t_pow


def _validated_pair(b, c):
    b = IncTuple(b)
    c = IncTuple(c)
    if len(b) != len(c):
        raise ValueError(f"length mismatch: {len(b)} vs {len(c)}")
    if len(b) < 2:
        raise ValueError("A(b; c) needs tuples of length >= 2")
    return b, c


@lru_cache(maxsize=None)
def _a(b: tuple, c: tuple) -> int:
    l = len(b)
    if l == 2:
        return 1 if b[1] == c[1] and b[0] <= c[0] else 0
    if b[-1] != c[-1]:
        return 0
    head = b[:-1]
    total = 0
    for cp in combinations(range(1, c[-2] + 1), l - 1):
        if all(x <= y for x, y in zip(cp, c)):
            total += _a(head, cp)
    return total


def a_coeff(b, c) -> int:
    """The coefficient A(b_1..b_l; c_1..c_l), exact."""
    b, c = _validated_pair(b, c)
    return _a(tuple(b), tuple(c))


def _a_support_below(c):
    """All d in S_l with d <= c componentwise and d_l = c_l."""
    l = len(c)
    if l == 1:
        yield c
        return
    for head in combinations(range(1, c[-2] + 1), l - 1):
        if all(x <= y for x, y in zip(head, c)):
            yield head + (c[-1],)


def _a_support_above(b):
    """All d in S_l with d >= b componentwise and d_l = b_l."""
    l = len(b)
    if l == 1:
        yield b
        return
    for head in combinations(range(b[0], b[-1]), l - 1):
        if all(x >= y for x, y in zip(head, b)):
            yield head + (b[-1],)


def b1(b, c) -> Poly:
    """B_1(b; c) = sum_d A(d; c) {d/b} (1-t)^(sum(c_i - d_i))."""
    b, c = _validated_pair(b, c)
    acc = ZERO
    for d in _a_support_below(tuple(c)):
        coeff = _a(d, tuple(c))
        if not coeff:
            continue
        shrink = one_minus_t_pow(sum(ci - di for ci, di in zip(c, d)))
        term = mul(curly(d, b), shrink)
        if coeff != 1:
            term = tuple(coeff * x for x in term)
        acc = add(acc, term)
    return acc


def b2(b, c) -> Poly:
    """B_2(b; c) = sum_d A(b; d) [c/d] (1-t)^(sum(d_i - b_i))."""
    b, c = _validated_pair(b, c)
    acc = ZERO
    for d in _a_support_above(tuple(b)):
        coeff = _a(tuple(b), d)
        if not coeff:
            continue
        bracket = sq_tuple(c, d)
        if not bracket:
            continue
        grow = one_minus_t_pow(sum(di - bi for di, bi in zip(d, b)))
        term = mul(bracket, grow)
        if coeff != 1:
            term = tuple(coeff * x for x in term)
        acc = add(acc, term)
    return acc


def b3(b, c) -> Poly:
    """B_3(b; c): the nested window sum over d_i in [b_i, b_{i+1} - 1].

    Only defined for l >= 3 with b_l = c_l; the windows make d strictly
    increasing automatically, and terms with A(d; c_1..c_{l-1}) = 0 are
    skipped (they are the only ones whose (1-t) exponent could go
    negative).
    """
    b, c = _validated_pair(b, c)
    l = len(b)
    if l < 3:
        raise ValueError("B_3 needs l >= 3")
    if b[-1] != c[-1]:
        raise ValueError(f"B_3 needs b_l = c_l, got {b[-1]} != {c[-1]}")
    windows = [range(b[i], b[i + 1]) for i in range(l - 1)]
    head_c = tuple(c[:-1])
    acc = ZERO
    for d in product(*windows):
        coeff = _a(d, head_c)
        if not coeff:
            continue
        shrink = one_minus_t_pow(sum(ci - di for ci, di in zip(head_c, d)))
        term = shrink if coeff == 1 else tuple(coeff * x for x in shrink)
        acc = add(acc, term)
    return acc
