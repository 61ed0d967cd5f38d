"""Exact dense univariate polynomial arithmetic over Python integers.

A polynomial in t is a tuple of coefficients in ascending order of the
exponent: (2, 1) is 2 + t.  The canonical form never stores trailing
zeros, so the zero polynomial is the empty tuple.  All arithmetic is
exact; coefficients are arbitrary-precision Python ints, which is
essential because the path counts these polynomials carry grow
super-exponentially with the grid size.

Values are immutable, so they can be shared freely between threads and
memo tables.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

Poly = tuple  # tuple[int, ...] in ascending degree, canonical

ZERO: Poly = ()
ONE: Poly = (1,)
T: Poly = (0, 1)


class NotDivisible(ArithmeticError):
    """Raised when an exact division by a power of t is impossible."""


def poly(coeffs: Iterable[int]) -> Poly:
    """Build a canonical polynomial from an ascending coefficient sequence."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return poly(out)


def sub(p: Poly, q: Poly) -> Poly:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for k, c in enumerate(q):
        out[k] -= c
    return poly(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def t_power(k: int) -> Poly:
    """The monomial t^k."""
    if k < 0:
        raise ValueError("negative exponent")
    return (0,) * k + (1,)


@lru_cache(maxsize=None)
def one_minus_t_pow(k: int) -> Poly:
    """The expansion of (1 - t)^k, exact binomial coefficients."""
    if k < 0:
        raise ValueError("negative exponent")
    return tuple((-1) ** j * math.comb(k, j) for j in range(k + 1)) if k else ONE


def div_t_power(p: Poly, k: int) -> Poly:
    """Exact quotient p / t^k.

    Raises NotDivisible when any of the first k coefficients is nonzero;
    callers that verify identities treat that as a failed identity, not
    as a crash.
    """
    if k < 0:
        raise ValueError("negative exponent")
    if any(p[:k]):
        raise NotDivisible(f"{to_machine(p)} is not divisible by t^{k}")
    return p[k:]


def poly_eval(p: Poly, x: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant of a square grid of polynomials.

    Cofactor expansion memoized on the surviving column set: O(2^n * n)
    polynomial multiplications, no polynomial division needed.  The
    empty 0x0 determinant is 1.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    full = (1 << n) - 1

    memo: dict[int, Poly] = {0: ONE}

    def expand(cols: int) -> Poly:
        # determinant of rows (n - popcount) .. n-1 against the columns in `cols`
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - cols.bit_count()
        acc = ZERO
        sign = 1
        rest = cols
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            entry = matrix[row][j]
            if entry:
                term = mul(entry, expand(cols ^ low))
                acc = add(acc, term) if sign > 0 else sub(acc, term)
            sign = -sign
            rest ^= low
        memo[cols] = acc
        return acc

    return expand(full)


def to_machine(p: Poly) -> str:
    """Machine format: space-separated ascending coefficients, "0" for zero."""
    if not p:
        return "0"
    return " ".join(str(c) for c in p)


def from_machine(text: str) -> Poly:
    """Parse the machine format back into a canonical polynomial."""
    parts = text.split()
    if not parts:
        raise ValueError("empty polynomial text")
    try:
        return poly(int(tok) for tok in parts)
    except ValueError as exc:
        raise ValueError(f"bad coefficient in {text!r}") from exc


def to_human(p: Poly) -> str:
    """Human format, e.g. "2 + t" or "1 - 2t + t^2"."""
    if not p:
        return "0"
    pieces = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
