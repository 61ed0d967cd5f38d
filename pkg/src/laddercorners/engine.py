"""Fast exact computation of the family polynomials and their determinants.

W(n, m; b) is computed by a left-to-right column sweep: the state is the
strictly increasing tuple of rows at which the active paths leave the
current column, and the transition into the next column charges t per
path that strictly descends after entering (exactly one corner per such
column).  Writing p for the exits at column c-1 and x for the exits at
column c, a transition is admissible iff x_i <= p_i <= x_{i+1} - 1 and
the top entry row respects the column height, which is the tuple square
bracket [p/x]; so one sweep step is one application of the column-peel
recursion, just oriented forward.  Paths are activated at their start
columns with entry row n and pay nothing for the start-column descent
(the start column has no horizontal entry, hence no corner).

Internally the sweep packs each polynomial into a single integer
(coefficient of t^k in bits [kB, (k+1)B)); coefficients are nonnegative
counts, so addition and shift-by-B implement polynomial + and *t with
no aliasing, and big-int arithmetic does the heavy lifting.  States are
ranked combinadically into flat lists, and the per-column transition is
applied one coordinate at a time through precomputed fiber programs.
For wide regions the sweep runs from both ends and the two half-tables
are joined by per-state products, which halves the operand sizes.

The determinant polynomial det[W(P_i, Q_j)] is built on an independent
single-path DP, so the main-identity checks compare two genuinely
disjoint computations.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import accumulate, combinations, product

from .acoeff import a_coeff
from .brackets import IncTuple, curly
from .polyring import ONE, Poly, ZERO, add, mul, one_minus_t_pow, poly, poly_det
from .region import Cell, EndpointSpec, LadderRegion

try:
    from gmpy2 import mpz as _bigint, xmpz as _mutint

    _INPLACE = True
except ImportError:  # graceful slowdown, identical results
    _bigint = int
    _mutint = None
    _INPLACE = False

__all__ = [
    "poly_det",
    "single_path_poly",
    "family_poly",
    "wtilde",
    "wtilde_step",
    "main_rhs",
]


def single_path_poly(region: LadderRegion, P: Cell, Q: Cell) -> Poly:
    """Corner polynomial of a single path from P to Q; 0 if unreachable.

    Column DP: state is the row at which the path leaves the current
    column, weight t whenever it descends after a horizontal entry.
    """
    if not (region.contains(P) and region.contains(Q)):
        raise ValueError(f"endpoints {P}, {Q} must lie in the region")
    (pi, pj), (qi, qj) = P, Q
    if qi < pi or qj > pj:
        return ZERO
    cur = {x: ONE for x in range(qj, pj + 1)}  # exits at the start column
    for c in range(pi + 1, qi + 1):
        cap = region.column_max(c)
        nxt = {}
        suffix = ZERO
        for v in range(cap, qj - 1, -1):
            here = cur.get(v)
            val = (0,) + suffix if suffix else ZERO  # t * sum of exits above v
            if here:
                val = add(val, here)
                suffix = add(suffix, here)
            if val:
                nxt[v] = val
        cur = nxt
    return cur.get(qj, ZERO)


def _kron_bits(n: int, widths) -> int:
    # Any table coefficient counts tuples of path prefixes, so the product
    # of per-path rectangle path counts (over the swept widths) dominates
    # it; the extra n covers the running window sums inside a fold.
    bound = 1
    for w in widths:
        bound *= math.comb(w + n, n)
    return bound.bit_length() + n.bit_length() + 2


def _decode(value: int, bits: int) -> Poly:
    mask = (1 << bits) - 1
    value = int(value)
    out = []
    while value:
        out.append(int(value & mask))
        value >>= bits
    return tuple(out)




def _rank(tup) -> int:
    """Combinadic rank of a strictly increasing tuple of rows >= 1."""
    return sum(math.comb(x - 1, i + 1) for i, x in enumerate(tup))


@lru_cache(maxsize=None)
def _expand_prog(n: int, k_new: int, floor: int):
    """Activation program: per source rank, the ranks gaining a new top exit.

    The new path enters at row n and descends freely (no corner in its
    start column) to any exit in [max(top + 1, floor), n].
    """
    prog = [()] * math.comb(n, k_new - 1)
    top_binom = [0] + [math.comb(x - 1, k_new) for x in range(1, n + 1)]
    for rest in combinations(range(1, n + 1), k_new - 1):
        lo = max((rest[-1] + 1) if rest else 1, floor)
        base = _rank(rest)
        prog[base] = tuple(base + top_binom[x] for x in range(lo, n + 1))
    return tuple(prog)


@lru_cache(maxsize=None)
def _fold_prog(n: int, k: int, q: int, floor: int, cap: int):
    """Fiber program for folding coordinate q of k exit rows over 1..n.

    Each fiber lists, mid-coordinate descending, the ranks of the states
    that differ only in coordinate q; the window is bounded below by the
    next exit down (and the floor b_q) and above by the next exit up, or
    by the column height when q is the top coordinate (cap > 0).
    """
    mid_binom = [0] + [math.comb(x - 1, q + 1) for x in range(1, n + 1)]
    fibers = []
    for rest in combinations(range(1, n + 1), k - 1):
        base = 0
        for j, y in enumerate(rest):
            base += math.comb(y - 1, j + 1 if j < q else j + 2)
        lo = max((rest[q - 1] + 1) if q else 1, floor)
        hi = (rest[q] - 1) if q < k - 1 else cap
        if hi >= lo:
            fibers.append(tuple(base + mid_binom[x] for x in range(hi, lo - 1, -1)))
    return tuple(fibers)


@lru_cache(maxsize=None)
def _fold_prog_asc(n: int, k: int, q: int, floor: int, cap: int):
    """The fold fibers with the mid coordinate ascending, for transposed folds."""
    return tuple(fiber[::-1] for fiber in _fold_prog(n, k, q, floor, cap))


def _fold_alloc(table: list, prog, bits: int) -> list:
    """One fold, allocating: out[x] = in[x] + t * (accumulated fiber sum)."""
    out = [0] * len(table)
    for fiber in prog:
        vals = [table[rk] for rk in fiber]
        if any(vals):
            for rk, v, s in zip(fiber, vals, accumulate(vals, initial=0)):
                out[rk] = v + (s << bits) if s else v
    return out


def _fold_inplace(table: list, out: list, prog, bits: int, acc) -> list:
    """One fold into reused mutable buffers; no per-slot allocation.

    The accumulated-fiber weighting is the same as _fold_alloc; in-place
    xmpz arithmetic avoids churning the allocator, which dominates the
    cost of wide sweeps.
    """
    for o in out:
        o *= 0
    for fiber in prog:
        live = False
        for rk in fiber:
            v = table[rk]
            o = out[rk]
            if live:
                o += acc
                o <<= bits
                o += v
                if v:
                    acc += v
            elif v:
                o += v
                acc *= 0
                acc += v
                live = True
    return out


class _Tape:
    """A value table plus a spare buffer pool for in-place ping-pong folds."""

    def __init__(self, values):
        if _INPLACE:
            self.cur = [_mutint(v) for v in values]
            self.spare = [_mutint(0) for _ in values]
            self.acc = _mutint(0)
        else:
            self.cur = list(values)
            self.spare = None

    def resize(self, size: int) -> None:
        if _INPLACE:
            self.spare = [_mutint(0) for _ in range(size)]

    def expand(self, prog, size: int) -> None:
        """Give every state a new top exit row per the activation program."""
        if _INPLACE:
            out = self.spare if len(self.spare) == size else [_mutint(0) for _ in range(size)]
            for o in out:
                o *= 0
            for src, v in enumerate(self.cur):
                if v:
                    for dst in prog[src]:
                        o = out[dst]
                        o += v
            self.cur = out
            self.spare = [_mutint(0) for _ in range(size)]
        else:
            out = [0] * size
            for src, v in enumerate(self.cur):
                if v:
                    for dst in prog[src]:
                        out[dst] = v
            self.cur = out

    def fold(self, prog, bits: int) -> None:
        if _INPLACE:
            out = _fold_inplace(self.cur, self.spare, prog, bits, self.acc)
            self.cur, self.spare = out, self.cur
        else:
            self.cur = _fold_alloc(self.cur, prog, bits)


def _sweep_forward(region, a, b, bits, c_lo, c_hi, tape: _Tape, k):
    """Apply the column transitions for columns c_lo..c_hi; no end pinning."""
    n = region.n
    start_of = {col: idx for idx, col in enumerate(a)}
    for c in range(c_lo, c_hi + 1):
        cap = region.column_max(c)
        new_idx = start_of.get(c)
        k_old = k
        if new_idx is not None:
            k += 1
            tape.expand(_expand_prog(n, k, b[new_idx]), math.comb(n, k))
        for q in range(k_old - 1, -1, -1):
            capq = cap if q == k - 1 else 0
            tape.fold(_fold_prog(n, k, q, b[q], capq), bits)
    return tape, k


def _sweep_backward(region, b, bits, c_hi, c_lo, r):
    """Completion weights: table over exits at column c_lo for columns c_lo+1..c_hi.

    Seeds the indicator of the target exits b at column c_hi and pulls it
    left through the transposed transitions; only valid once every path
    has started (no activations in c_lo+1..c_hi).
    """
    n = region.n
    values = [0] * math.comb(n, r)
    values[_rank(tuple(b))] = 1
    tape = _Tape(values)
    for c in range(c_hi, c_lo, -1):
        cap = region.column_max(c)
        for q in range(r):
            capq = cap if q == r - 1 else 0
            tape.fold(_fold_prog_asc(n, r, q, b[q], capq), bits)
    return tape


def _final_column_value(region, a, b, bits, table, k_old):
    """Direct boxed sum onto the single target state b at column m."""
    cap = region.column_max(region.m)
    activates = k_old < len(b)
    windows = []
    for i in range(k_old):
        if i < k_old - 1:
            windows.append(range(b[i], b[i + 1]))
        elif activates:
            windows.append(range(b[i], min(b[i + 1] - 1, cap) + 1))
        else:
            windows.append(range(b[i], cap + 1))
    total = 0
    for p in product(*windows):
        v = table[_rank(p)]
        if v:
            desc = sum(1 for pi, bi in zip(p, b) if pi > bi)
            total += v << (bits * desc)
    return total


# columns beyond the last start before a both-ends sweep pays for itself
_MEET_THRESHOLD = 10


def family_poly(region: LadderRegion, spec: EndpointSpec) -> Poly:
    """W(n, m; b): corner polynomial of all disjoint r-families; 0 if none."""
    spec.validate_for(region)
    r = spec.r
    if r == 0:
        return ONE
    n, m = region.n, region.m
    a, b = tuple(spec.a), tuple(spec.b)
    bits = _kron_bits(n, (m - ai for ai in a))
    if m - a[-1] >= _MEET_THRESHOLD:
        mid = (a[-1] + m) // 2
        fwd, k = _sweep_forward(region, a, b, bits, 1, mid, _Tape([1]), 0)
        bwd = _sweep_backward(region, b, bits, m, mid, r)
        total = 0
        for vf, vb in zip(fwd.cur, bwd.cur):
            if vf and vb:
                total += _bigint(vf) * _bigint(vb)
        return poly(_decode(total, bits))
    tape, k = _sweep_forward(region, a, b, bits, 1, m - 1, _Tape([1]), 0)
    if not any(tape.cur):
        return ZERO
    return poly(_decode(_final_column_value(region, a, b, bits, tape.cur, k), bits))


def wtilde(region: LadderRegion, spec: EndpointSpec) -> Poly:
    """det[W(P_i, Q_j)]: the determinant of the single-path polynomials."""
    spec.validate_for(region)
    starts = spec.start_points(region)
    ends = spec.end_points(region)
    grid = [[single_path_poly(region, P, Q) for Q in ends] for P in starts]
    return poly_det(grid)


def wtilde_step(region: LadderRegion, spec: EndpointSpec) -> Poly:
    """One column peel of the determinant polynomial.

    Evaluates sum over d in S_r with (m, d_r) in the region of
    {d/b} * wtilde(columns 1..m-1, endpoints d); equal to
    wtilde(region, spec) wherever defined.
    """
    spec.validate_for(region)
    if spec.r == 0:
        raise ValueError("the peel needs at least one path")
    if region.m <= spec.a[-1]:
        raise ValueError(f"need m > a_r to peel a column, got m={region.m}, a_r={spec.a[-1]}")
    inner = region.truncate(region.m - 1)
    cap = region.column_max(region.m)
    acc = ZERO
    for d in combinations(range(1, cap + 1), spec.r):
        weight = curly(d, spec.b)
        if not weight:
            continue
        term = wtilde(inner, EndpointSpec(spec.a, IncTuple(d)))
        acc = add(acc, mul(weight, term))
    return acc


def _rhs_support(b: tuple) -> list:
    """All c in S_r with c >= b componentwise and c_r = b_r (where A(b; c) != 0)."""
    out = []

    def build(pos: int, upper: int, suffix: tuple) -> None:
        if pos < 0:
            out.append(suffix)
            return
        for v in range(b[pos], upper):
            build(pos - 1, v, (v,) + suffix)

    build(len(b) - 2, b[-1], (b[-1],))
    return out


def main_rhs(region: LadderRegion, spec: EndpointSpec) -> Poly:
    """sum over c of A(b; c) (1-t)^(sum(c_i - b_i)) W(n, m; c), starts a_i = i.

    For r <= 1 the coefficient calculus degenerates (A needs l >= 2) and
    the sum collapses to the single term W itself.
    """
    spec.validate_for(region)
    if tuple(spec.a) != tuple(range(1, spec.r + 1)):
        raise ValueError("the main identity needs start columns a_i = i")
    if spec.r <= 1:
        return family_poly(region, spec)
    b = tuple(spec.b)
    acc = ZERO
    for c in _rhs_support(b):
        coeff = a_coeff(b, c)
        if not coeff:
            continue
        w = family_poly(region, EndpointSpec.with_default_starts(c))
        if not w:
            continue
        term = mul(w, one_minus_t_pow(sum(ci - bi for ci, bi in zip(c, b))))
        if coeff != 1:
            term = tuple(coeff * x for x in term)
        acc = add(acc, term)
    return acc
