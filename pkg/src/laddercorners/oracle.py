"""Brute-force ground truth by exhaustive path enumeration.

Everything here is intentionally naive: paths are enumerated cell by
cell with depth-first search, corners are counted straight off the
definition, and family disjointness is checked against an explicit
occupied-cell set.  This module is the trust anchor the fast engine and
the closed formulas are verified against, so clarity beats speed.

Enumeration order is deterministic (down before right), and a step
budget guards against accidentally exponential invocations.
"""

from __future__ import annotations

import math

from .polyring import Poly, ZERO, poly
from .region import Cell, EndpointSpec, LadderRegion

DEFAULT_MAX_STEPS = 50_000_000


class OracleBudgetExceeded(RuntimeError):
    """The enumeration would exceed the configured step budget."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, max_steps: int):
        self.left = max_steps

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise OracleBudgetExceeded("oracle step budget exceeded")


def corner_count(cells) -> int:
    """Number of corners of a path: cells (i, j) with (i-1, j) and (i, j-1) on the path."""
    on_path = set(cells)
    return sum(1 for (i, j) in cells if (i - 1, j) in on_path and (i, j - 1) in on_path)


def _paths(region: LadderRegion, P: Cell, Q: Cell, occupied, budget: _Budget):
    """Yield every maximal chain from P to Q avoiding `occupied`, down before right."""
    qi, qj = Q
    if not (region.contains(P) and region.contains(Q)):
        return
    if P[0] > qi or P[1] < qj:
        return  # Q not below P in the order: no chain
    chain = [P]

    def extend(cell: Cell):
        budget.spend()
        if cell in occupied:
            return
        i, j = cell
        if i > qi or j < qj:
            return
        if cell == Q:
            yield tuple(chain)
            return
        for step in ((i, j - 1), (i + 1, j)):  # down first, then right
            if region.contains(step):
                chain.append(step)
                yield from extend(step)
                chain.pop()

    yield from extend(P)


def enumerate_single(region: LadderRegion, P: Cell, Q: Cell, max_steps: int = DEFAULT_MAX_STEPS):
    """Stream of all paths from P to Q inside the region, each exactly once."""
    return _paths(region, P, Q, frozenset(), _Budget(max_steps))


def single_poly_oracle(region: LadderRegion, P: Cell, Q: Cell, max_steps: int = DEFAULT_MAX_STEPS) -> Poly:
    """Sum of t^corners over all paths from P to Q; 0 when no path exists."""
    counts: dict[int, int] = {}
    for path in enumerate_single(region, P, Q, max_steps):
        k = corner_count(path)
        counts[k] = counts.get(k, 0) + 1
    return _from_counts(counts)


def _pair_count_bound(region: LadderRegion, P: Cell, Q: Cell) -> int:
    # rectangle path count dominates the ladder count
    dright = max(0, Q[0] - P[0])
    ddown = max(0, P[1] - Q[1])
    return math.comb(dright + ddown, dright)


def family_poly_oracle(
    region: LadderRegion, spec: EndpointSpec, max_steps: int = DEFAULT_MAX_STEPS
) -> Poly:
    """Sum of t^(total corners) over all r-tuples of pairwise disjoint paths.

    Rejects instances whose a-priori work estimate (the product of the
    single-path counts) already exceeds max_steps, then counts every
    DFS extension against the same budget while enumerating.
    """
    spec.validate_for(region)
    starts = spec.start_points(region)
    ends = spec.end_points(region)
    estimate = 1
    for P, Q in zip(starts, ends):
        estimate *= max(1, _pair_count_bound(region, P, Q))
        if estimate > max_steps:
            raise OracleBudgetExceeded(
                f"a-priori path-count estimate {estimate} exceeds budget {max_steps}"
            )
    budget = _Budget(max_steps)
    counts: dict[int, int] = {}
    occupied: set = set()

    def place(idx: int, corners: int) -> None:
        if idx == len(starts):
            counts[corners] = counts.get(corners, 0) + 1
            return
        for path in _paths(region, starts[idx], ends[idx], occupied, budget):
            occupied.update(path)
            place(idx + 1, corners + corner_count(path))
            occupied.difference_update(path)

    place(0, 0)
    return _from_counts(counts)


def _from_counts(counts: dict) -> Poly:
    if not counts:
        return ZERO
    out = [0] * (max(counts) + 1)
    for k, c in counts.items():
        out[k] = c
    return poly(out)
