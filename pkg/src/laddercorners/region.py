"""One-sided ladder regions and endpoint data.

A ladder region sits inside an m x n grid of cells (i, j), 1 <= i <= m,
1 <= j <= n, and is cut by a staircase on the upper right: column i
keeps the rows 1..g(i), where the profile g is non-increasing and
g(1) = n.  A rectangle is the special case g == n everywhere.

The partial order is (i, j) <= (i', j') iff i >= i' and j <= j'; paths
run from a point on the top row down-right to a point on the last
column.  An r-family is described by an EndpointSpec: start columns
a_1 < ... < a_r (start points (a_i, n)) and end heights b_1 < ... < b_r
(end points (m, b_i)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brackets import IncTuple

Cell = tuple  # (column, row), both 1-based


class InvalidProfile(ValueError):
    """The column-height profile violates the staircase invariants."""


class RegionParseError(ValueError):
    """A region file failed to parse; carries line/column diagnostics."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class LadderRegion:
    m: int
    n: int
    g: tuple

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        if self.m < 1 or self.n < 1:
            raise InvalidProfile(f"need m, n >= 1, got {self.m} x {self.n}")
        if len(self.g) != self.m:
            raise InvalidProfile(f"profile has {len(self.g)} entries, expected {self.m}")
        if self.g[0] != self.n:
            raise InvalidProfile(f"g(1) must equal n={self.n}, got {self.g[0]}")
        for i, h in enumerate(self.g):
            if not 1 <= h <= self.n:
                raise InvalidProfile(f"g({i + 1})={h} outside 1..{self.n}")
            if i and self.g[i - 1] < h:
                raise InvalidProfile(f"profile must be non-increasing, g({i})={self.g[i - 1]} < g({i + 1})={h}")

    @property
    def is_rectangle(self) -> bool:
        return all(h == self.n for h in self.g)

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= self.m and 1 <= j <= self.n and j <= self.g[i - 1]

    def column_max(self, i: int) -> int:
        """g(i), the highest row kept in column i."""
        if not 1 <= i <= self.m:
            raise ValueError(f"column {i} outside 1..{self.m}")
        return self.g[i - 1]

    def truncate(self, m_new: int) -> "LadderRegion":
        """The sub-region on columns 1..m_new (used by the column peel)."""
        if not 1 <= m_new <= self.m:
            raise ValueError(f"cannot truncate to {m_new} columns")
        return LadderRegion(m_new, self.n, self.g[:m_new])


def make_region(m: int, n: int, g) -> LadderRegion:
    return LadderRegion(m, n, tuple(g))


def rectangle(m: int, n: int) -> LadderRegion:
    return LadderRegion(m, n, (n,) * m)


@dataclass(frozen=True)
class EndpointSpec:
    """Start columns and end heights of an r-family of paths.

    a and b are strictly increasing; r = 0 is the degenerate empty
    family.  Region-dependent constraints (a_r <= m, b_r <= g(m),
    g(a_r) = n) are checked by validate_for.
    """

    a: IncTuple
    b: IncTuple

    def __post_init__(self):
        object.__setattr__(self, "a", IncTuple(self.a))
        object.__setattr__(self, "b", IncTuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError(f"a has length {len(self.a)}, b has length {len(self.b)}")

    @property
    def r(self) -> int:
        return len(self.b)

    @staticmethod
    def with_default_starts(b) -> "EndpointSpec":
        """The spec with a_i = i, the shape all main-theorem checks use."""
        b = IncTuple(b)
        return EndpointSpec(IncTuple(range(1, len(b) + 1)), b)

    def validate_for(self, region: LadderRegion) -> None:
        if self.r == 0:
            return
        if self.a[-1] > region.m:
            raise ValueError(f"start column a_r={self.a[-1]} beyond m={region.m}")
        if self.b[-1] > region.column_max(region.m):
            raise ValueError(
                f"end height b_r={self.b[-1]} above g(m)={region.column_max(region.m)}"
            )
        if region.column_max(self.a[-1]) != region.n:
            raise ValueError(
                f"start point ({self.a[-1]}, {region.n}) outside the region"
            )

    def start_points(self, region: LadderRegion) -> list:
        return [(ai, region.n) for ai in self.a]

    def end_points(self, region: LadderRegion) -> list:
        return [(region.m, bi) for bi in self.b]


def parse_region(text: str) -> LadderRegion:
    """Parse the region file format: "m n" on line 1, the profile on line 2."""
    lines = text.split("\n")
    # allow exactly one trailing newline, nothing else after line 2
    while lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise RegionParseError(max(1, len(lines)), 1, f"expected 2 lines, got {len(lines)}")

    def ints(line_no: int, line: str, expected: int | None) -> list:
        toks = line.split(" ")
        col = 1
        out = []
        for tok in toks:
            if tok == "":
                raise RegionParseError(line_no, col, "stray whitespace")
            try:
                out.append(int(tok))
            except ValueError:
                raise RegionParseError(line_no, col, f"expected an integer, got {tok!r}") from None
            col += len(tok) + 1
        if expected is not None and len(out) != expected:
            raise RegionParseError(line_no, col, f"expected {expected} integers, got {len(out)}")
        return out

    header = ints(1, lines[0], 2)
    m, n = header
    profile = ints(2, lines[1], m if m >= 1 else None)
    try:
        return LadderRegion(m, n, tuple(profile))
    except InvalidProfile as exc:
        raise RegionParseError(2, 1, str(exc)) from None


def format_region(region: LadderRegion) -> str:
    return f"{region.m} {region.n}\n{' '.join(str(h) for h in region.g)}\n"
