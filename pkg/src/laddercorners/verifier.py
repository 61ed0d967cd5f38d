"""Named, replayable identity checks and the seeded random-instance suite.

Every check evaluates its two sides through disjoint code paths (closed
form or transfer engine on one side, oracle or an alternative formula on
the other) and compares exact polynomials; a single coefficient mismatch
is a failure.  A CheckReport's instance string is enough to reproduce
the run via check_identity(name, params_from_instance(name, instance)).

Suite instances are generated from a seeded PRNG, so identical configs
produce identical instance streams; the generator for each case is
seeded with "<seed>:<index>", which CPython hashes with SHA-512, making
the stream stable across platforms and runs.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product

from . import closedform, engine, oracle
from .acoeff import b1, b2, b3
from .brackets import IncTuple, sq_scalar, sq_tuple
from .polyring import (
    NotDivisible,
    ONE,
    Poly,
    ZERO,
    add,
    div_t_power,
    mul,
    neg,
    one_minus_t_pow,
    poly,
    poly_eval,
    sub,
    t_power,
)
from .region import EndpointSpec, LadderRegion, rectangle


class UnknownIdentity(ValueError):
    """check_identity was asked for a name it does not know."""


@dataclass
class CheckReport:
    name: str
    instance: str
    lhs: Poly
    rhs: Poly
    passed: bool
    elapsed: float
    skipped: bool = False

    def line(self) -> str:
        status = "skipped" if self.skipped else ("pass" if self.passed else "FAIL")
        return f"{self.name} {status} {int(self.elapsed * 1000)} {self.instance}"


@dataclass(frozen=True)
class SuiteConfig:
    seed: int
    cases: int
    max_m: int
    max_n: int
    max_r: int
    oracle_budget: int = 500_000

    def __post_init__(self):
        if min(self.max_m, self.max_n, self.max_r) < 1:
            raise ValueError("suite bounds must be >= 1")
        if self.cases < 0:
            raise ValueError("cases must be >= 0")


@dataclass
class SuiteSummary:
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    reports: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def add(self, report: CheckReport) -> None:
        self.reports.append(report)
        self.total += 1
        if report.passed:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(report)

    def line(self) -> str:
        return f"total {self.total} passed {self.passed} failed {self.failed} skipped {self.skipped}"


# --- instance (de)serialization -------------------------------------------

def _fmt_tuple(xs) -> str:
    return ",".join(str(x) for x in xs)


def _fmt_region(region: LadderRegion) -> str:
    return f"{region.m}x{region.n}:{_fmt_tuple(region.g)}"


def _parse_region_token(tok: str) -> LadderRegion:
    size, _, profile = tok.partition(":")
    m, _, n = size.partition("x")
    if not profile:
        return rectangle(int(m), int(n))
    return LadderRegion(int(m), int(n), tuple(int(x) for x in profile.split(",")))


def instance_string(params: dict) -> str:
    parts = []
    for key in sorted(params):
        val = params[key]
        if isinstance(val, LadderRegion):
            parts.append(f"{key}={_fmt_region(val)}")
        elif isinstance(val, (tuple, list)):
            parts.append(f"{key}={_fmt_tuple(val)}")
        else:
            parts.append(f"{key}={val}")
    return " ".join(parts)


_TUPLE_KEYS = {"a", "b", "c"}
_INT_KEYS = {"m", "n", "r", "e", "lo", "hi", "b_extra", "b_new", "seed", "max_steps"}


def params_from_instance(name: str, instance: str) -> dict:
    """Rebuild a params dict from a serialized instance string."""
    params: dict = {}
    for part in instance.split():
        key, _, val = part.partition("=")
        if not val:
            raise ValueError(f"malformed instance fragment {part!r}")
        if key == "region":
            params[key] = _parse_region_token(val)
        elif key in _TUPLE_KEYS:
            params[key] = tuple(int(x) for x in val.split(","))
        elif key in _INT_KEYS:
            params[key] = int(val)
        else:
            raise ValueError(f"unknown instance key {key!r} for {name}")
    return params


# --- individual identities --------------------------------------------------

def _first_mismatch(pairs):
    """(lhs, rhs, all_equal) with the first differing pair, or the first pair."""
    first = None
    for lhs, rhs in pairs:
        if first is None:
            first = (lhs, rhs)
        if lhs != rhs:
            return lhs, rhs, False
    return first[0], first[1], True


def _check_thm1_1(params):
    m, n = params["m"], params["n"]
    a, b = IncTuple(params["a"]), IncTuple(params["b"])
    lhs = closedform.kk_det(m, n, a, b)
    rhs = oracle.family_poly_oracle(
        rectangle(m, n), EndpointSpec(a, b), params.get("max_steps", oracle.DEFAULT_MAX_STEPS)
    )
    return lhs, rhs, lhs == rhs


def _check_eq2(params):
    m, n, r = params["m"], params["n"], params["r"]
    lhs = closedform.conca_herzog_det(m, n, r)
    spec = EndpointSpec.with_default_starts(range(1, r + 1))
    rhs = oracle.family_poly_oracle(
        rectangle(m, n), spec, params.get("max_steps", oracle.DEFAULT_MAX_STEPS)
    )
    return lhs, rhs, lhs == rhs


def _check_lem2_1(params):
    n, b = params["n"], IncTuple(params["b"])
    r = len(b)
    region = rectangle(r, n)
    spec = EndpointSpec.with_default_starts(b)
    lhs = engine.wtilde(region, spec)
    count = poly_eval(engine.family_poly(region, spec), 1)
    rhs = mul(poly((count,)), t_power(math.comb(r, 2)))
    return lhs, rhs, lhs == rhs


def _check_cor2_2(params):
    n, b = params["n"], IncTuple(params["b"])
    r = len(b)
    region = rectangle(r, n)
    lhs = div_t_power(engine.wtilde(region, EndpointSpec.with_default_starts(b)), math.comb(r, 2))
    if r == 1:
        rhs = ONE
    else:
        inner = rectangle(r - 1, b[-1] - 1)
        acc = ZERO
        for c in product(*(range(b[i], b[i + 1]) for i in range(r - 1))):
            acc = add(acc, engine.wtilde(inner, EndpointSpec.with_default_starts(c)))
        rhs = div_t_power(acc, math.comb(r - 1, 2))
    return lhs, rhs, lhs == rhs


def _spec_from(params):
    b = IncTuple(params["b"])
    if "a" in params:
        return EndpointSpec(IncTuple(params["a"]), b)
    return EndpointSpec.with_default_starts(b)


def _check_lem2_3i(params):
    region = params["region"]
    spec = _spec_from(params)
    lhs = engine.wtilde(region, spec)
    rhs = engine.wtilde_step(region, spec)
    return lhs, rhs, lhs == rhs


def _check_lem2_3ii(params):
    region = params["region"]
    spec = _spec_from(params)
    if region.m <= spec.a[-1]:
        raise ValueError("the column peel needs m > a_r")
    lhs = engine.family_poly(region, spec)
    inner = region.truncate(region.m - 1)
    cap = region.column_max(region.m)
    acc = ZERO
    for d in combinations(range(1, cap + 1), spec.r):
        weight = sq_tuple(d, spec.b)
        if not weight:
            continue
        acc = add(acc, mul(weight, engine.family_poly(inner, EndpointSpec(spec.a, IncTuple(d)))))
    return lhs, acc, lhs == acc


def _check_lem3_3(params):
    b, e, c = params["b"], params["e"], params["c"]
    if not 1 <= b <= e <= c:
        raise ValueError("need 1 <= b <= e <= c")
    lhs1 = ZERO
    for d in range(e, c + 1):
        lhs1 = add(lhs1, mul(sq_scalar(c, d), one_minus_t_pow(d - b)))
    rhs1 = one_minus_t_pow(e - b)
    lhs2 = ZERO
    for d in range(b, e + 1):
        lhs2 = add(lhs2, mul(sq_scalar(d, b), one_minus_t_pow(c - d)))
    rhs2 = one_minus_t_pow(c - e)
    return _first_mismatch([(lhs1, rhs1), (lhs2, rhs2)])


def _check_lem3_4(params):
    b, c = IncTuple(params["b"]), IncTuple(params["c"])
    if len(b) != len(c):
        raise ValueError("tuples must have equal length")
    l = len(b)
    lhs = ZERO  # sum over d >= b of [c/d] (1-t)^sum(d - b)
    for d in product(*(range(b[i], max(b[i], c[i]) + 1) for i in range(l))):
        if any(d[i] >= d[i + 1] for i in range(l - 1)):
            continue
        bracket = sq_tuple(c, d)
        if bracket:
            lhs = add(lhs, mul(bracket, one_minus_t_pow(sum(d) - sum(b))))
    rhs = ZERO  # sum over d <= c of [d/b] (1-t)^sum(c - d)
    for d in product(*(range(min(b[i], c[i]), c[i] + 1) for i in range(l))):
        if any(d[i] >= d[i + 1] for i in range(l - 1)):
            continue
        bracket = sq_tuple(d, b)
        if bracket:
            rhs = add(rhs, mul(bracket, one_minus_t_pow(sum(c) - sum(d))))
    return lhs, rhs, lhs == rhs


def _check_lem3_5(params):
    b, c = IncTuple(params["b"]), IncTuple(params["c"])
    if len(b) != 2 or len(c) != 2:
        raise ValueError("this identity is about pairs")
    if b[0] <= c[0] <= b[1] - 1:
        stated = sq_scalar(c[1], b[1])
    else:  # c_1 < b_1 or c_1 >= b_2
        stated = ZERO
    return _first_mismatch([(b1(b, c), stated), (b2(b, c), stated)])


def _window_sum(windows, f) -> Poly:
    acc = ZERO
    for d in product(*windows):
        acc = add(acc, f[d])
    return acc


def lemma_3_6_windows(b, b_extra: int):
    """The l shifted window boxes and the base box of the alternating-sum identity."""
    b = IncTuple(b)
    l = len(b)
    if l < 3:
        raise ValueError("need l >= 3")
    if b_extra <= b[-1]:
        raise ValueError(f"need b_extra > b_l, got {b_extra} <= {b[-1]}")
    shifted = []
    for i in range(1, l + 1):
        w = b[: i - 1] + b[i:] + (b_extra,)
        shifted.append([range(w[j], w[j + 1]) for j in range(l - 1)])
    base = [range(b[j], b[j + 1]) for j in range(l - 1)]
    return shifted, base


def check_lemma_3_6(b, b_extra: int, f) -> CheckReport:
    """Compare the alternating sum over the l index-shift maps with (-1)^l times the base sum.

    f maps (l-1)-tuples to polynomials and must be defined on every
    tuple in the summation windows.
    """
    start = time.perf_counter()
    b = IncTuple(b)
    shifted, base = lemma_3_6_windows(b, b_extra)
    try:
        lhs = ZERO
        for i, windows in enumerate(shifted, start=1):
            part = _window_sum(windows, f)
            lhs = add(lhs, part) if i % 2 == 0 else sub(lhs, part)
        rhs = _window_sum(base, f)
        if len(b) % 2 == 1:
            rhs = neg(rhs)
    except KeyError as exc:
        raise ValueError(f"f is not defined on required tuple {exc.args[0]}") from None
    instance = instance_string({"b": b, "b_extra": b_extra})
    return CheckReport("lem3_6", instance, lhs, rhs, lhs == rhs, time.perf_counter() - start)


def random_poly_table(b, b_extra: int, seed: int) -> dict:
    """A seeded random f table covering all windows of the lemma; replayable."""
    shifted, base = lemma_3_6_windows(b, b_extra)
    needed = set()
    for windows in shifted + [base]:
        needed.update(product(*windows))
    rng = random.Random(f"lem3_6:{seed}")
    table = {}
    for d in sorted(needed):
        table[d] = poly(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
    return table


def _check_lem3_6(params):
    b = IncTuple(params["b"])
    b_extra = params["b_extra"]
    f = random_poly_table(b, b_extra, params.get("seed", 0))
    report = check_lemma_3_6(b, b_extra, f)
    return report.lhs, report.rhs, report.passed


def _check_thm3_1(params):
    b, c = IncTuple(params["b"]), IncTuple(params["c"])
    pairs = [(b1(b, c), b2(b, c))]
    if len(b) >= 3 and b[-1] == c[-1]:
        pairs.append((pairs[0][0], b3(b, c)))
    return _first_mismatch(pairs)


def _check_rem3_2i(params):
    b, c = IncTuple(params["b"]), IncTuple(params["c"])
    if c[-2] < b[-1]:
        raise ValueError("this vanishing statement needs c_{l-1} >= b_l")
    lhs = b2(b, c)
    return lhs, ZERO, lhs == ZERO


def _check_rem3_2ii(params):
    b, c = IncTuple(params["b"]), IncTuple(params["c"])
    b_new = params["b_new"]
    if b[-1] != c[-1]:
        raise ValueError("B_3 needs b_l = c_l")
    if b_new <= max(b[-2], c[-2]):
        raise ValueError("need b_new > max(b_{l-1}, c_{l-1})")
    lhs = b3(b, c)
    rhs = b3(b[:-1] + (b_new,), c[:-1] + (b_new,))
    return lhs, rhs, lhs == rhs


def _check_thm4_2(params):
    region = params["region"]
    spec = EndpointSpec.with_default_starts(params["b"])
    wt = engine.wtilde(region, spec)
    rhs = engine.main_rhs(region, spec)
    k = math.comb(spec.r, 2)
    try:
        lhs = div_t_power(wt, k)
    except NotDivisible:
        # report the undivided comparison; the identity failed
        return wt, mul(t_power(k), rhs), False
    return lhs, rhs, lhs == rhs


def _check_prop4_1(params):
    if len(params["b"]) != 2:
        raise ValueError("this is the two-path case")
    return _check_thm4_2(params)


def _check_w_vs_oracle(params):
    region = params["region"]
    spec = _spec_from(params)
    lhs = engine.family_poly(region, spec)
    rhs = oracle.family_poly_oracle(region, spec, params.get("max_steps", oracle.DEFAULT_MAX_STEPS))
    return lhs, rhs, lhs == rhs


_CHECKS = {
    "thm1_1": _check_thm1_1,
    "eq2": _check_eq2,
    "lem2_1": _check_lem2_1,
    "cor2_2": _check_cor2_2,
    "lem2_3i": _check_lem2_3i,
    "lem2_3ii": _check_lem2_3ii,
    "lem3_3": _check_lem3_3,
    "lem3_4": _check_lem3_4,
    "lem3_5": _check_lem3_5,
    "lem3_6": _check_lem3_6,
    "thm3_1": _check_thm3_1,
    "rem3_2i": _check_rem3_2i,
    "rem3_2ii": _check_rem3_2ii,
    "prop4_1": _check_prop4_1,
    "thm4_2": _check_thm4_2,
    "w_vs_oracle": _check_w_vs_oracle,
}

IDENTITY_NAMES = tuple(sorted(_CHECKS))


def check_identity(name: str, params: dict) -> CheckReport:
    """Evaluate both sides of the named identity and compare exactly."""
    fn = _CHECKS.get(name)
    if fn is None:
        raise UnknownIdentity(f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}")
    start = time.perf_counter()
    try:
        lhs, rhs, passed = fn(params)
    except KeyError as exc:
        raise ValueError(f"{name} needs parameter {exc.args[0]!r}") from None
    return CheckReport(name, instance_string(params), lhs, rhs, passed, time.perf_counter() - start)


# --- suite -------------------------------------------------------------------

def gen_instance(config: SuiteConfig, index: int):
    """Deterministic pseudorandom (region, spec) pair within the bounds."""
    if not 0 <= index < config.cases:
        raise ValueError(f"index {index} outside 0..{config.cases - 1}")
    rng = random.Random(f"{config.seed}:{index}")
    m = rng.randint(1, config.max_m)
    n = rng.randint(1, config.max_n)
    r = rng.randint(1, min(config.max_r, m, n))
    g = [n] * m
    for i in range(r, m):
        g[i] = rng.randint(r, g[i - 1])
    region = LadderRegion(m, n, tuple(g))
    b = IncTuple(sorted(rng.sample(range(1, region.column_max(m) + 1), r)))
    return region, EndpointSpec.with_default_starts(b)


def run_suite(config: SuiteConfig) -> SuiteSummary:
    """Run thm4_2 plus the peel and oracle cross-checks on every generated instance."""
    summary = SuiteSummary()
    for index in range(config.cases):
        region, spec = gen_instance(config, index)
        base = {"region": region, "b": tuple(spec.b)}
        summary.add(check_identity("thm4_2", base))
        if region.m > spec.r:
            summary.add(check_identity("lem2_3i", base))
            summary.add(check_identity("lem2_3ii", base))
        try:
            summary.add(
                check_identity("w_vs_oracle", dict(base, max_steps=config.oracle_budget))
            )
        except oracle.OracleBudgetExceeded:
            summary.skipped += 1
            summary.reports.append(
                CheckReport(
                    "w_vs_oracle", instance_string(base), ZERO, ZERO, True, 0.0, skipped=True
                )
            )
    return summary
