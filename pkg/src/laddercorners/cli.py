"""Command-line front end.

Polynomial results are printed in two lines: the machine format (space
separated ascending coefficients) and the human format.  Results go to
stdout, diagnostics and timings to stderr.  Exit status: 0 for success
or a holding identity, 1 for a violated identity (or a failed exact
division, which is the same thing), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import engine, oracle, verifier
from .acoeff import a_coeff, b1, b2, b3
from .brackets import IncTuple
from .polyring import NotDivisible, Poly, to_human, to_machine
from .region import EndpointSpec, LadderRegion, RegionParseError, parse_region, rectangle

_RECT = re.compile(r"^rect(\d+)x(\d+)$")


class UsageError(Exception):
    pass


def _load_region(token: str) -> LadderRegion:
    preset = _RECT.match(token)
    if preset:
        return rectangle(int(preset.group(1)), int(preset.group(2)))
    path = Path(token)
    if not path.exists():
        raise UsageError(f"region file {token!r} not found (or use a rectMxN preset)")
    try:
        return parse_region(path.read_text(encoding="utf-8"))
    except RegionParseError as exc:
        raise UsageError(f"{token}: {exc}") from None


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _print_poly(p: Poly) -> None:
    print(to_machine(p))
    print(to_human(p))


def _spec_args(args) -> EndpointSpec:
    b = IncTuple(_int_list(args.b))
    if getattr(args, "a", None):
        return EndpointSpec(IncTuple(_int_list(args.a)), b)
    return EndpointSpec.with_default_starts(b)


def _cmd_w(args) -> int:
    region = _load_region(args.region)
    _print_poly(engine.family_poly(region, _spec_args(args)))
    return 0


def _cmd_wtilde(args) -> int:
    region = _load_region(args.region)
    _print_poly(engine.wtilde(region, _spec_args(args)))
    return 0


def _cmd_oracle(args) -> int:
    region = _load_region(args.region)
    _print_poly(oracle.family_poly_oracle(region, _spec_args(args), args.max_steps))
    return 0


def _cmd_acoeff(args) -> int:
    print(a_coeff(_int_list(args.b), _int_list(args.c)))
    return 0


def _cmd_bform(args) -> int:
    fn = {1: b1, 2: b2, 3: b3}[args.which]
    _print_poly(fn(IncTuple(_int_list(args.b)), IncTuple(_int_list(args.c))))
    return 0


def _check_params(args) -> dict:
    params: dict = {}
    if args.region:
        params["region"] = _load_region(args.region)
    for key in ("a", "b", "c"):
        val = getattr(args, key)
        if val is not None:
            params[key] = _int_list(val)
    for key in ("m", "n", "r", "e", "b_extra", "b_new", "seed", "max_steps"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.instance:
        params.update(verifier.params_from_instance(args.name, args.instance))
    # lem3_3 uses scalar b and c
    if args.name == "lem3_3":
        for key in ("b", "c"):
            if key in params:
                (params[key],) = params[key]
    return params


def _cmd_check(args) -> int:
    report = verifier.check_identity(args.name, _check_params(args))
    print(f"{args.name} {'pass' if report.passed else 'FAIL'} {report.instance}")
    print(f"lhs {to_machine(report.lhs)}")
    print(f"rhs {to_machine(report.rhs)}")
    print(f"elapsed_ms {int(report.elapsed * 1000)}", file=sys.stderr)
    return 0 if report.passed else 1


def _cmd_suite(args) -> int:
    config = verifier.SuiteConfig(
        seed=args.seed,
        cases=args.cases,
        max_m=args.max_m,
        max_n=args.max_n,
        max_r=args.max_r,
        oracle_budget=args.oracle_budget,
    )
    summary = verifier.run_suite(config)
    for report in summary.reports:
        print(report.line())
    print(summary.line())
    return 0 if summary.failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laddercorners",
        description="Corner-counting polynomials for non-intersecting path families in ladder regions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_region_spec(p, with_a=True):
        p.add_argument("--region", required=True, help="region file or rectMxN preset")
        p.add_argument("--b", required=True, help="end heights, comma separated")
        if with_a:
            p.add_argument("--a", help="start columns, comma separated (default 1..r)")

    p = sub.add_parser("w", help="family corner polynomial via the column-transfer engine")
    add_region_spec(p)
    p.set_defaults(fn=_cmd_w)

    p = sub.add_parser("wtilde", help="determinant of the single-path corner polynomials")
    add_region_spec(p, with_a=False)
    p.set_defaults(fn=_cmd_wtilde)

    p = sub.add_parser("oracle", help="family corner polynomial by brute-force enumeration")
    add_region_spec(p)
    p.add_argument("--max-steps", type=int, default=oracle.DEFAULT_MAX_STEPS)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("acoeff", help="the integer coefficient A(b; c)")
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(fn=_cmd_acoeff)

    p = sub.add_parser("bform", help="one of the three B-sums")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(fn=_cmd_bform)

    p = sub.add_parser("check", help="run one named identity check")
    p.add_argument("name", choices=verifier.IDENTITY_NAMES)
    p.add_argument("--region")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--b-extra", dest="b_extra", type=int)
    p.add_argument("--b-new", dest="b_new", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-steps", dest="max_steps", type=int)
    p.add_argument("--instance", help="replay a serialized instance string")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("suite", help="seeded random-instance verification suite")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cases", type=int, required=True)
    p.add_argument("--max-m", dest="max_m", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--max-r", dest="max_r", type=int, required=True)
    p.add_argument("--oracle-budget", dest="oracle_budget", type=int, default=500_000)
    p.set_defaults(fn=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except NotDivisible as exc:
        print(f"identity violated: {exc}", file=sys.stderr)
        return 1
    except (UsageError, verifier.UnknownIdentity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, oracle.OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
