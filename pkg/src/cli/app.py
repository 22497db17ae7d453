"""
Command-line driver: prints results and writes JSON certificates.

Exit codes: 0 when every report passes, 1 when any report fails,
2 for usage, parse or resource errors (a SKIP counts as a resource error).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from config import LabConfig, default_config
from groups import GroupElement, Mat
from hecke import build_hecke_polynomial, diff_against_fixture, specialize, verify_dictionary, write_fixture
from lab import (
    Profile,
    Variant,
    check_congruence_theorem,
    check_divisibility_lemma,
    check_root_identity,
    construct_horizontal_lift,
    parse_level,
    reports_json,
    run_suite,
    sort_reports,
)
from localfield import parse_field_elem
from orbits import Level, class_invariant, conductor, normal_form, refined_key
from orders import check_local_orders
from utils import (
    CheckStatus,
    DomainError,
    HeckeLabError,
    OperationBudget,
    Report,
    configure_logging,
    guarded,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_path", default=argparse.SUPPRESS,
                        help="Write the JSON result to this path ('-' for stdout)")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="Log level for the stderr sink")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="Operation cap per check")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="Worker processes for the suite")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="heckelab", parents=[common],
                                     description="Exact verification of local Hecke-polynomial identities.")
    commands = parser.add_subparsers(dest="command", required=True)

    poly = commands.add_parser("hecke-poly", parents=[common], help="Print or compare the Hecke polynomial")
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--q", type=int, help="Specialize s^2 = q")
    poly.add_argument("--fixture", help="Compare against this fixture file")
    poly.add_argument("--write", metavar="DIR", help="Write the symbolic polynomial as a fixture into DIR")

    verify = commands.add_parser("verify", parents=[common], help="Run one verifier")
    checks = verify.add_subparsers(dest="check", required=True)
    for name in ("root", "satake", "lift"):
        sub = checks.add_parser(name, parents=[common])
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--q", type=int, required=True)
    div = checks.add_parser("divisibility", parents=[common])
    div.add_argument("--n", type=int, required=True)
    div.add_argument("--q", type=int, required=True)
    div.add_argument("--k", type=int, required=True)
    cong = checks.add_parser("congruence", parents=[common])
    cong.add_argument("--n", type=int, required=True)
    cong.add_argument("--q", type=int, required=True)
    cong.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.TILDE.value)
    cong.add_argument("--level", choices=["hder", "h0"], default="h0")
    orders = checks.add_parser("orders", parents=[common])
    orders.add_argument("--q", type=int, required=True)
    orders.add_argument("--eps", type=int, choices=[1, -1], required=True)
    orders.add_argument("--cmax", type=int, default=3)

    nf = commands.add_parser("normal-form", parents=[common], help="Normal form and refined keys of (g1, g2)")
    nf.add_argument("--n", type=int, required=True)
    nf.add_argument("--q", type=int, required=True)
    nf.add_argument("--matrix", required=True, help="g1 rows, a line '---', then g2 rows")

    suite = commands.add_parser("suite", parents=[common], help="Run the acceptance grid")
    suite.add_argument("--profile", choices=[p.value for p in Profile], default=Profile.QUICK.value,
                       help="quick trims the random trials to 50 and skips the stabilizer (2, 3) and n=2 root cells; "
                            "full runs the configured trial counts and the whole grid")
    return parser


def _config(args: argparse.Namespace) -> LabConfig:
    updates = {}
    if hasattr(args, "log_level"):
        updates["log_level"] = args.log_level
    if hasattr(args, "cap"):
        updates["operation_cap"] = args.cap
        updates["orders_cap"] = args.cap
    if hasattr(args, "jobs"):
        updates["jobs"] = args.jobs
    return default_config.model_copy(update=updates)


def _emit(text: str, json_path: Optional[str]) -> None:
    if json_path in (None, "-"):
        print(text)
        return
    path = Path(json_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n")
    logger.info(f"Wrote {path}")


def exit_code(reports: Sequence[Report]) -> int:
    if any(r.status == CheckStatus.FAIL for r in reports):
        return EXIT_FAIL
    if any(r.status == CheckStatus.SKIP for r in reports):
        return EXIT_USAGE
    return EXIT_OK


def _finish(reports: List[Report], args: argparse.Namespace) -> int:
    reports = sort_reports(reports)
    for r in reports:
        line = f"{r.status.value:<13} {r.check} {json.dumps(r.params, sort_keys=True)}"
        print(line if r.witness is None else f"{line} witness={json.dumps(r.witness, sort_keys=True)}")
    json_path = getattr(args, "json_path", None)
    if json_path:
        _emit(reports_json(reports), json_path)
    return exit_code(reports)


def parse_matrix_file(path: str, n: int, q: int) -> GroupElement:
    """g1 rows (n+1 of them), a separator line '---', then n rows of g2."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise DomainError(f"cannot read matrix file {path}: {e}") from e
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if lines.count("---") != 1:
        raise DomainError(f"{path}: expected exactly one '---' separator line")
    cut = lines.index("---")
    blocks: Tuple[List[str], List[str]] = (lines[:cut], lines[cut + 1:])
    mats = []
    for rows, size in zip(blocks, (n + 1, n)):
        if len(rows) != size:
            raise DomainError(f"{path}: expected {size} rows, got {len(rows)}")
        parsed = [[parse_field_elem(entry, q) for entry in row.split()] for row in rows]
        mats.append(Mat.from_rows(parsed, q))
    return GroupElement(mats[0], mats[1])


def _hecke_poly(args: argparse.Namespace, config: LabConfig) -> int:
    poly = build_hecke_polynomial(args.n)
    if args.write:
        write_fixture(poly, args.write)
    if args.fixture:
        problems = diff_against_fixture(poly, args.fixture)
        for line in problems:
            print(line)
        if problems:
            return EXIT_FAIL
        print(f"Hecke polynomial for n={args.n} matches {args.fixture}")
        return EXIT_OK
    shown = specialize(poly, args.q) if args.q else poly
    print(shown.render())
    return EXIT_OK


def _verify(args: argparse.Namespace, config: LabConfig) -> int:
    cap = config.operation_cap
    if args.check == "root":
        reports = [check_root_identity(args.n, args.q, cap)]
    elif args.check == "divisibility":
        reports = [check_divisibility_lemma(args.n, args.q, args.k, cap)]
    elif args.check == "congruence":
        reports = [check_congruence_theorem(args.n, args.q, Variant(args.variant), parse_level(args.level), cap)]
    elif args.check == "lift":
        x, report = construct_horizontal_lift(args.n, args.q, cap=cap)
        logger.info(f"Lift has {len(x)} terms")
        reports = [report]
    elif args.check == "satake":
        params = {"n": args.n, "q": args.q}
        reports = [guarded("satake-dictionary", params,
                           lambda: verify_dictionary(args.n, args.q, OperationBudget(cap)))]
    else:
        reports = [check_local_orders(args.q, args.eps, args.cmax, config.orders_cap)]
    return _finish(reports, args)


def _normal_form(args: argparse.Namespace, config: LabConfig) -> int:
    g = parse_matrix_file(args.matrix, args.n, args.q)
    nf, witness = normal_form(g)
    inv = class_invariant(nf)
    keys = {level.value: refined_key(g, level).token() for level in Level}
    result = {
        "normal_form": nf.token(),
        "invariant": inv.token(),
        "conductor": conductor(inv),
        "witness": {"shift": witness.shift, "unit": witness.unit.render()},
        "keys": keys,
    }
    print(f"normal form  {nf.token()}")
    print(f"invariant    {inv.token()}")
    print(f"conductor    {conductor(inv)}")
    print(f"det witness  w^{witness.shift} * ({witness.unit.render()})")
    for level, token in keys.items():
        print(f"{level:<12} {token}")
    json_path = getattr(args, "json_path", None)
    if json_path:
        _emit(json.dumps(result, sort_keys=True, indent=2), json_path)
    return EXIT_OK


def _suite(args: argparse.Namespace, config: LabConfig) -> int:
    return _finish(run_suite(Profile(args.profile), config), args)


HANDLERS = {
    "hecke-poly": _hecke_poly,
    "verify": _verify,
    "normal-form": _normal_form,
    "suite": _suite,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    config = _config(args)
    configure_logging(config)
    try:
        return HANDLERS[args.command](args, config)
    except HeckeLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
