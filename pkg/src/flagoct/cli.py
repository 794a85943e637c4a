"""Command-line front end.

Subcommands:

* ``verify <suite>``: run a verification suite (octonion, jordan, roots,
  cohomology, gkm, ktheory, all) and print a structured report.
* ``gkm-check --ring {Hb,HT,RT,RX} --file F``: test a six-vertex tuple,
  given as a JSON record, against the moment-graph divisibility conditions
  of the selected coefficient ring.
* ``expand <expr> --ring {Hb,HT,RT,RX}``: parse an expression and print
  its canonical form (for characters, also the weight list).

Exit codes: 0 all checks pass; 1 a check or membership test fails;
2 usage or input error.  The environment variable FLAGOCT_SEED supplies a
fallback seed for ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from .cohomology import B_RING
from .gkm import RHO_RING, CohTuple, MembershipResult, check_membership
from .ktheory import (
    Character,
    KTuple,
    X_RING,
    check_k_membership_rt,
    check_k_membership_x,
)
from .parsing import (
    CharacterContext,
    ParseError,
    PolynomialContext,
    parse_and_evaluate,
)
from .poly import Polynomial, RingMismatchError
from .report import VerificationReport
from .suites import SUITE_NAMES, run_suite
from .weyl import SIGMA3_NAMES

RING_CHOICES = ("Hb", "HT", "RT", "RX")


class UsageError(Exception):
    pass


def _polynomial_context(ring_name: str) -> PolynomialContext:
    if ring_name == "Hb":
        b1, b2 = B_RING.gens()
        return PolynomialContext(B_RING, aliases={"b3": b1 + b2})
    if ring_name == "HT":
        return PolynomialContext(RHO_RING)
    if ring_name == "RX":
        return PolynomialContext(X_RING)
    raise UsageError(f"no polynomial context for ring {ring_name!r}")


def _context_for(ring_name: str):
    if ring_name == "RT":
        return CharacterContext()
    return _polynomial_context(ring_name)


def _default_seed() -> int:
    raw = os.environ.get("FLAGOCT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"FLAGOCT_SEED must be an integer, got {raw!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suite(
        args.suite, seed=seed, degree_cutoff=args.degree_cutoff, corrupt=args.corrupt
    )
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def _load_tuple_file(path: str, ring: str) -> Dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise UsageError("tuple file must be a JSON object")
    file_ring = data.get("ring")
    if file_ring is not None and file_ring != ring:
        raise UsageError(
            f"tuple file declares ring {file_ring!r} but --ring is {ring!r}"
        )
    entries = data.get("entries")
    if not isinstance(entries, dict):
        raise UsageError('tuple file must contain an "entries" object')
    missing = [name for name in SIGMA3_NAMES if name not in entries]
    if missing:
        raise UsageError(f"missing vertex entries: {missing}")
    unknown = [name for name in entries if name not in SIGMA3_NAMES]
    if unknown:
        raise UsageError(
            f"unknown vertex names: {unknown} (expected {list(SIGMA3_NAMES)})"
        )
    bad = [name for name, expr in entries.items() if not isinstance(expr, str)]
    if bad:
        raise UsageError(f"entries must be expression strings; offending: {bad}")
    return entries


def _evaluate_entries(entries: Dict[str, str], ring: str) -> Dict[str, object]:
    ctx = _context_for(ring)
    out: Dict[str, object] = {}
    for name, text in entries.items():
        try:
            out[name] = parse_and_evaluate(text, ctx)
        except ParseError as exc:
            raise UsageError(f"entry {name!r}: {exc}")
    return out


def _run_gkm_check(ring: str, values: Dict[str, object]) -> MembershipResult:
    if ring in ("Hb", "HT"):
        try:
            t = CohTuple(ring, values)  # type: ignore[arg-type]
        except (ValueError, RingMismatchError) as exc:
            raise UsageError(str(exc))
        return check_membership(t)
    if ring == "RT":
        return check_k_membership_rt(values)  # type: ignore[arg-type]
    try:
        t = KTuple("RX", values)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))
    return check_k_membership_x(t.entries)  # type: ignore[arg-type]


def _cmd_gkm_check(args: argparse.Namespace) -> int:
    entries = _load_tuple_file(args.file, args.ring)
    values = _evaluate_entries(entries, args.ring)
    result = _run_gkm_check(args.ring, values)
    if result.ok:
        print(f"ok: tuple satisfies all edge conditions in ring {args.ring}")
        return 0
    edge = result.failing_edge
    where = f" at edge {{{edge.u},{edge.v}}}" if edge is not None else ""
    print(f"fail{where}: {result.reason}")
    return 1


def _cmd_expand(args: argparse.Namespace) -> int:
    ctx = _context_for(args.ring)
    try:
        value = parse_and_evaluate(args.expr, ctx)
    except ParseError as exc:
        raise UsageError(str(exc))
    print(value)
    if isinstance(value, Character):
        for w, coeff in value.weights():
            print(f"  weight {tuple(str(c) for c in w.coords)}  multiplicity {coeff}")
    elif isinstance(value, Polynomial):
        degree = value.degree()
        if degree >= 0:
            print(f"  graded degree: {degree}" if value.is_homogeneous() else
                  f"  top graded degree: {degree}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagoct",
        description="Exact symbolic verification for the six-fixed-point "
        "flag geometry: cohomology, moment-graph, and character-ring checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument(
        "--degree-cutoff",
        type=int,
        default=8,
        help="largest even degree for the free-rank table (max 16)",
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--corrupt",
        action="store_true",
        help=argparse.SUPPRESS,  # inject falsified fixtures (negative control demo)
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_gkm = sub.add_parser(
        "gkm-check", help="test a six-vertex tuple against the edge conditions"
    )
    p_gkm.add_argument("--ring", choices=RING_CHOICES, required=True)
    p_gkm.add_argument("--file", required=True)
    p_gkm.set_defaults(func=_cmd_gkm_check)

    p_expand = sub.add_parser("expand", help="parse and canonicalize an expression")
    p_expand.add_argument("expr")
    p_expand.add_argument("--ring", choices=RING_CHOICES, required=True)
    p_expand.set_defaults(func=_cmd_expand)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    if getattr(args, "degree_cutoff", 8) is not None and args.command == "verify":
        if not (0 <= args.degree_cutoff <= 16):
            print("error: --degree-cutoff must be between 0 and 16", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
