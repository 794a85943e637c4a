#!/usr/bin/env python3
"""Run the complete verification battery and optionally save a JSON report.

Equivalent to ``flagoct verify all`` with the same exit-code contract
(0 all checks pass, 1 any check fails); suitable for CI.
"""

import argparse
import sys

from flagoct.suites import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument(
        "--degree-cutoff",
        type=int,
        default=8,
        help="largest even degree for the free-rank table (0..16)",
    )
    parser.add_argument(
        "--output", default=None, help="write the JSON report to this path"
    )
    args = parser.parse_args()
    if not 0 <= args.degree_cutoff <= 16:
        parser.error("--degree-cutoff must be between 0 and 16")

    report = run_suite("all", seed=args.seed, degree_cutoff=args.degree_cutoff)
    print(report.to_text())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        print(f"\njson report written to {args.output}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
