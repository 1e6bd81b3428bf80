#!/usr/bin/env python3
"""Run the full invariant suite and write the JSON report to a file."""

import argparse
import json
import pathlib
import sys

from goldmanab.selftest import run_selftest


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--scale", type=float, default=1.0)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("selftest_report.json"))
    args = parser.parse_args()

    report = run_selftest(args.seed, args.scale)
    args.out.write_text(json.dumps(report, indent=2) + "\n")
    for suite in report["suites"]:
        marker = "ok " if suite["passed"] else "FAIL"
        print(f"{marker} {suite['suite']:12s} samples={suite['samples']}")
    print(f"report written to {args.out}")
    return 0 if report["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
