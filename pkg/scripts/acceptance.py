"""Run the nine acceptance criteria and print one line each.

    python3 scripts/acceptance.py [--jobs 4] [--only 5,6]

Exit status is 0 only when every criterion passes.
"""
import argparse
import sys
import time

from isingff.acceptance import run_all
from isingff.cli import parse_range


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--only", type=parse_range)
    args = p.parse_args()
    start = time.perf_counter()
    reports = run_all(args.jobs, args.only)
    for rep in reports:
        print(rep.line())
    print(f"{sum(r.passed for r in reports)}/{len(reports)} criteria pass in {time.perf_counter() - start:.1f}s")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
