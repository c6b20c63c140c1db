"""Run every verification suite with per-suite timings.

    python3 scripts/verify_all.py [--jobs 4]
"""
import argparse
import sys
import time

from isingff.suites import ALL, SuiteOptions, run_tasks, tasks_for


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    failed = 0
    for name in ALL:
        start = time.perf_counter()
        results = run_tasks(tasks_for([name], SuiteOptions()), args.jobs)
        bad = sum(r.failed for r in results)
        printed = sum(not r.gating and not r.finding.holds for r in results)
        failed += bad
        extra = f", {printed} non-gating do not hold" if printed else ""
        print(f"{name:<15} {len(results) - bad:>4}/{len(results)} ok{extra}  {time.perf_counter() - start:6.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
