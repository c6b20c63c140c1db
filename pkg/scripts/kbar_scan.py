"""Tabulate the f^(4) linear-solve constants against N.

    python3 scripts/kbar_scan.py [--N 1..10]

Kbar is compared with N(N+2)/8, which it matches on every N checked so far.
"""
import argparse
from fractions import Fraction

from isingff.cli import parse_range
from isingff.formfactors import C4_construction, cancellation_report


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--N", type=parse_range, default=tuple(range(1, 11)))
    args = p.parse_args()
    print(f"{'N':>3} {'Kbar':>8} {'N(N+2)/8':>9} {'K0':>10} {'K1':>10}  first nonzero")
    for N in args.N:
        c = C4_construction(N)
        r = cancellation_report(4, N)
        guess = Fraction(N * (N + 2), 8)
        mark = "" if c.Kbar == guess else "  <-- differs"
        print(f"{N:>3} {str(c.Kbar):>8} {str(guess):>9} {str(c.K0):>10} {str(c.K1):>10}  "
              f"{r.first_coefficient} t^{r.first_exponent}{mark}")


if __name__ == "__main__":
    main()
