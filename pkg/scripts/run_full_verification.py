#!/usr/bin/env python3
"""Run every verification suite at its widest configured range.

Equivalent to `mfl verify --suite all` plus, with --slow, the n = 5 sweep of
the degree-two initial-ideal equality (a few hundred exact eliminations).
"""

import argparse
import sys
import time

from mfl.suites import run_suite, run_theorem_a


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--slow", action="store_true",
                        help="extend the degree-two equality sweep to n = 5")
    args = parser.parse_args()

    failures = 0
    start = time.perf_counter()
    report = run_suite("all")
    status = "PASS" if report.ok else "FAIL"
    print(f"{status} all ({report.checked} checks, "
          f"{len(report.mismatches)} mismatches)")
    for mismatch in report.mismatches[:20]:
        print(f"  {mismatch}")
    failures += 0 if report.ok else 1

    if args.slow:
        report = run_theorem_a(5, cap=5)
        status = "PASS" if report.ok else "FAIL"
        print(f"{status} theoremA n=5 ({report.checked} monomial-free cases)")
        failures += 0 if report.ok else 1

    print(f"total time {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
