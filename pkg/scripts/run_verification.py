#!/usr/bin/env python3
"""Run the full verification registry and print a one-line summary per case.

Usage: python scripts/run_verification.py [--pmax N] [--json]
"""

import argparse
import json
import sys
import time

from classinv import catalog, checks


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=6)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    reports = []
    t0 = time.monotonic()
    for name in catalog.case_names():
        t = time.monotonic()
        report = checks.run_case(name, pmax=args.pmax)
        reports.append(report)
        bad = [c.name for c in report.checks if c.verdict != "pass"]
        flag = "ok  " if report.passed else "FAIL"
        line = f"{flag} {name:16s} {len(report.checks):2d} checks  {time.monotonic()-t:6.1f}s"
        if bad:
            line += f"  failing: {', '.join(bad)}"
        print(line)
    print(f"total {time.monotonic()-t0:.1f}s")
    if args.json:
        json.dump([r.to_dict() for r in reports], sys.stdout, indent=2)
        print()
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
