#!/usr/bin/env python3
"""Run the four exhaustive verification sweeps at their full limits and print
one JSON report per line. Exits nonzero if any sweep records a failure.

Usage: python3 scripts/run_checks.py [--fast]

--fast shrinks every limit by one for a quick smoke pass.
"""

import argparse
import json
import sys
import time

from skewtab import (
    verify_perp_range,
    verify_involution,
    verify_skew_lr,
    verify_skew_pieri,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--fast", action="store_true", help="shrink limits for a smoke pass")
    args = parser.parse_args()
    shrink = 1 if args.fast else 0

    sweeps = [
        ("involution", lambda: verify_involution(5 - shrink, 2, 3)),
        ("skew-pieri", lambda: verify_skew_pieri(6 - shrink, 3 - shrink)),
        ("skew-lr", lambda: verify_skew_lr(5 - shrink, 4 - shrink)),
        ("perp", lambda: verify_perp_range(4 - shrink, 3 - shrink)),
    ]

    bad = 0
    for name, sweep in sweeps:
        start = time.perf_counter()
        report = sweep()
        report["sweep"] = name
        report["seconds"] = round(time.perf_counter() - start, 3)
        report["ok"] = not report["failures"]
        bad += len(report["failures"])
        print(json.dumps(report))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
