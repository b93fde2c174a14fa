#!/usr/bin/env python3
"""Run the full verification sweep at several shapes and print timings.

A heavier driver than `qschubert check all` at its defaults: it covers
two grassmannian shapes end to end, the 3x7 ladder facts, and the
determinantal transfer at degree three.  Exits nonzero on any failure.
"""

import argparse
import sys
import time

from qschubert import (
    MinorPoset,
    dehom_correspondence_check,
    ladder_relations_check,
    rank_and_gkdim,
)
from qschubert.cli import SUITE_MANIFEST, RunConfig


def run_suites(m: int, n: int, max_deg: int) -> int:
    cfg = RunConfig(m=m, n=n, max_deg=max_deg)
    failures = 0
    for name, suite in SUITE_MANIFEST.items():
        t0 = time.monotonic()
        rows = suite(cfg)
        bad = [r for r in rows if r["status"] != "PASS"]
        failures += len(bad)
        took = time.monotonic() - t0
        print(f"  {name:<20} {len(rows):>3} cases  {took:7.2f}s"
              + (f"  {len(bad)} FAILED" if bad else ""))
        for r in bad:
            print(f"    FAIL {r['case']}: {r['witness']}")
    return failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-deg", type=int, default=2)
    ap.add_argument("--skip-large", action="store_true",
                    help="skip the 2x5 sweep and the 3x7 ladder")
    args = ap.parse_args()

    failures = 0
    shapes = [(2, 4)] if args.skip_large else [(2, 4), (2, 5)]
    for m, n in shapes:
        print(f"suites at {m}x{n}, max degree {args.max_deg}")
        failures += run_suites(m, n, args.max_deg)

    if not args.skip_large:
        print("ladder relations at [1,3,6] in the 3x7 grassmannian")
        t0 = time.monotonic()
        r = ladder_relations_check((1, 3, 6), 3, 7)
        print(f"  {r['positions']} positions, counts {r['counts']}, "
              f"ok={r['ok']}  {time.monotonic() - t0:.2f}s")
        failures += 0 if r["ok"] else 1

        poset = MinorPoset.grassmannian(3, 7)
        _, dim = rank_and_gkdim(poset, (1, 3, 6))
        print(f"  quotient dimension at [1,3,6]: {dim}")

        print("determinantal transfer at degree three in 2x2")
        for delta in MinorPoset.matrix(2, 2).elements():
            r = dehom_correspondence_check(delta, 2, 2, max_deg=3)
            print(f"  {r['delta']} -> {r['gamma']}: {r['pairs_checked']} pairs, ok={r['ok']}")
            failures += 0 if r["ok"] else 1

    print("no failures" if failures == 0 else f"{failures} FAILURES")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
