#!/usr/bin/env python3
"""Run the property suite L1..L16 over a configurable corpus with timing.

    python scripts/sweep_corpus.py                 # the stock corpus
    python scripts/sweep_corpus.py --zn-max 400    # push the moduli higher
    python scripts/sweep_corpus.py --per-instance  # one line per lattice
"""

import argparse
import sys
import time

from multlat import lemma_suite
from multlat.corpus import acceptance_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--zn-max", type=int, default=200,
                        help="largest modulus for the zn family (default 200)")
    parser.add_argument("--per-instance", action="store_true",
                        help="print a line for every lattice, not just failures")
    args = parser.parse_args()

    t0 = time.perf_counter()
    count = 0
    failures = 0
    for M in acceptance_corpus(zn_hi=args.zn_max):
        t1 = time.perf_counter()
        report = lemma_suite(M)
        count += 1
        if not report.passed:
            failures += 1
            print(f"FAIL {M.name}")
            for check in report.failures():
                print(f"  {check.render()}")
        elif args.per_instance:
            checks = len(report.checks)
            print(f"ok   {M.name:18s} {checks} checks  {time.perf_counter() - t1:6.3f} s")
    elapsed = time.perf_counter() - t0
    print(f"{count} lattices, {failures} failures, {elapsed:.2f} s total")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
