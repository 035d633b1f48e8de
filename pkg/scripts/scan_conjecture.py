#!/usr/bin/env python3
"""Scan a prime range for counterexamples to the d_p congruence conjecture
(d_p mod 16 / mod 8 by residue class) and keep a resumable JSONL log.

    python scripts/scan_conjecture.py --to 100000 --out conj.jsonl

A counterexample would be a finding worth keeping, so the log stores every
prime's invariants, not only failures.  Equivalent to
`legdet scan --ids CONJ11_DP --resume`, with friendlier defaults.
"""

import argparse
import sys

from legdet.cli import main as legdet_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="p_from", type=int, default=3)
    ap.add_argument("--to", dest="p_to", type=int, default=100_000)
    ap.add_argument("--out", default="conjecture_scan.jsonl")
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()
    argv = [
        "scan",
        "--from", str(args.p_from),
        "--to", str(args.p_to),
        "--ids", "CONJ11_DP,T13_DPMOD4",
        "--out", args.out,
        "--resume",
    ]
    if args.jobs:
        argv += ["--jobs", str(args.jobs)]
    return legdet_main(argv)


if __name__ == "__main__":
    sys.exit(main())
