#!/usr/bin/env python3
"""Print the scalar invariants (n, c_p, d_p, h(-p), q_p, N) for every odd
prime up to a bound, as an aligned table or CSV.

    python scripts/invariant_table.py --to 200
    python scripts/invariant_table.py --to 5000 --csv > invariants.csv
"""

import argparse
import sys

from legdet.ntheory import prime_invariants, primes_in_range


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="p_from", type=int, default=3)
    ap.add_argument("--to", dest="p_to", type=int, default=200)
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    rows = []
    for p in primes_in_range(max(3, args.p_from), args.p_to):
        inv = prime_invariants(p)
        q = inv.q_p
        rows.append(
            (
                p,
                inv.n,
                inv.c_p,
                inv.d_p,
                inv.h_neg if inv.h_neg is not None else "",
                f"{q.numerator}/{q.denominator}",
                inv.N,
            )
        )
    header = ("p", "n", "c_p", "d_p", "h_neg", "q_p", "N")
    if args.csv:
        print(",".join(header))
        for row in rows:
            print(",".join(str(c) for c in row))
    else:
        widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(str(c).rjust(w) for c, w in zip(row, widths)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
