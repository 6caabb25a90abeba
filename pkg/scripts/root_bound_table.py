#!/usr/bin/env python3
"""Sweep the balanced dilatation polynomials and tabulate the certified
largest root against the m**(3/m) ceiling.

Every row re-runs the full certificate (root bracket, ceiling enclosure,
the three supporting inequalities); a violated bound stops the sweep with
a nonzero exit rather than printing a bad row.
"""

import argparse
import csv
import sys

from dillab.dilpoly import verify_lroot
from dillab.enclosures import decimal_str

HEADER = ("m", "root_lo", "root_hi", "ceiling_lo", "gap", "all_inequalities")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-lo", type=int, default=5)
    parser.add_argument("--m-hi", type=int, default=200)
    parser.add_argument("--digits", type=int, default=8)
    parser.add_argument("--out", help="write CSV here instead of stdout")
    ns = parser.parse_args()
    if ns.m_lo < 5 or ns.m_hi < ns.m_lo:
        parser.error("need 5 <= m-lo <= m-hi")

    rows = []
    for m in range(ns.m_lo, ns.m_hi + 1):
        rep = verify_lroot(m)
        if not rep.bound_holds:
            sys.stderr.write(f"certified bound failed at m={m}\n")
            return 1
        flags = rep.ineq1 and rep.ineq2 and rep.ineq3
        if not flags:
            sys.stderr.write(f"supporting inequality failed at m={m}\n")
            return 1
        gap = rep.m_power_enclosure.lo - rep.root.hi
        rows.append(
            (
                m,
                decimal_str(rep.root.lo, digits=ns.digits, rounding="floor"),
                decimal_str(rep.root.hi, digits=ns.digits, rounding="ceil"),
                decimal_str(rep.m_power_enclosure.lo, digits=ns.digits, rounding="floor"),
                decimal_str(gap, digits=ns.digits, rounding="floor"),
                "yes",
            )
        )

    sink = open(ns.out, "w", newline="") if ns.out else sys.stdout
    try:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(rows)
    finally:
        if ns.out:
            sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
