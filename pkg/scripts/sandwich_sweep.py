#!/usr/bin/env python3
"""Produce the two-sided certified bound table for a genus and range of
marked points, with the calibration constants that frame it.

Writes the same CSV the `dillab bounds table` subcommand emits, and prints
the omega and kappa' constants so the table can be read against its
asymptotic envelope log(n)/n.
"""

import argparse
import csv
import sys

from dillab.bounds import SANDWICH_CSV_HEADER, sandwich_table
from dillab.enclosures import decimal_str


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g", type=int, default=2)
    parser.add_argument("--n-lo", type=int, default=31)
    parser.add_argument("--n-hi", type=int, default=10_000)
    parser.add_argument("--sample", type=int, default=50, help="log-uniform sample size; 0 = every n")
    parser.add_argument("--out", help="write CSV here instead of stdout")
    ns = parser.parse_args()

    sample = None if ns.sample == 0 else ns.sample
    rep = sandwich_table(ns.g, ns.n_lo, ns.n_hi, sample=sample)

    sink = open(ns.out, "w", newline="") if ns.out else sys.stdout
    try:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(SANDWICH_CSV_HEADER)
        for row in rep.rows:
            writer.writerow(row.csv_row())
    finally:
        if ns.out:
            sink.close()

    sys.stderr.write(
        f"g={rep.g} alpha={rep.alpha} rows={len(rep.rows)}\n"
        f"omega_hi={decimal_str(rep.omega.hi, digits=6, rounding='ceil')}"
        " (lower bounds stay above log(n)/(omega*n))\n"
    )
    if rep.kappa_prime is not None:
        sys.stderr.write(
            f"kappa'={decimal_str(rep.kappa_prime, digits=6, rounding='ceil')}"
            " (upper bounds stay below kappa'*log(n)/n)\n"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
