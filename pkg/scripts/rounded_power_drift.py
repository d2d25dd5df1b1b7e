#!/usr/bin/env python3
"""Drift of round(eta^k) cumulants against the independent model.

When eta is (a good decimal approximation of) a transcendental number,
kappa_m(S_n) - n * kappa_m(model) should freeze to a constant once n
passes the last sporadic cancellation; the table makes the freeze
visible per order.

Usage: python scripts/rounded_power_drift.py [N_MAX] [ETA_DECIMAL]
"""

import sys

from lacuna.exact import format_rational
from lacuna.moments import compare_table
from lacuna.sequences import SequenceSpec

PI_DIGITS = "3.14159265358979323846264338327950288"


def main() -> None:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 22
    eta = sys.argv[2] if len(sys.argv) > 2 else PI_DIGITS
    spec = SequenceSpec.roundpow(eta, 100)
    table = compare_table(spec, 1, n_max, 6)
    print("n,m,kappa,independent_n_kappa,diff")
    for row in table.rows:
        if row.m not in (2, 4, 6):
            continue
        print(
            f"{row.n},{row.m},{format_rational(row.kappa)},"
            f"{format_rational(row.independent)},{format_rational(row.diff)}"
        )


if __name__ == "__main__":
    main()
