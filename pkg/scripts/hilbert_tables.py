#!/usr/bin/env python3
"""Print the catalogued Hilbert data: engine counts next to the closed forms.

Usage: python scripts/hilbert_tables.py [--pmax N]
"""

import argparse
from fractions import Fraction

from classinv.catalog import get_case
from classinv.groebner import hilbert_function
from classinv.reptheory import GroupType, classical_hilbert


def poly_eval(coeffs, p):
    return sum((Fraction(c) * p**i for i, c in enumerate(coeffs)), Fraction(0))


def table(title, rows):
    print(title)
    print(f"  {'p':>2s} " + "".join(f"{h:>12s}" for h in rows[0]))
    for row in rows[1:]:
        print(f"  {row[0]:>2d} " + "".join(f"{str(v):>12s}" for v in row[1:]))
    print()


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=6)
    args = ap.parse_args()
    pmax = args.pmax

    for name, group in [("gl2", GroupType("GL", 2)), ("gl3", GroupType("GL", 3)),
                        ("sp4", GroupType("Sp", 4))]:
        case = get_case(name)
        I = case.ideal("I")
        rows = [("standard", "weights", "closed")]
        closed = case.expected.get("hilbert-coeffs")
        for p in range(pmax + 1):
            std = hilbert_function(I, p)
            rep = classical_hilbert(group, p=p)
            cf = int(poly_eval(closed.value, p)) if closed else rep
            rows.append((p, std, rep, cf))
        table(f"case {name}: graded dimensions of the fixed-point quotient", rows)

    case = get_case("o3-I2")
    rows = [("J", "I2")]
    for p in range(pmax + 1):
        rows.append((p, hilbert_function(case.ideal("J"), p),
                     hilbert_function(case.ideal("I2"), p)))
    table("case o3-I2: invariant ideal J and fixed point I2", rows)


if __name__ == "__main__":
    main()
