#!/usr/bin/env python3
"""Walk the catalogued one-parameter families: print the compatible-order
basis of the fiber ideal, a nonzero family member, the flat limit, and the
verdict against the catalogued target.

Usage: python scripts/degeneration_demo.py [case ...]
"""

import sys
from fractions import Fraction

from classinv.catalog import get_case
from classinv.degeneration import (
    expand_column_weights,
    family_member,
    flat_limit,
    run_degeneration,
)
from classinv.groebner import ideal_equal
from classinv.poly import serialize


def main() -> None:
    names = sys.argv[1:] or ["o3-I2", "so3-I1", "so3-I2"]
    for name in names:
        case = get_case(name)
        for data in case.degenerations:
            print(f"== {name}: column weights {data.column_weights} -> {data.target}")
            w = expand_column_weights(case.ring, data.column_weights, ["x", "y", "z"])
            source = case.ideal(data.source)
            member = family_member(source, w, Fraction(2))
            print(f"   family member at t=2 ({len(member.generators)} generators), first three:")
            for g in list(member.generators)[:3]:
                print(f"     {serialize(g)}")
            limit, target, equal = run_degeneration(case, data)
            print(f"   limit generators: {len(limit.generators)}; equals {data.target}: {equal}")
            print(f"   member at t=1 equals the source: "
                  f"{ideal_equal(family_member(source, w, Fraction(1)), source)}")
            print()


if __name__ == "__main__":
    main()
