"""Print computed densities next to the closed forms for each family grid.

    python scripts/closed_form_tables.py [--family NAME]

Any mismatch is flagged and makes the script exit 1.
"""

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction as F
from itertools import product

from stpack import formulas, make_delzant_family, make_semitoric_family, semitoric_density, toric_density
from stpack.geometry import format_rational


@dataclass(frozen=True)
class Grid:
    sizes: tuple = (F(1, 2), F(1), F(3, 2), F(2), F(3))
    n_max: int = 5


def rows(family: str, grid: Grid):
    if family == "hirzebruch":
        for a, b, n in product(grid.sizes, grid.sizes, range(1, grid.n_max + 1)):
            got = toric_density(make_delzant_family("hirzebruch", a, b, n)).density
            yield f"a={a} b={b} n={n}", got, formulas.hirzebruch_density(a, b, n)
    elif family == "type1":
        for a in grid.sizes:
            for h in (a / 8, a / 4, 3 * a / 8):
                got = semitoric_density(make_semitoric_family("type1", a=a, h=h)).density
                yield f"a={a} h={h}", got, formulas.type1_density(a, h)
    elif family == "type3a":
        for a, b, n in product(grid.sizes, grid.sizes, range(1, grid.n_max)):
            got = semitoric_density(make_semitoric_family("type3a", a=a, b=b, n=n, h=a / 2)).density
            yield f"a={a} b={b} n={n}", got, formulas.type3a_density(a, b, n)
    elif family == "type3b":
        for a, n in product(grid.sizes, range(2, grid.n_max + 1)):
            got = semitoric_density(make_semitoric_family("type3b", a=a, n=n, h=a / 3)).density
            yield f"a={a} n={n}", got, formulas.type3b_density(n)
    elif family == "type3c":
        for a, n in product(grid.sizes, range(2, grid.n_max)):
            for b in (-a / 4, -a / 2, -3 * a / 4):
                top = a + b / (n - 1)
                for h in (top / 4, top / 2, 7 * top / 8):
                    got = semitoric_density(make_semitoric_family("type3c", a=a, b=b, n=n, h=h)).density
                    yield f"a={a} b={b} n={n} h={h}", got, formulas.type3c_density(a, b, n, h)
    else:
        raise SystemExit(f"unknown family {family}")


FAMILIES = ("hirzebruch", "type1", "type3a", "type3b", "type3c")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=FAMILIES, action="append")
    args = ap.parse_args()
    bad = 0
    for fam in args.family or FAMILIES:
        print(f"== {fam}")
        for label, got, want in rows(fam, Grid()):
            flag = "" if got == want else "   MISMATCH"
            bad += bool(flag)
            print(f"  {label:<28} {format_rational(got):>10} {format_rational(want):>10}{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
