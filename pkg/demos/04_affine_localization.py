#!/usr/bin/env python3
"""Affine arrangements reduce to central ones.

An affine arrangement has no single most-singular origin; instead, every
maximal set of hyperplanes with a common point contributes a central
arrangement (translate that point to the origin), and the global pair is
the minimum of the local pairs in the singularity order: smaller threshold
first, larger multiplicity breaking ties.
"""

from rlct import normalize, parse_factored_product, rlct_affine


def show(text: str) -> None:
    arr = normalize(parse_factored_product(text))
    report = rlct_affine(arr)
    print(f"f = {text}")
    for loc in report.localizations:
        point = ", ".join(str(x) for x in loc.point)
        sub = loc.arrangement
        print(
            f"  at ({point}): {sub.n} hyperplane(s), multiplicities {list(sub.multiplicities)}"
            f" -> local pair {loc.pair}"
        )
    print(f"  global pair: {report.global_pair}\n")


def main() -> None:
    # Two reduced points on a line: both localizations are smooth-ish, (1, 1).
    show("x*(x-1)")

    # A double point beats a simple one: (1/2, 1) < (1, 1) in the order.
    show("x^2*(x-1)")

    # Three lines with no common point: three two-line crossings, each (1, 2).
    show("x*y*(x+y-1)")

    # Same three lines through one point: now a genuine triple point, (2/3, 1).
    show("x*y*(x+y)")

    # A central input localizes at the origin only and reproduces the
    # central computation.
    show("x*y^2*z^2*(x+y+z)")


if __name__ == "__main__":
    main()
