#!/usr/bin/env python3
"""End-to-end tour of the four bundled example families.

Builds each sum system from its joint ordered factorisation, verifies
the covering property, converts to the matching sum-and-distance system
where the part-size parity allows it, decomposes everything back, and
finishes with the three square constructions from the pair {7,9},{2,6}.
"""

from addsys import (
    associated_magic_square,
    build_sum_system,
    decompose_sum_system,
    infer_flavour,
    most_perfect_square,
    parse_jof,
    reversible_square_even,
    sumsys_to_sds_inclusive,
    sumsys_to_sds_noninclusive,
    verify_sds,
    verify_sum_system,
)
from addsys.sds import INCLUSIVE, NON_INCLUSIVE

EXAMPLES = {
    "dims (15,8,6), first": "1:5,2:2,1:3,3:3,2:2,3:2,2:2",
    "dims (15,8,6), second": "1:5,3:3,2:2,3:2,2:2,1:3,2:2",
    "dims (14,8,6), all even": "1:2,3:3,2:2,3:2,2:2,1:7,2:2",
    "dims (15,7,9), all odd": "1:5,2:7,3:3,1:3,3:3",
    "dims (28,20,30,18,12)": "1:7,2:4,5:2,3:2,4:2,2:5,4:9,3:3,1:4,5:3,3:5,5:2",
}


def show_system(label: str, text: str) -> None:
    jof = parse_jof(text)
    ss = build_sum_system(jof)
    print(f"== {label}")
    print(f"   factorisation {text}")
    for i, part in enumerate(ss.parts, start=1):
        shown = ", ".join(map(str, part[:12])) + (", ..." if len(part) > 12 else "")
        print(f"   part {i} ({len(part)} elements): {{{shown}}}")
    report = verify_sum_system(ss)
    print(f"   covers 0..{ss.target_size - 1}: {report.passed}")
    recovered = decompose_sum_system(ss, check=False)
    print(f"   decomposes back to itself: {recovered.steps == jof.steps}")
    try:
        flavour = infer_flavour(ss)
    except Exception:
        print("   mixed part-size parity, no sum-and-distance partner")
    else:
        if flavour == NON_INCLUSIVE:
            partner = sumsys_to_sds_noninclusive(ss, check=False)
        else:
            partner = sumsys_to_sds_inclusive(ss, check=False)
        print(f"   {flavour} partner parts:")
        for i, part in enumerate(partner.parts, start=1):
            print(f"     {i}: {{{', '.join(map(str, part))}}}")
        print(f"   partner verifies: {verify_sds(partner).passed}")
    print()


def show_squares() -> None:
    print("== squares from the pair {7,9}, {2,6}")
    for name, rows in (
        ("reversible", reversible_square_even((7, 9), (2, 6)).plain_rows()),
        ("associated magic", associated_magic_square((7, 9), (2, 6)).plain_rows()),
        ("most perfect", most_perfect_square((7, 9), (2, 6)).plain_rows()),
    ):
        print(f"   {name}:")
        for row in rows:
            print("     " + " ".join(f"{x:3d}" for x in row))
    print()


def main() -> None:
    for label, text in EXAMPLES.items():
        show_system(label, text)
    show_squares()


if __name__ == "__main__":
    main()
