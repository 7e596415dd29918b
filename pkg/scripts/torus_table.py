"""Print the two-strand tables and superpolynomials for T(2, m), m = 1..N."""

import argparse

from extremal_hhh import BraidWord, superpolynomial, two_strand_hhh


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("N", type=int, nargs="?", default=5)
    ap.add_argument("--negative", action="store_true")
    args = ap.parse_args()
    sign = -1 if args.negative else 1
    for m in range(1, args.N + 1):
        table = two_strand_hhh(m, sign)
        b = BraidWord(2, tuple((1, sign) for _ in range(m)))
        print(table.format())
        print(f"P = {superpolynomial(b, table).format()}\n")


if __name__ == "__main__":
    main()
