#!/usr/bin/env python3
"""Print the closed-form second-page tables for a grid of (m, n)."""

import argparse

from cyclehom.arcs import e2_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--ring", choices=("Z", "Z2"), default="Z")
    args = ap.parse_args()
    for m in range(5, args.m_max + 1):
        for n in range(4, args.n_max + 1):
            entries = e2_table(m, n, ring=args.ring)
            print(f"m={m} n={n} ({args.ring}):")
            for p, q, grp in entries:
                print(f"  ({p},{q}) {grp}")


if __name__ == "__main__":
    main()
