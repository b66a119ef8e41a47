#!/usr/bin/env python3
"""Cross-check every closed formula against brute force on a small grid."""

import argparse
import sys
import time

from cyclehom.chainalg import euler_characteristic, homology_integer
from cyclehom.formulas import (euler_cycle, hom_cycle_cohomology,
                               homplus_cycle_formula, ind_cycle_formula)
from cyclehom.graphs import complete, cycle
from cyclehom.homspaces import hom_complex, hom_plus, independence_complex


def nonzero(groups):
    return {d: g for d, g in groups.items() if g != (0, ())}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=7)
    ap.add_argument("--n-max", type=int, default=4)
    args = ap.parse_args()
    failures = 0

    for m in range(3, 13):
        got = nonzero(independence_complex(cycle(m)).homology().groups)
        ok = got == ind_cycle_formula(m).groups()
        print(f"{'PASS' if ok else 'FAIL'} ind-cycle m={m}")
        failures += not ok

    for m in range(4, args.m_max + 1):
        for n in range(3, args.n_max + 1):
            t0 = time.monotonic()
            cx = hom_plus(cycle(m), complete(n))
            got = nonzero(homology_integer(
                cx.chain_complex(augmented=True)).groups)
            ok = got == homplus_cycle_formula(m, n).groups()
            print(f"{'PASS' if ok else 'FAIL'} homplus-cycle m={m} n={n} "
                  f"[{time.monotonic() - t0:.1f}s]")
            failures += not ok

    for m in range(5, args.m_max + 1):
        for n in range(4, args.n_max + 1):
            t0 = time.monotonic()
            cx = hom_complex(cycle(m), complete(n))
            chain = cx.chain_complex(augmented=True)
            got = nonzero(homology_integer(chain).cohomology_groups())
            ok = got == hom_cycle_cohomology(m, n).groups()
            ok = ok and euler_cycle(m, n) == euler_characteristic(chain)
            print(f"{'PASS' if ok else 'FAIL'} hom-cycle m={m} n={n} "
                  f"[{time.monotonic() - t0:.1f}s]")
            failures += not ok

    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
