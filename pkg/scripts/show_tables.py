#!/usr/bin/env python3
"""Print the symbolic cofactor tables and resultant for a double commutator.

Renders the degree-3 trace cofactor tau, the degree-4 alpha cofactor, the
degree-5 gamma cofactor and res(tau, gamma_inner) in lambda/mu/t notation
for eyeball comparison.
"""

import argparse
import time

from sl2wiggle.certify import DCParams, core_polys
from sl2wiggle.exact.tpoly import resultant


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dc", required=True, help="exponents k,l,m,n")
    parser.add_argument("--resultant", action="store_true", help="also print res(tau, gamma_inner)")
    args = parser.parse_args()

    k, l, m, n = (int(v) for v in args.dc.split(","))
    start = time.perf_counter()
    cp = core_polys(DCParams(k, l, m, n))
    print(f"parameters (k, l, m, n) = ({k}, {l}, {m}, {n})")
    print(f"prefactor  = {cp.prefactor_num.pretty()}")
    print(f"denominator = {cp.prefactor_den.pretty()}")
    print()
    for name, poly in (
        ("tau", cp.tau),
        ("gamma_inner", cp.gamma_inner),
        ("alpha_core", cp.alpha_core),
    ):
        print(f"{name} (degree {poly.degree}):")
        for i, c in enumerate(poly.coeffs):
            print(f"  [t^{i}] {c.pretty()}")
        print()
    if args.resultant:
        res = resultant(cp.tau, cp.gamma_inner)
        print(f"res(tau, gamma_inner) = {res.pretty()}")
    print(f"({time.perf_counter() - start:.2f}s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
