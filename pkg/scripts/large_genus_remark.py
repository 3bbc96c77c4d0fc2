"""Compare h - 1 (exact count in degree 0) with the princ bound at k = g,
taking h at the Lachaud--Martin-Deschamps floor, to find where the bound
stops being the better of the two."""

import argparse

from dimzero.existence import certified_delta, delta_q, l_q
from dimzero.zeta_core import lmd_lower_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="*", default=[2, 3, 4, 5, 7, 8, 9])
    ap.add_argument("--gmax", type=int, default=40)
    args = ap.parse_args()

    for q in args.q:
        worse = []
        for g in range(1, args.gmax + 1):
            h = lmd_lower_bound(q, g)
            rest = h * (1 - l_q(q, g).inverse())
            stated = (rest + delta_q(q, g, g)).ceil()
            certified = (rest + certified_delta(q, g, g)).ceil()
            if not h - 1 > stated:
                worse.append((g, h - 1, stated, certified))
        last = max((w[0] for w in worse), default=0)
        print(f"q = {q}: h - 1 exceeds the bound for every g > {last} (checked to {args.gmax})")
        for g, exact, stated, certified in worse[-3:]:
            print(f"    g = {g:2}: h - 1 = {exact}, bound with Delta = {stated}, bound without = {certified}")


if __name__ == "__main__":
    main()
