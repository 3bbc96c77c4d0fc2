"""Least k with l_q(k) >= 1, the constants at that k, and the probability
lower bound 1 - 1/l_q(k) for a range of field sizes."""

import argparse

from dimzero.density import draw_probability
from dimzero.existence import constant_C, kmin, l_q


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="*", default=[2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 256])
    ap.add_argument("--extra-k", type=int, default=2, help="also show kmin+1..kmin+N")
    ap.add_argument("--digits", type=int, default=6)
    args = ap.parse_args()

    print(f"{'q':>4} {'k':>3} {'C_q':>24} {'l_q(k)':>26} {'1 - 1/l':>12}")
    for q in args.q:
        k0 = kmin(q)
        for k in range(k0, k0 + args.extra_k + 1):
            l = l_q(q, k)
            p = draw_probability(q, k)
            print(f"{q:>4} {k:>3} {str(constant_C(q, k)):>24} {str(l):>26} {str(p.to_decimal(args.digits)):>12}")


if __name__ == "__main__":
    main()
