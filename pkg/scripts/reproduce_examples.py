"""Recompute the worked examples: L-polynomials, class numbers, effective
divisor counts and exact dimension-zero counts for the bundled curves."""

import argparse
import json

from dimzero.harness import load_corpus, verify_curve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", help="corpus JSON (default: bundled)")
    ap.add_argument("--json", action="store_true", help="print full reports as JSON")
    args = ap.parse_args()

    reports = [verify_curve(e) for e in load_corpus(args.corpus)]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
        return
    print(f"{'label':28} {'q':>3} {'g':>2} {'h':>5}  {'A_0..A_g':24} {'h_n0 (n=0..g)':20} status")
    for r in reports:
        v = r.values
        g = v.get("g", 0)
        A = " ".join(map(str, v.get("A", [])[: g + 1]))
        h_n0 = " ".join(str(v["h_n0"][str(n)]) for n in range(g + 1)) if "h_n0" in v else "-"
        status = "ok" if r.passed else "FAIL " + ",".join(c.name for c in r.failures())
        print(f"{r.label:28} {v.get('q', '?'):>3} {g:>2} {v.get('h', '?'):>5}  {A:24} {h_n0:20} {status}")


if __name__ == "__main__":
    main()
