#!/usr/bin/env python3
"""Run the full verification report for both gauge-field models and print a
claim summary table.  Files land under --out (default ./out)."""
import argparse
import os
import sys

from dirac_sphere import gauge, oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out")
    ap.add_argument("--k", type=float, default=2.0)
    ap.add_argument("--levels", type=int, default=4)
    ap.add_argument("--grid-L", type=float, default=12.0)
    ap.add_argument("--grid-N", type=int, default=4001)
    args = ap.parse_args()

    grid = oracle.Grid(args.grid_L, args.grid_N)
    os.makedirs(args.out, exist_ok=True)

    p1 = gauge.Model1Params.from_branch(0.4, args.k, "half-up")
    alpha, beta = gauge.alpha_beta(args.k, "-", "+")
    p2 = gauge.model2_derive_params(1.0 / args.k, beta - alpha, beta + alpha, args.k)

    import json

    for model, params in ((1, p1), (2, p2)):
        rep = oracle.consistency_report(model, params, args.k, 1.0, grid, levels=args.levels)
        path = os.path.join(args.out, f"verify_model{model}.json")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(rep.as_dict(), fh, indent=2)
            fh.write("\n")
        print(f"\nmodel {model}  (k={args.k}, grid L={grid.L}, N={grid.N}) -> {path}")
        print(f"{'claim':34s} {'verdict':9s} {'metric':>12s}")
        for c in rep.claims:
            print(f"{c.claim_id:34s} {c.verdict:9s} {c.metric:12.4e}")
        bad = rep.forced_failures()
        if bad:
            print("FORCED FAILURES:", ", ".join(c.claim_id for c in bad))
            return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
