#!/usr/bin/env python3
"""Emit the plottable data behind both published figure sets (CSV curves and
level tables) into --out/fig1 and --out/fig2."""
import argparse
import sys

from dirac_sphere.cli import cmd_figures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out")
    args = ap.parse_args()
    for which in ("fig1", "fig2"):
        for path in cmd_figures(which, {}, args.out):
            print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
