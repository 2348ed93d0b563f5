"""Exact edge expansion next to its spectral bounds for every small instance.

Usage: python3 scripts/expansion_table.py [--max-vertices 24] [--csv out.csv]
"""

import argparse
import csv
import math
import sys

from hypersimplex import GraphParams
from hypersimplex.oracle import EXPANSION_CAP, build_small_graph, exact_expansion, sweep_expansion_upper_bound
from hypersimplex.spectral import cheeger_bounds


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=EXPANSION_CAP)
    ap.add_argument("--csv", help="also write the table here")
    args = ap.parse_args()

    rows = []
    for d in range(2, args.max_vertices + 1):
        for k in range(1, d // 2 + 1):
            if math.comb(d, k) > args.max_vertices:
                continue
            p = GraphParams(d, k)
            g = build_small_graph(p)
            b = cheeger_bounds(p)
            exact = exact_expansion(g)
            sweep = sweep_expansion_upper_bound(g)
            rows.append([d, k, g.n, str(b.lower), str(exact.value), str(sweep), f"{b.upper:.4f}"])

    header = ["d", "k", "vertices", "lower", "exact", "sweep", "upper"]
    w = csv.writer(sys.stdout, delimiter="\t", lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            csv.writer(fh).writerows([header, *rows])


if __name__ == "__main__":
    main()
