"""Exact TV distance to uniform for the plain and lazy walks, with fitted decay rates.

Usage: python3 scripts/mixing_curves.py --d 5 --k 2 [--max-t 30]
"""

import argparse
import math
import warnings

import numpy as np

from hypersimplex import GraphParams, degree
from hypersimplex.errors import SamplerError
from hypersimplex.sampler import default_steps, tv_evolution
from hypersimplex.spectral import closed_form_spectrum


def fitted_rate(tv: list[float], lo: int, hi: int) -> float:
    ts = np.arange(lo, hi + 1)
    vals = np.asarray(tv[lo : hi + 1])
    keep = vals > 1e-14
    if keep.sum() < 2:
        return float("nan")
    return math.exp(np.polyfit(ts[keep], np.log(vals[keep]), 1)[0])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--max-t", type=int, default=30)
    args = ap.parse_args()

    p = GraphParams(args.d, args.k)
    spec = closed_form_spectrum(p if p.in_regime else GraphParams(p.d, p.d - p.k))
    r = degree(p)
    plain_rate = max(abs(spec.second), abs(spec.smallest)) / r
    lazy_rate = max(abs(1 + spec.second / r), abs(1 + spec.smallest / r)) / 2

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        plain = tv_evolution(p, max_t=args.max_t)
    lazy = tv_evolution(p, max_t=args.max_t, lazy=True)

    print("t\tplain\tlazy")
    for t, (a, b) in enumerate(zip(plain, lazy)):
        print(f"{t}\t{a:.6e}\t{b:.6e}")
    lo, hi = min(5, args.max_t), args.max_t
    print(f"# plain: fitted rate {fitted_rate(plain, lo, hi):.5f}, spectral {plain_rate:.5f}")
    print(f"# lazy:  fitted rate {fitted_rate(lazy, lo, hi):.5f}, spectral {lazy_rate:.5f}")
    try:
        print(f"# default plain walk length {default_steps(p)}")
    except SamplerError as exc:
        print(f"# default plain walk length unavailable: {exc}")
    print(f"# default lazy walk length {default_steps(p, lazy=True)}")


if __name__ == "__main__":
    main()
