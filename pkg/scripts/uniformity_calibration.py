"""Pass rate of the chi-square uniformity test over many seeds, per step rule and walk length.

A calibrated sampler passes at significance a in about (1 - a) of seeds once
the walk is long enough; short walks show the bias.

Usage: python3 scripts/uniformity_calibration.py --d 7 --k 3 --n 35000 --seeds 50
"""

import argparse
import time

from hypersimplex import GraphParams
from hypersimplex.sampler import STEP_RULES, WalkConfig, sample_bits, uniformity_test_bits


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=7)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, default=35_000)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--steps", type=int, nargs="+", default=[1, 2, 4, 8, 16, 200])
    ap.add_argument("--significance", type=float, default=0.001)
    ap.add_argument("--lazy", action="store_true")
    args = ap.parse_args()

    p = GraphParams(args.d, args.k)
    print("rule\tsteps\tpass_rate\tmedian_p\tseconds")
    for rule in STEP_RULES:
        for steps in args.steps:
            t0 = time.perf_counter()
            pvals = []
            for seed in range(args.seeds):
                bits = sample_bits(WalkConfig(p, seed, steps, args.lazy, rule), args.n)
                pvals.append(uniformity_test_bits(bits, p, args.significance).p_value)
            rate = sum(v > args.significance for v in pvals) / len(pvals)
            median = sorted(pvals)[len(pvals) // 2]
            print(f"{rule}\t{steps}\t{rate:.2f}\t{median:.3g}\t{time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
