#!/usr/bin/env python3
"""Failure-rate experiment: Monte Carlo estimates against the closed-form
bound, plus the tail of the bound-ratio sequence.

Example:
    python scripts/sfsp_experiment.py --k 1 --sizes 8 16 24 32 --trials 2000 --seed 7
"""

import argparse
import json
import math
import sys

from switchlab.randomlab import bound_ratio_check, estimate_failure_prob, sfsp_bound


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 20, 24])
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--ratio-m", type=int, default=10_000)
    args = parser.parse_args(argv)

    ratio = bound_ratio_check(args.k, args.ratio_m)
    print(
        json.dumps(
            {
                "ratio_limit": ratio.limit,
                "ratio_final": ratio.ratios[-1],
                "ratio_error": abs(ratio.ratios[-1] - ratio.limit),
            },
            sort_keys=True,
        )
    )
    for n in args.sizes:
        est = estimate_failure_prob(n, args.k, args.trials, args.seed)
        bound = sfsp_bound(args.k, n)
        print(
            json.dumps(
                {
                    "n": n,
                    "k": args.k,
                    "failure_rate": est.failure_rate,
                    "half_width": est.half_width,
                    "bound": None if math.isinf(bound.value) else bound.value,
                    "clamped_bound": bound.clamped,
                    "mode": est.mode,
                },
                sort_keys=True,
            )
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
