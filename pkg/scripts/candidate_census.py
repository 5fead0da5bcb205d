#!/usr/bin/env python3
"""Candidate census: orbit counts of every candidate group at (m, n) and the
list of colliding pairs, escalating size until collisions disappear or the
budget stops the climb.

Example:
    python scripts/candidate_census.py --m 2 --n 2 --escalate
"""

import argparse
import json
import sys

from switchlab.orbits import BudgetExceededError, DEFAULT_ORBIT_BUDGET, distinguish_candidates


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--with-swap", action="store_true", dest="with_swap")
    parser.add_argument("--budget", type=int, default=DEFAULT_ORBIT_BUDGET)
    parser.add_argument(
        "--escalate",
        action="store_true",
        help="grow (m, n) one vertex at a time while collisions remain",
    )
    args = parser.parse_args(argv)

    m, n = args.m, args.n
    while True:
        try:
            report = distinguish_candidates(m, n, args.with_swap, args.budget)
        except BudgetExceededError as exc:
            print(json.dumps({"stopped": str(exc)}, sort_keys=True))
            return 0
        print(json.dumps(report, sort_keys=True))
        if not args.escalate or not report["collisions"]:
            return 0
        m, n = (m, n + 1) if n < m else (m + 1, n)


if __name__ == "__main__":
    sys.exit(main())
