"""Run the verification harnesses over every admissible instance up to --max-n.

Writes one JSON line per (instance, harness) and a final summary line.
"""
import argparse
import json
import math
import sys
import time
from fractions import Fraction

from fracmatch.counting import eval_M, integer_ns_grid
from fracmatch.verify import (
    cross_check_bounds,
    exhaustive_tightness,
    randomized_tightness,
    threshold_search,
    verify_extremal,
)


def instances(max_n):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for s in integer_ns_grid(n, k):
                yield n, k, s


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--limit", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    failures = 0
    runs = 0
    t0 = time.perf_counter()

    def emit(kind, n, k, s, rep):
        nonlocal failures, runs
        runs += 1
        failures += not rep.passed
        print(json.dumps({"harness": kind, "n": n, "k": k, "s": str(s), **rep.to_json()}, separators=(",", ":")))

    for n, k, s in instances(args.max_n):
        emit("extremal", n, k, s, verify_extremal(n, k, s, jobs=args.jobs))
        emit("threshold", n, k, s, threshold_search(n, k, s, args.trials, args.seed))
        emit("random", n, k, s, randomized_tightness(n, k, s, args.samples, args.seed, jobs=args.jobs))
        M = eval_M(n, k, s).M
        if math.comb(math.comb(n, k), M + 1) <= args.limit:
            emit("tightness", n, k, s, exhaustive_tightness(n, k, s, args.limit, jobs=args.jobs))
        # midpoint below s: n*t = n*s - 1/2, still above k/n
        t = s - Fraction(1, 2 * n)
        emit("bounds", n, k, t, cross_check_bounds(n, k, t))

    print(json.dumps({"summary": True, "runs": runs, "failures": failures, "seconds": round(time.perf_counter() - t0, 2)}))
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
