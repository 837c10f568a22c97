"""Print M(s,n,k) over the integer-ns grid, one row per (n, k)."""
import argparse

from fracmatch.counting import eval_M, integer_ns_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            cells = []
            for s in integer_ns_grid(n, k):
                ec = eval_M(n, k, s)
                cells.append(f"s={s}: {ec.M} (c={ec.argmax_c})")
            print(f"n={n:<3} k={k:<3} " + "  ".join(cells))


if __name__ == "__main__":
    main()
