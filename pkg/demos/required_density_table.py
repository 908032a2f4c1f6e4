"""How many picks per source does 95% coverage need?

The sampling strategy's expected coverage depends on the product c*k (picks
per source times the left/right size ratio).  This script prints the density
required to reach a few coverage targets for in-degree requirements a=1..5,
then scans the worst-case ratio curve to show the floor at 1 - 1/e.
"""
import math

from recsubgraph import required_ck, sampling_approx_ratio


def main():
    targets = (0.80, 0.90, 0.95, 0.99)
    print("required c*k to reach a coverage target (fraction of r)")
    print(f"{'a':>3} " + " ".join(f"{t:>8.0%}" for t in targets))
    for a in range(1, 6):
        row = " ".join(f"{required_ck(a, t):>8.2f}" for t in targets)
        print(f"{a:>3} {row}")

    print()
    print("worst-case sampling ratio (coverage / trivial upper bound) by c*k:")
    grid = [i / 100 for i in range(1, 1001)]
    vals = [sampling_approx_ratio(ck) for ck in grid]
    worst = min(vals)
    at = grid[vals.index(worst)]
    for ck in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0):
        print(f"  ck={ck:<5} ratio >= {sampling_approx_ratio(ck):.4f}")
    print(f"minimum over the grid: {worst:.5f} at ck={at}")
    print(f"floor 1 - 1/e        : {1 - 1 / math.e:.5f}")


if __name__ == "__main__":
    main()
