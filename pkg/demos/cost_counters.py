"""Work counters: how solver effort scales as the edge count doubles.

Each strategy reports two counters: edges_touched (edges examined while
building the selection) and peak_aux (the largest auxiliary working set
held at any point).  Doubling the graph doubles edges_touched for both
strategies — a single pass over the input.  Sampling's working set stays
at c slots per source regardless of size, while greedy tracks remaining
capacity for every source, so its working set grows with l.
"""
from recsubgraph import (
    FixedDegreeSpec,
    ProblemParams,
    SolverConfig,
    gen_fixed_degree,
    greedy_with_stats,
    sampling_with_stats,
)

CFG = SolverConfig(params=ProblemParams(c=3, a=1), seed=11)


def main():
    print(f"{'l':>6} {'r':>6} {'m':>7} | {'sampling':>18} | {'greedy':>18}")
    print(f"{'':>6} {'':>6} {'':>7} | {'touched':>9} {'peak':>8} | "
          f"{'touched':>9} {'peak':>8}")
    prev = None
    for scale in (1, 2, 4, 8, 16):
        l, r, d = 250 * scale, 500 * scale, 8
        g = gen_fixed_degree(FixedDegreeSpec(l=l, r=r, d=d, seed=scale))
        _, samp = sampling_with_stats(g, CFG)
        _, grdy = greedy_with_stats(g, CFG)
        row = (samp.edges_touched, samp.peak_aux,
               grdy.edges_touched, grdy.peak_aux)
        ratios = ""
        if prev is not None:
            ratios = "   x" + " x".join(f"{n / p:.2f}" for n, p in zip(row, prev))
        print(f"{l:>6} {r:>6} {g.m:>7} | {row[0]:>9} {row[1]:>8} | "
              f"{row[2]:>9} {row[3]:>8}{ratios}")
        prev = row
    print("\nedges_touched doubles with m (one streaming pass); sampling's peak")
    print("stays at c while greedy's tracks l, matching the x1.00/x2.00 columns.")


if __name__ == "__main__":
    main()
