"""How tight is the concentration tail bound for sampling coverage?

For the sampling strategy on a random c-regular selection, coverage at a=1
concentrates sharply around r(1 - e^{-ck}).  The tail bound says coverage
falls below r(1 - 2e^{-ck}) with probability at most (e/4)^{r(1 - e^{-ck})}.
We compare that threshold and bound against a seed sweep: even at modest r
the bound is already so small that no run should ever dip below threshold.
"""
from recsubgraph import (
    FixedDegreeSpec,
    ProblemParams,
    SolverConfig,
    concentration_bound,
    coverage,
    gen_fixed_degree,
    sampling_with_stats,
)

TRIALS = 400


def main():
    for l, r, d, c in ((100, 100, 10, 1), (400, 400, 12, 1), (400, 800, 16, 2)):
        ck = c * l / r
        threshold, prob = concentration_bound(r=r, ck=ck)
        below = 0
        lo = r
        for seed in range(TRIALS):
            g = gen_fixed_degree(FixedDegreeSpec(l=l, r=r, d=d, seed=seed))
            sub, _ = sampling_with_stats(
                g, SolverConfig(params=ProblemParams(c=c, a=1), seed=seed)
            )
            cov = coverage(g, sub, 1)
            below += cov < threshold
            lo = min(lo, cov)
        print(f"l={l} r={r} c={c} (ck={ck:.2f}):")
        print(f"  guaranteed: P(coverage < {threshold:.1f}) <= {prob:.3e}")
        print(f"  observed over {TRIALS} seeds: min coverage {lo}, "
              f"{below} run(s) below threshold")
        print()


if __name__ == "__main__":
    main()
