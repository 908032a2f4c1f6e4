"""Closed-form coverage bounds and the cheap instance upper bound.

Everything here is a plain formula evaluation: expected-coverage lower bounds
for the sampling and greedy strategies, the worst-case approximation ratio of
sampling, the density needed to hit a coverage target, and a lower-tail
concentration estimate.  Exponentials with large negative exponents are
evaluated in log space so the formulas stay finite at desk-to-web scales.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import BipartiteGraph, ProblemParams

__all__ = [
    "BoundInputs",
    "sampling_lower_bound",
    "sampling_approx_ratio",
    "required_ck",
    "greedy_expected_bound",
    "concentration_bound",
    "upper_bound_estimate",
]


@dataclass(frozen=True)
class BoundInputs:
    """Parameter bundle for the formula evaluators.

    The evaluators also accept the same fields as plain keywords, so a bundle
    is only worth building when one parameter point feeds several formulas.
    ``d`` (fixed-degree draws) and ``p`` (Erdős–Rényi density) are optional;
    each formula states what it needs.  ``k = l / r`` and ``ck`` are derived.
    ``c`` may be fractional here — the formulas are continuous in it.
    """

    l: int
    r: int
    c: float
    a: int
    d: int | None = None
    p: float | None = None
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.l < 0 or self.r < 1:
            raise ValueError(f"need l >= 0 and r >= 1, got l={self.l}, r={self.r}")
        if self.c < 1 or self.a < 1:
            raise ValueError(f"c and a must be >= 1, got c={self.c}, a={self.a}")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")

    @property
    def k(self) -> float:
        return self.l / self.r

    @property
    def ck(self) -> float:
        return self.c * self.l / self.r

    @property
    def gamma(self) -> float:
        if self.p is None:
            raise ValueError("gamma needs p")
        if self.l <= 1:
            raise ValueError("gamma needs l > 1")
        return self.p * self.l / math.log(self.l)


def _power_sum(x: float, a: int) -> float:
    """``1 + x + ... + x^(a-1)``; the a-term sum is exact at x == 1."""
    return math.fsum(x**i for i in range(a))


def _bundle(inputs: BoundInputs | None, **kw) -> BoundInputs:
    """Resolve the dual calling convention: a bundle, or plain keywords."""
    if inputs is not None:
        if any(v is not None for v in kw.values()):
            raise TypeError("pass either a BoundInputs or keywords, not both")
        return inputs
    missing = [k for k in ("l", "r", "c", "a") if kw.get(k) is None]
    if missing:
        raise TypeError(f"missing parameter(s): {', '.join(missing)}")
    return BoundInputs(**{k: v for k, v in kw.items() if v is not None})


def sampling_lower_bound(
    inputs: BoundInputs | None = None,
    *,
    l: int | None = None,
    r: int | None = None,
    c: float | None = None,
    a: int | None = None,
) -> float:
    """Expected-coverage lower bound for the sampling strategy.

    ``r * (1 - exp(-ck + (a-1)/r) * (1 + ck + ... + ck^(a-1)))``, clamped to
    ``[0, r]``.  At ``ck == 1`` the sum is the continuous extension ``a``.
    """
    inputs = _bundle(inputs, l=l, r=r, c=c, a=a)
    ck = inputs.ck
    if ck <= 0.0:
        return 0.0
    value = inputs.r * (
        1.0 - math.exp(-ck + (inputs.a - 1) / inputs.r) * _power_sum(ck, inputs.a)
    )
    return min(float(inputs.r), max(0.0, value))


def sampling_approx_ratio(ck: float) -> float:
    """Worst-case coverage ratio of sampling at density ``ck``:
    ``(1 - exp(-ck)) / min(ck, 1)``.  Minimised at ``ck == 1`` where it equals
    ``1 - 1/e``; never below it.
    """
    if ck <= 0.0:
        raise ValueError(f"ck must be > 0, got {ck}")
    return (1.0 - math.exp(-ck)) / min(ck, 1.0)


def required_ck(a: int, target: float) -> float:
    """Smallest ``ck`` whose limiting coverage fraction reaches ``target``.

    Solves ``1 - exp(-x) * (1 + x + ... + x^(a-1)) = target`` (the r -> inf
    limit of :func:`sampling_lower_bound` divided by r) by bisection to
    ``|f(x)| < 1e-10``.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if not 0.0 < target < 1.0:
        raise ValueError(f"target must be in (0, 1), got {target}")

    def f(x: float) -> float:
        return 1.0 - math.exp(-x) * _power_sum(x, a) - target

    lo = 1e-12
    hi = 1.0
    while f(hi) < 0.0:
        hi *= 2.0
        if hi > 1e3:
            raise ValueError(f"no density below 1e3 reaches target {target} at a={a}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) < 1e-10:
            return mid
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _log_expm1(x: float) -> float:
    """log(exp(x) - 1) without overflow for large x."""
    if x > 36.0:  # exp(-x) below double resolution of 1
        return x + math.log1p(-math.exp(-x))
    return math.log(math.expm1(x))


def greedy_expected_bound(
    inputs: BoundInputs | None = None,
    *,
    l: int | None = None,
    r: int | None = None,
    c: float | None = None,
    a: int | None = None,
    p: float | None = None,
) -> float:
    """Expected-coverage lower bound for greedy on Erdős–Rényi inputs.

    ``r - a * (l*p)^(a-1) * sum_{i=0}^{r-1} (1-p)^(l - i*a/c - a + 1)``,
    clamped to ``[0, r]``; needs ``p`` with ``l * p >= 1``.  The geometric sum
    is evaluated in closed form in log space, so no r-term loop and no
    underflow for large ``l``.
    """
    inputs = _bundle(inputs, l=l, r=r, c=c, a=a, p=p)
    if inputs.p is None:
        raise ValueError("greedy_expected_bound needs p")
    p = inputs.p
    l, r, c, a = inputs.l, inputs.r, inputs.c, inputs.a
    if l * p < 1.0:
        raise ValueError(f"needs l * p >= 1, got l*p = {l * p}")
    if p >= 1.0:
        return float(r) if l >= a else 0.0
    lnq = math.log1p(-p)
    # sum_i q^(l - i*a/c - a + 1) = q^(l - a + 1) * (t^r - 1) / (t - 1),
    # a geometric sum with ratio t = q^(-a/c) > 1.
    ln_t = -(a / c) * lnq
    ln_geo = _log_expm1(r * ln_t) - _log_expm1(ln_t)
    ln_sub = (
        math.log(a) + (a - 1) * math.log(l * p) + (l - a + 1) * lnq + ln_geo
    )
    if ln_sub >= math.log(r):
        return 0.0
    return min(float(r), max(0.0, r - math.exp(ln_sub)))


def concentration_bound(
    inputs: BoundInputs | None = None,
    *,
    r: int | None = None,
    ck: float | None = None,
) -> tuple[float, float]:
    """Lower-tail threshold and its probability estimate for sampling.

    Returns ``(r * (1 - 2*exp(-ck)), (e/4)^(r * (1 - exp(-ck))))``.  The only
    parameters the formula sees are ``r`` and the density ``ck``, so those can
    be given directly (``ck`` fractional) instead of a full bundle.  The
    probability factor is computed as ``exp(x * (1 - ln 4))`` and underflows
    to 0.0 for large ``r``, which is the honest answer.
    """
    if inputs is not None:
        if r is not None or ck is not None:
            raise TypeError("pass either a BoundInputs or keywords, not both")
        r, ck = inputs.r, inputs.ck
    if r is None or ck is None:
        raise TypeError("needs r and ck (or a BoundInputs)")
    if ck <= 0.0:
        raise ValueError(f"needs ck > 0, got {ck}")
    threshold = r * (1.0 - 2.0 * math.exp(-ck))
    exponent = r * (1.0 - math.exp(-ck)) * (1.0 - math.log(4.0))
    prob = math.exp(exponent) if exponent > -745.0 else 0.0
    return threshold, prob


def upper_bound_estimate(
    graph: BipartiteGraph,
    params: ProblemParams | None = None,
    *,
    c: int | None = None,
    a: int | None = None,
) -> int:
    """Cheap true upper bound on coverage: budget-limited target count.

    ``min(floor(l*c/a), #targets with at least a distinct candidate sources)``.
    Distinct counting keeps it a true bound on multigraphs, where parallel
    candidates cannot stack up on one target.  Pass a :class:`ProblemParams`
    or ``c`` and ``a`` directly.
    """
    if params is None:
        if c is None or a is None:
            raise TypeError("needs params or both c and a")
        params = ProblemParams(c=c, a=a)
    elif c is not None or a is not None:
        raise TypeError("pass either params or c/a keywords, not both")
    budget = (graph.l * params.c) // params.a
    eligible = int(np.count_nonzero(graph.distinct_in_degrees() >= params.a))
    return int(min(budget, eligible))
