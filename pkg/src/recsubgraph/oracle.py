"""Exact optima for small instances via max-flow feasibility search.

A target set T is fully coverable iff the flow network (source -> each u with
capacity c, u -> v with capacity 1 per distinct candidate edge, v -> sink with
capacity a for v in T) carries ``a * |T|`` units.  The exact optimum walks
candidate target subsets by decreasing size and returns the first feasible
size — exponential in r, hence the hard size guard.
"""
from __future__ import annotations

from itertools import combinations

from .graph import BipartiteGraph, ProblemParams

__all__ = [
    "OracleSizeError",
    "FlowNetwork",
    "max_flow",
    "bmatching_value",
    "exact_opt",
    "SIZE_GUARD",
]

SIZE_GUARD = 20  # exact_opt refuses l or r beyond this unless forced


class OracleSizeError(ValueError):
    """Instance too large for exhaustive search."""


class FlowNetwork:
    """Residual-arc flow network.

    Node layout for selection problems: ``0`` is the source, ``1 .. l`` the
    left vertices, ``l+1 .. l+r`` the right vertices, ``l+r+1`` the sink.
    """

    def __init__(self, n_nodes: int, source: int = 0, sink: int | None = None) -> None:
        self.n = n_nodes
        self.source = source
        self.sink = n_nodes - 1 if sink is None else sink
        self.head: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    @classmethod
    def from_selection_problem(
        cls, graph: BipartiteGraph, params: ProblemParams, targets
    ) -> "FlowNetwork":
        """Budgeted-coverage network; sink arcs open only for ``targets``."""
        l, r = graph.l, graph.r
        net = cls(l + r + 2)
        net.source = 0
        net.sink = l + r + 1
        for u in range(l):
            net.add_arc(0, 1 + u, params.c)
        seen: set[tuple[int, int]] = set()
        for u, v in zip(graph.edge_u.tolist(), graph.edge_v.tolist()):
            if (u, v) not in seen:  # parallel candidates carry no extra flow
                seen.add((u, v))
                net.add_arc(1 + u, 1 + l + v, 1)
        for v in targets:
            net.add_arc(1 + l + v, net.sink, params.a)
        return net


def max_flow(net: FlowNetwork) -> int:
    """Dinic's algorithm between ``net.source`` and ``net.sink``."""
    s, t = net.source, net.sink
    total = 0
    while True:
        level = [-1] * net.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for e in net.head[u]:
                v = net.to[e]
                if net.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        if level[t] < 0:
            return total
        ptr = [0] * net.n

        def push(u: int, limit: int) -> int:
            if u == t:
                return limit
            while ptr[u] < len(net.head[u]):
                e = net.head[u][ptr[u]]
                v = net.to[e]
                if net.cap[e] > 0 and level[v] == level[u] + 1:
                    got = push(v, min(limit, net.cap[e]))
                    if got > 0:
                        net.cap[e] -= got
                        net.cap[e ^ 1] += got
                        return got
                ptr[u] += 1
            return 0

        while True:
            got = push(s, 1 << 60)
            if got == 0:
                break
            total += got


def bmatching_value(graph: BipartiteGraph, c: int) -> int:
    """Optimal coverage for ``a == 1``: a degree-constrained matching value."""
    params = ProblemParams(c=c, a=1)
    net = FlowNetwork.from_selection_problem(graph, params, range(graph.r))
    return max_flow(net)


def exact_opt(
    graph: BipartiteGraph, params: ProblemParams, force: bool = False
) -> int:
    """Exact maximum coverage, by exhaustive target-subset search.

    Only targets with at least ``a`` distinct candidate sources can ever be
    covered; subsets of them are tried in decreasing size with a flow
    feasibility check each, returning on the first feasible size.  Refuses
    ``l`` or ``r`` beyond :data:`SIZE_GUARD` unless ``force`` is set.
    """
    if not force and (graph.l > SIZE_GUARD or graph.r > SIZE_GUARD):
        raise OracleSizeError(
            f"instance {graph.l}x{graph.r} exceeds the size guard "
            f"({SIZE_GUARD}); pass force=True to insist"
        )
    cands = [
        v
        for v, deg in enumerate(graph.distinct_in_degrees().tolist())
        if deg >= params.a
    ]
    if not cands:
        return 0
    # Two cheap true bounds shrink the search: the budget bound and the flow
    # value with every candidate's sink open.
    smax = min(len(cands), (graph.l * params.c) // params.a)
    full = max_flow(FlowNetwork.from_selection_problem(graph, params, cands))
    smax = min(smax, full // params.a)
    for size in range(smax, 0, -1):
        want = params.a * size
        for subset in combinations(cands, size):
            net = FlowNetwork.from_selection_problem(graph, params, subset)
            if max_flow(net) == want:
                return size
    return 0
