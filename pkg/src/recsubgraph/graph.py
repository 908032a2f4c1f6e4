"""Bipartite candidate graphs, per-source selections, and coverage accounting.

A candidate graph G = (L, R, E) holds directed candidate links from source
vertices in L to target vertices in R.  A selection keeps at most ``c`` of the
candidate links per source, and a target counts as covered once it receives at
least ``a`` distinct selected links.

Adjacency is stored twice as flat CSR-style arrays (sorted by source and by
target) so solvers can scan either side without per-vertex allocations.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GraphError",
    "SubgraphValidationError",
    "ProblemParams",
    "BipartiteGraph",
    "RecSubgraph",
    "CoverageReport",
    "build_graph",
    "full_subgraph",
    "coverage",
    "validate",
]


class GraphError(ValueError):
    """Malformed graph construction input."""


class SubgraphValidationError(ValueError):
    """A selection violates its contract against the host graph."""


@dataclass(frozen=True)
class ProblemParams:
    """Out-degree budget per source (``c``) and target in-degree goal (``a``)."""

    c: int
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or self.c < 1:
            raise ValueError(f"c must be an integer >= 1, got {self.c!r}")
        if not isinstance(self.a, int) or self.a < 1:
            raise ValueError(f"a must be an integer >= 1, got {self.a!r}")

    def check_against(self, graph: "BipartiteGraph") -> None:
        """Warn when ``c`` cannot prune anything (every candidate gets kept)."""
        if graph.m == 0:
            return
        max_deg = int(graph.left_degrees.max())
        if self.c >= max_deg:
            warnings.warn(
                f"c={self.c} >= max source degree {max_deg}: "
                "sampling degenerates to keeping every candidate",
                stacklevel=3,
            )


class BipartiteGraph:
    """Immutable bipartite multigraph with both adjacency directions pre-sorted.

    Edges are kept once sorted by (u, v) — ``edge_u``/``edge_v`` with offsets
    ``indptr_l``, so ``edge_v[indptr_l[u]:indptr_l[u+1]]`` is N(u) ascending —
    and once sorted by (v, u) — ``rev_u`` with offsets ``indptr_r``.  Parallel
    edges are preserved: generators that sample with replacement may produce
    them, file input may not.
    """

    __slots__ = (
        "l",
        "r",
        "m",
        "edge_u",
        "edge_v",
        "indptr_l",
        "indptr_r",
        "rev_u",
        "_keys",
        "_distinct_in_deg",
    )

    def __init__(self, l: int, r: int, edge_u, edge_v) -> None:
        if l < 0 or r < 0:
            raise GraphError(f"side sizes must be >= 0, got l={l}, r={r}")
        eu = np.ascontiguousarray(edge_u, dtype=np.int64)
        ev = np.ascontiguousarray(edge_v, dtype=np.int64)
        if eu.ndim != 1 or eu.shape != ev.shape:
            raise GraphError("edge endpoint arrays must be 1-D and equal length")
        bad = np.flatnonzero((eu < 0) | (eu >= l) | (ev < 0) | (ev >= r))
        if bad.size:
            i = int(bad[0])
            raise GraphError(
                f"endpoint out of range at index {i}: ({int(eu[i])}, {int(ev[i])})"
                f" with l={l}, r={r}"
            )
        order = np.lexsort((ev, eu))
        eu = eu[order]
        ev = ev[order]
        self.l = int(l)
        self.r = int(r)
        self.m = int(eu.size)
        self.edge_u = eu
        self.edge_v = ev
        indptr_l = np.zeros(l + 1, dtype=np.int64)
        np.cumsum(np.bincount(eu, minlength=l), out=indptr_l[1:])
        self.indptr_l = indptr_l
        rev = np.lexsort((eu, ev))
        self.rev_u = eu[rev]
        indptr_r = np.zeros(r + 1, dtype=np.int64)
        np.cumsum(np.bincount(ev, minlength=r), out=indptr_r[1:])
        self.indptr_r = indptr_r
        for arr in (self.edge_u, self.edge_v, self.indptr_l, self.indptr_r, self.rev_u):
            arr.flags.writeable = False
        self._keys = None
        self._distinct_in_deg = None

    # -- accessors ---------------------------------------------------------

    @property
    def k(self) -> float:
        """Side ratio l/r."""
        return self.l / self.r

    @property
    def left_degrees(self) -> np.ndarray:
        return np.diff(self.indptr_l)

    @property
    def right_degrees(self) -> np.ndarray:
        return np.diff(self.indptr_r)

    def adj_l(self, u: int) -> np.ndarray:
        """Targets of source ``u``, ascending (parallel edges repeated)."""
        return self.edge_v[self.indptr_l[u] : self.indptr_l[u + 1]]

    def adj_r(self, v: int) -> np.ndarray:
        """Sources of target ``v``, ascending (parallel edges repeated)."""
        return self.rev_u[self.indptr_r[v] : self.indptr_r[v + 1]]

    def edge_keys(self) -> np.ndarray:
        """Edges encoded as ``u * r + v``; ascending because edges are (u, v)-sorted."""
        if self._keys is None:
            keys = self.edge_u * self.r + self.edge_v
            keys.flags.writeable = False
            self._keys = keys
        return self._keys

    def distinct_in_degrees(self) -> np.ndarray:
        """Per-target count of distinct sources (parallel edges collapse to one)."""
        if self._distinct_in_deg is None:
            if self.m == 0:
                deg = np.zeros(self.r, dtype=np.int64)
            else:
                uniq = np.unique(self.edge_keys())
                deg = np.bincount(uniq % self.r, minlength=self.r)
            deg.flags.writeable = False
            self._distinct_in_deg = deg
        return self._distinct_in_deg

    def has_parallel_edges(self) -> bool:
        keys = self.edge_keys()
        return bool(np.any(keys[1:] == keys[:-1]))

    def edge_list(self) -> list[tuple[int, int]]:
        return list(zip(self.edge_u.tolist(), self.edge_v.tolist()))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"BipartiteGraph(l={self.l}, r={self.r}, m={self.m})"


def build_graph(l: int, r: int, edges) -> BipartiteGraph:
    """Build a :class:`BipartiteGraph` from an iterable of ``(u, v)`` pairs."""
    pairs = list(edges)
    if pairs:
        arr = np.asarray(pairs, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be (u, v) pairs")
        return BipartiteGraph(l, r, arr[:, 0], arr[:, 1])
    empty = np.empty(0, dtype=np.int64)
    return BipartiteGraph(l, r, empty, empty)


class RecSubgraph:
    """A per-source choice of targets; ``chosen(u)`` lists u's selected targets.

    Stored flat: ``targets[indptr[u]:indptr[u+1]]`` are the picks of source u,
    sorted ascending.  Construction does not deduplicate — :func:`validate`
    reports duplicate picks as violations.
    """

    __slots__ = ("l", "r", "indptr", "targets")

    def __init__(self, l: int, r: int, indptr, targets) -> None:
        self.l = int(l)
        self.r = int(r)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.targets = np.ascontiguousarray(targets, dtype=np.int64)
        if self.indptr.shape != (l + 1,) or int(self.indptr[-1]) != self.targets.size:
            raise ValueError("inconsistent selection offsets")
        self.indptr.flags.writeable = False
        self.targets.flags.writeable = False

    @classmethod
    def from_edges(cls, l: int, r: int, sel_u, sel_v) -> "RecSubgraph":
        su = np.ascontiguousarray(sel_u, dtype=np.int64)
        sv = np.ascontiguousarray(sel_v, dtype=np.int64)
        order = np.lexsort((sv, su))
        su = su[order]
        sv = sv[order]
        indptr = np.zeros(l + 1, dtype=np.int64)
        np.cumsum(np.bincount(su, minlength=l), out=indptr[1:])
        return cls(l, r, indptr, sv)

    @classmethod
    def from_lists(cls, l: int, r: int, lists) -> "RecSubgraph":
        lists = list(lists)
        if len(lists) != l:
            raise ValueError(f"expected {l} per-source lists, got {len(lists)}")
        su = np.repeat(np.arange(l, dtype=np.int64), [len(x) for x in lists])
        sv = np.fromiter(
            (v for xs in lists for v in xs), dtype=np.int64, count=int(su.size)
        )
        return cls.from_edges(l, r, su, sv)

    @classmethod
    def empty(cls, l: int, r: int) -> "RecSubgraph":
        return cls(l, r, np.zeros(l + 1, dtype=np.int64), np.empty(0, dtype=np.int64))

    @property
    def n_selected(self) -> int:
        return int(self.targets.size)

    def chosen(self, u: int) -> np.ndarray:
        return self.targets[self.indptr[u] : self.indptr[u + 1]]

    def selected_u(self) -> np.ndarray:
        """Source endpoint of every selected link, parallel to ``targets``."""
        return np.repeat(np.arange(self.l, dtype=np.int64), np.diff(self.indptr))

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def to_lists(self) -> list[list[int]]:
        return [self.chosen(u).tolist() for u in range(self.l)]

    def edge_list(self) -> list[tuple[int, int]]:
        return list(zip(self.selected_u().tolist(), self.targets.tolist()))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RecSubgraph(l={self.l}, r={self.r}, selected={self.n_selected})"


@dataclass
class CoverageReport:
    """Outcome of one solve: coverage, the cheap upper bound, and cost proxies."""

    covered: int
    upper_bound: int
    ratio: float
    elapsed_ms: float
    peak_edges_held: int


def full_subgraph(graph: BipartiteGraph) -> RecSubgraph:
    """The no-pruning selection: every distinct candidate link is kept."""
    if graph.m == 0:
        return RecSubgraph.empty(graph.l, graph.r)
    uniq = np.unique(graph.edge_keys())
    return RecSubgraph.from_edges(graph.l, graph.r, uniq // graph.r, uniq % graph.r)


def simplify(graph: BipartiteGraph) -> BipartiteGraph:
    """The same graph with parallel edges collapsed to one."""
    if not graph.has_parallel_edges():
        return graph
    uniq = np.unique(graph.edge_keys())
    return BipartiteGraph(graph.l, graph.r, uniq // graph.r, uniq % graph.r)


def validate(
    graph: BipartiteGraph, sub: RecSubgraph, params: ProblemParams | None = None
) -> list[str]:
    """Check a selection against its host graph; return ``[]`` when clean.

    Violations come back as human-readable strings: dimension mismatches,
    per-source degree caps (only when ``params`` is given), duplicate picks,
    and picks that are not candidate edges.
    """
    if sub.l != graph.l or sub.r != graph.r:
        return [
            f"dimension mismatch: selection is {sub.l}x{sub.r}, "
            f"graph is {graph.l}x{graph.r}"
        ]
    out: list[str] = []
    if params is not None:
        for u in np.flatnonzero(sub.out_degrees() > params.c).tolist():
            out.append(f"degree cap violated at u={u}")
    if sub.n_selected == 0:
        return out
    keys = sub.selected_u() * graph.r + sub.targets
    keys_sorted = np.sort(keys)
    dup = keys_sorted[1:][keys_sorted[1:] == keys_sorted[:-1]]
    for key in np.unique(dup).tolist():
        out.append(f"duplicate edge ({key // graph.r},{key % graph.r})")
    gkeys = graph.edge_keys()
    pos = np.searchsorted(gkeys, keys)
    pos_clipped = np.minimum(pos, max(graph.m - 1, 0))
    missing = (graph.m == 0) | (gkeys[pos_clipped] != keys) if graph.m else keys == keys
    for key in np.unique(keys[missing]).tolist():
        out.append(f"non-candidate edge ({key // graph.r},{key % graph.r})")
    return out


def coverage(graph: BipartiteGraph, sub: RecSubgraph, a: int) -> int:
    """Number of targets receiving at least ``a`` distinct selected links.

    The selection is validated against ``graph`` first; an invalid selection
    raises :class:`SubgraphValidationError` naming the first violation.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    problems = validate(graph, sub, None)
    if problems:
        raise SubgraphValidationError(problems[0])
    if sub.n_selected == 0:
        return 0
    counts = np.bincount(sub.targets, minlength=graph.r)
    return int(np.count_nonzero(counts >= a))
