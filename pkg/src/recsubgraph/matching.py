"""Maximum and depth-capped bipartite matchings (Hopcroft–Karp family).

The depth-capped variant stops as soon as the shortest augmenting path would
exceed ``max_path_len`` edges; since a matching with no augmenting path
shorter than 2·alpha+1 is within a factor 1 - 1/alpha of maximum, the cap
trades quality for time in a controlled way.  ``max_path_len=1`` degenerates
to a maximal matching.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import BipartiteGraph

__all__ = ["Matching", "hopcroft_karp", "bounded_matching"]

_INF = float("inf")


@dataclass
class Matching:
    """Mutual-inverse partner arrays: ``match_l[u] == v`` iff ``match_r[v] == u``."""

    match_l: list[int]  # partner of each left vertex, -1 when unmatched
    match_r: list[int]
    size: int
    phases: int  # BFS/augment rounds executed


def _dedup_adjacency(graph: BipartiteGraph) -> list[list[int]]:
    # Parallel edges add nothing to a matching: first occurrence wins.
    if graph.m == 0:
        return [[] for _ in range(graph.l)]
    keys = np.unique(graph.edge_keys())
    eu = (keys // graph.r).tolist()
    ev = (keys % graph.r).tolist()
    adj: list[list[int]] = [[] for _ in range(graph.l)]
    for u, v in zip(eu, ev):
        adj[u].append(v)
    return adj


def _hk_core(
    adj: list[list[int]],
    n_left: int,
    n_right: int,
    max_path_len: int | None = None,
    initial: list[int] | None = None,
) -> tuple[list[int], list[int], int, int, int]:
    """Layered augmentation on an adjacency-list graph.

    Returns ``(match_l, match_r, size, phases, edge_scans)``.  With
    ``max_path_len=None`` this is plain Hopcroft–Karp; otherwise augmentation
    stops once the shortest augmenting path exceeds the cap.  ``initial`` seeds
    ``match_l`` (callers must pass a valid partial matching).
    """
    match_l = list(initial) if initial is not None else [-1] * n_left
    match_r = [-1] * n_right
    for u, v in enumerate(match_l):
        if v >= 0:
            match_r[v] = u
    size = sum(1 for v in match_l if v >= 0)
    # A path ending at a left vertex of BFS depth t has 2t+1 edges.
    depth_cap = _INF if max_path_len is None else (max_path_len - 1) // 2
    dist = [_INF] * n_left
    phases = 0
    scans = 0

    while True:
        # BFS from every free left vertex; find the shallowest layer that
        # reaches a free right vertex.
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= found or du > depth_cap:
                continue
            for v in adj[u]:
                scans += 1
                w = match_r[v]
                if w < 0:
                    if found == _INF:
                        found = du
                elif dist[w] == _INF:
                    dist[w] = du + 1
                    queue.append(w)
        if found == _INF or found > depth_cap:
            break
        phases += 1

        # Depth-first augmentation along shortest layers only, one arc pointer
        # per left vertex so each edge is tried at most once per phase.
        ptr = [0] * n_left
        for root in range(n_left):
            if match_l[root] >= 0:
                continue
            stack = [root]
            trail: list[tuple[int, int]] = []  # (u, v) pairs to re-point on success
            while stack:
                u = stack[-1]
                du = dist[u]
                advanced = False
                while ptr[u] < len(adj[u]):
                    v = adj[u][ptr[u]]
                    ptr[u] += 1
                    scans += 1
                    w = match_r[v]
                    if w < 0:
                        if du == found:  # complete only at the shortest layer
                            trail.append((u, v))
                            for uu, vv in trail:
                                match_l[uu] = vv
                                match_r[vv] = uu
                            size += 1
                            stack.clear()
                            advanced = True
                            break
                    elif dist[w] == du + 1 and dist[w] <= found:
                        trail.append((u, v))
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = _INF  # dead end for the rest of this phase
                    stack.pop()
                    if trail:
                        trail.pop()
    return match_l, match_r, size, phases, scans


def hopcroft_karp(graph: BipartiteGraph) -> Matching:
    """Maximum matching of ``graph`` (parallel edges ignored)."""
    adj = _dedup_adjacency(graph)
    ml, mr, size, phases, _ = _hk_core(adj, graph.l, graph.r)
    return Matching(ml, mr, size, phases)


def bounded_matching(
    graph: BipartiteGraph,
    max_path_len: int,
    initial: list[int] | None = None,
) -> Matching:
    """Matching with no remaining augmenting path of ``<= max_path_len`` edges.

    ``max_path_len`` must be odd and >= 1 (augmenting paths have odd length).
    ``initial`` optionally seeds the search with a valid partial matching,
    given as a ``match_l`` partner list.
    """
    if max_path_len < 1 or max_path_len % 2 == 0:
        raise ValueError(f"max_path_len must be odd and >= 1, got {max_path_len}")
    adj = _dedup_adjacency(graph)
    ml, mr, size, phases, _ = _hk_core(adj, graph.l, graph.r, max_path_len, initial)
    return Matching(ml, mr, size, phases)
