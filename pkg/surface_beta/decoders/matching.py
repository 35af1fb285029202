"""Exact minimum-weight perfect matching on defect graphs.

A :class:`DefectGraph` holds k real nodes with pairwise weights and, optionally,
one virtual boundary partner per node (boundary-boundary edges weigh 0). Up to
``DP_LIMIT`` real nodes the matching is solved by subset dynamic programming
with a fixed tie-break: the lowest unmatched node takes the lowest-index partner
among optimal choices, its own boundary last. That is the lexicographically
smallest sorted edge list over the expanded 2k-node graph.
Larger graphs go to the networkx blossom implementation (exact, tie-break
not guaranteed).
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from surface_beta.core.exceptions import MatchingError

logger = logging.getLogger(__name__)

DP_LIMIT = 16

Weight = Optional[float]


@dataclass(frozen=True)
class DefectGraph:
    weights: tuple[tuple[Weight, ...], ...]
    boundary: Optional[tuple[Weight, ...]] = None

    @classmethod
    def from_matrix(cls, weights: Sequence[Sequence[Weight]] | np.ndarray, boundary: Optional[Sequence[Weight]] = None) -> "DefectGraph":
        w = tuple(tuple(None if v is None else float(v) for v in row) for row in weights)
        b = None if boundary is None else tuple(None if v is None else float(v) for v in boundary)
        return cls(w, b)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def node_count(self) -> int:
        """Real nodes plus virtual boundary nodes."""
        return 2 * self.size if self.boundary is not None else self.size


@dataclass(frozen=True)
class Pairing:
    """Matched pairs (i, j) with i < j; j is None when i goes to its boundary."""

    pairs: tuple[tuple[int, Optional[int]], ...]
    weight: float

    def edges(self, size: int) -> list[tuple[int, int]]:
        """Sorted edge list over the expanded graph (boundary of i is node size + i)."""
        out: list[tuple[int, int]] = []
        free: list[int] = []
        for i, j in self.pairs:
            if j is None:
                out.append((i, size + i))
            else:
                out.append((i, j))
                free += [size + i, size + j]
        free.sort()
        out += [(free[a], free[a + 1]) for a in range(0, len(free), 2)]
        return sorted(out)


def _solve_dp(graph: DefectGraph) -> Pairing:
    w, b, k = graph.weights, graph.boundary, graph.size

    @functools.lru_cache(maxsize=None)
    def best(mask: int) -> tuple[float, Optional[tuple[int, Optional[int]]]]:
        if mask == 0:
            return 0.0, None
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        best_cost, choice = math.inf, None
        for j in range(i + 1, k):
            if not (rest >> j) & 1 or w[i][j] is None:
                continue
            c = w[i][j] + best(rest & ~(1 << j))[0]
            if c < best_cost:
                best_cost, choice = c, (i, j)
        if b is not None and b[i] is not None:
            c = b[i] + best(rest)[0]
            if c < best_cost:
                best_cost, choice = c, (i, None)
        return best_cost, choice

    full = (1 << k) - 1
    total, _ = best(full)
    if math.isinf(total):
        raise MatchingError("Graph admits no perfect matching")

    pairs = []
    mask = full
    while mask:
        _, (i, j) = best(mask)
        pairs.append((i, j))
        mask &= ~(1 << i)
        if j is not None:
            mask &= ~(1 << j)
    return Pairing(tuple(pairs), total)


_warned_blossom = False


def _solve_blossom(graph: DefectGraph) -> Pairing:
    global _warned_blossom
    if not _warned_blossom:
        logger.warning("Matching %d nodes with networkx blossom; tie-break not lexicographic", graph.size)
        _warned_blossom = True

    k = graph.size
    g = nx.Graph()
    g.add_nodes_from(range(graph.node_count))
    for i in range(k):
        for j in range(i + 1, k):
            if graph.weights[i][j] is not None:
                g.add_edge(i, j, weight=graph.weights[i][j])
    if graph.boundary is not None:
        for i in range(k):
            if graph.boundary[i] is not None:
                g.add_edge(i, k + i, weight=graph.boundary[i])
            for j in range(i + 1, k):
                g.add_edge(k + i, k + j, weight=0.0)

    matching = nx.min_weight_matching(g)
    if 2 * len(matching) != graph.node_count:
        raise MatchingError("Graph admits no perfect matching")

    pairs: list[tuple[int, Optional[int]]] = []
    total = 0.0
    for u, v in matching:
        u, v = min(u, v), max(u, v)
        if u >= k:
            continue
        if v >= k:
            pairs.append((u, None))
        else:
            pairs.append((u, v))
        total += g[u][v]["weight"]
    return Pairing(tuple(sorted(pairs, key=lambda p: p[0])), total)


def min_weight_perfect_matching(graph: DefectGraph) -> Pairing:
    """Exact minimum-weight perfect matching with deterministic tie-break."""
    if graph.node_count % 2:
        raise MatchingError(f"Odd node count {graph.node_count}")
    if graph.size == 0:
        return Pairing((), 0.0)
    if graph.size <= DP_LIMIT:
        return _solve_dp(graph)
    return _solve_blossom(graph)
