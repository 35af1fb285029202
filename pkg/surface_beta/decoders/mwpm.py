"""Minimum-weight perfect-matching decoder for CSS planar codes.

X sites see the Z part of an error, Z plaquettes the X part; the two halves
are matched independently on their check graphs with geometric (hop count)
weights, so a Y counts as coincident X and Z defects.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field

import networkx as nx

from surface_beta.core.exceptions import DecoderError, SyndromeError
from surface_beta.codes.pauli import PauliOperator, hadamard
from surface_beta.codes.surface import SurfaceCode, Syndrome, Variant, build_surface_code
from .matching import DefectGraph, min_weight_perfect_matching

logger = logging.getLogger(__name__)

BOUNDARY = -1
_CACHE_LIMIT = 500_000


@dataclass
class CheckGraph:
    """Checks of one CSS type joined by data qubits; boundary qubits lead to BOUNDARY.

    BOUNDARY is a sink: shortest paths end there but never pass through it.
    Parallel edges keep the lowest qubit, and neighbours are inserted in qubit
    order so the breadth-first paths are canonical.
    """

    kind: str
    checks: tuple[int, ...]
    graph: nx.DiGraph
    _paths: dict[int, dict[int, list[int]]] = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, code: SurfaceCode, kind: str) -> "CheckGraph":
        checks = tuple(i for i, ch in enumerate(code.checks) if ch.kind == kind)
        touching: dict[int, list[int]] = {q: [] for q in range(1, code.n + 1)}
        for i in checks:
            for q in code.checks[i].qubits:
                touching[q].append(i)
        adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in checks}
        for q, owners in touching.items():
            if len(owners) == 2:
                a, b = owners
                adjacency[a].append((q, b))
                adjacency[b].append((q, a))
            elif len(owners) == 1:
                adjacency[owners[0]].append((q, BOUNDARY))

        g = nx.DiGraph()
        g.add_nodes_from(checks)
        g.add_node(BOUNDARY)
        for u in checks:
            for q, v in sorted(adjacency[u]):
                if not g.has_edge(u, v):
                    g.add_edge(u, v, qubit=q)
        graph = cls(kind, checks, g)
        for i in checks:
            graph._paths[i] = nx.single_source_shortest_path(g, i)
        return graph

    def _nodes(self, a: int, b: int) -> list[int]:
        if a not in self._paths:
            self._paths[a] = nx.single_source_shortest_path(self.graph, a)
        return self._paths[a][b]

    def distance(self, a: int, b: int) -> int:
        return len(self._nodes(a, b)) - 1

    def path(self, a: int, b: int) -> list[int]:
        """Qubits on the canonical shortest path from check ``a`` to ``b`` (or BOUNDARY)."""
        nodes = self._nodes(a, b)
        return [self.graph.edges[u, v]["qubit"] for u, v in zip(nodes, nodes[1:])]


class MatchingDecoder:
    """Per-code MWPM state: two check graphs and a syndrome cache."""

    _instances: dict[tuple, "MatchingDecoder"] = {}

    def __init__(self, code: SurfaceCode):
        if code.variant is not Variant.CSS:
            raise DecoderError(f"MWPM is only provided for CSS codes, not {code.label}")
        self.code = code
        self.graphs = check_graphs(code.d_X, code.d_Z)
        self._cache: dict[tuple[str, tuple[int, ...]], int] = {}
        logger.debug("Built MWPM check graphs for %s", code.label)

    @classmethod
    def for_code(cls, code: SurfaceCode) -> "MatchingDecoder":
        dec = cls._instances.get(code.key)
        if dec is None:
            dec = cls(code)
            cls._instances[code.key] = dec
        return dec

    def _match(self, kind: str, defects: tuple[int, ...]) -> int:
        """Bitmask of qubits flipped by the matching of ``defects`` (generator indices)."""
        key = (kind, defects)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        graph = self.graphs[kind]
        weights = [[graph.distance(a, b) if a != b else None for b in defects] for a in defects]
        boundary = [graph.distance(a, BOUNDARY) for a in defects]
        pairing = min_weight_perfect_matching(DefectGraph.from_matrix(weights, boundary))

        mask = 0
        for i, j in pairing.pairs:
            target = BOUNDARY if j is None else defects[j]
            for q in graph.path(defects[i], target):
                mask ^= 1 << (q - 1)

        if len(self._cache) > _CACHE_LIMIT:
            self._cache.clear()
        self._cache[key] = mask
        return mask

    def decode(self, s: Syndrome) -> PauliOperator:
        if len(s.bits) != len(self.code.generators):
            raise SyndromeError(f"Syndrome has {len(s.bits)} bits, code has {len(self.code.generators)} generators")
        defects = s.defects()
        sites = tuple(i for i in defects if self.code.checks[i].kind == "X")
        plaquettes = tuple(i for i in defects if self.code.checks[i].kind == "Z")
        z_mask = self._match("X", sites) if sites else 0
        x_mask = self._match("Z", plaquettes) if plaquettes else 0
        return PauliOperator(self.code.n, x_mask, z_mask)


def decode_mwpm(code: SurfaceCode, s: Syndrome) -> PauliOperator:
    return MatchingDecoder.for_code(code).decode(s)


@functools.lru_cache(maxsize=None)
def check_graphs(d_X: int, d_Z: int) -> dict[str, CheckGraph]:
    """Site ('X') and plaquette ('Z') graphs of the CSS code; shared read-only."""
    code = build_surface_code(d_X, d_Z)
    return {kind: CheckGraph.build(code, kind) for kind in ("X", "Z")}


def pure_error(code: SurfaceCode, check: int) -> PauliOperator:
    """Operator flipping generator ``check`` alone: a chain from that check to its boundary.

    Built on the CSS lattice, then carried through the code's Hadamard relabelling.
    """
    kind = code.checks[check].kind
    mask = 0
    for q in check_graphs(code.d_X, code.d_Z)[kind].path(check, BOUNDARY):
        mask ^= 1 << (q - 1)
    op = PauliOperator(code.n, 0, mask) if kind == "X" else PauliOperator(code.n, mask, 0)
    return hadamard(op, code.hadamard_qubits) if code.hadamard_qubits else op
