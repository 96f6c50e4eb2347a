"""Edge-minimality of k-edge-connected multigraphs."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import edge_connectivity, is_k_edge_connected
from .errors import NotKConnected
from .multigraph import Multigraph


@dataclass(frozen=True)
class MinimalityReport:
    k: int
    per_edge: tuple[tuple[int, int], ...]
    violating_edges: tuple[int, ...]

    @property
    def is_minimal(self) -> bool:
        return not self.violating_edges

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "is_minimal": self.is_minimal,
            "per_edge": [{"edge": e, "lambda": lam} for e, lam in self.per_edge],
            "violating_edges": list(self.violating_edges),
        }


def _require_k_connected(g: Multigraph, k: int) -> None:
    if not is_k_edge_connected(g, k):
        raise NotKConnected(f"graph is not {k}-edge-connected")


def is_edge_minimal(g: Multigraph, k: int) -> MinimalityReport:
    """Adjacency criterion: a k-edge-connected graph is edge-minimal iff
    every edge's endpoints have lambda <= k."""
    _require_k_connected(g, k)
    per_edge = tuple((eid, edge_connectivity(g, u, v)) for eid, u, v in g.edges)
    violating = tuple(eid for eid, lam in per_edge if lam > k)
    return MinimalityReport(k, per_edge, violating)


def cross_check_minimality(g: Multigraph, k: int) -> bool:
    """Definitional check: no single edge can be dropped while staying
    k-edge-connected."""
    _require_k_connected(g, k)
    return not any(is_k_edge_connected(g.remove_edge(eid), k) for eid in g.edge_ids)


def reduce_to_edge_minimal(g: Multigraph, k: int) -> tuple[Multigraph, list[int]]:
    """Greedily drop edges in ascending id order while k-connectivity holds.

    One ascending pass suffices: an edge that cannot be dropped now cannot
    be dropped from any later subgraph either.
    """
    _require_k_connected(g, k)
    removed = []
    for eid in g.edge_ids:
        h = g.remove_edge(eid)
        if is_k_edge_connected(h, k):
            g = h
            removed.append(eid)
    return g, removed
