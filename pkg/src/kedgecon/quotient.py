"""Equivalence classes of "at least k edge-disjoint paths" and the quotient
multigraph obtained by contracting the (k+1)-classes of a k-edge-connected
graph."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import (
    _check_k,
    class_connectivity,
    is_exactly_k_edge_connected,
    is_k_edge_connected,
    lambda_matrix,
)
from .errors import NotEdgeMinimal, NotKConnected
from .minimality import is_edge_minimal
from .multigraph import Multigraph, contract_with_origin
from .report import VerificationReport


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    threshold_k: int

    def to_json(self) -> dict:
        return {"threshold_k": self.threshold_k, "classes": [list(c) for c in self.classes]}


@dataclass(frozen=True)
class QuotientGraph:
    graph: Multigraph
    partition: ClassPartition
    edge_origin: dict[int, int]

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "classes": [list(c) for c in self.partition.classes],
            "degrees": self.graph.degrees(),
            "edges": [
                {"id": eid, "u": u, "v": v, "origin": self.edge_origin[eid]}
                for eid, u, v in self.graph.edges
            ],
        }


def _partition_from_groups(n: int, groups, k: int) -> ClassPartition:
    classes = sorted(tuple(sorted(c)) for c in groups)
    class_of = [0] * n
    for ci, c in enumerate(classes):
        for v in c:
            class_of[v] = ci
    return ClassPartition(tuple(classes), tuple(class_of), k)


def r_k_classes(g: Multigraph, k: int) -> ClassPartition:
    """Partition vertices into classes of the relation lambda(u, v) >= k.

    Pairs already joined through earlier merges are skipped; the relation
    is transitive so their answer is known.
    """
    _check_k(k)
    key = ("classes", k)
    part = g._cache.get(key)
    if part is not None:
        return part
    if k == 1:
        part = _partition_from_groups(g.n, g.components(), k)
    else:
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        fg = g.kernel()
        for u in range(g.n):
            for v in range(u + 1, g.n):
                ru, rv = find(u), find(v)
                if ru != rv and fg.flow_value(u, v, k) >= k:
                    parent[max(ru, rv)] = min(ru, rv)
        groups = {}
        for v in range(g.n):
            groups.setdefault(find(v), []).append(v)
        part = _partition_from_groups(g.n, groups.values(), k)
    g._cache[key] = part
    return part


def partition_violations(g: Multigraph, part: ClassPartition) -> list[str]:
    """Re-check a partition against all-pairs lambda, without union-find."""
    mat = lambda_matrix(g)
    k = part.threshold_k
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            same = part.class_of[u] == part.class_of[v]
            if same and mat[u][v] < k:
                out.append(f"{u},{v} share a class but lambda={mat[u][v]} < {k}")
            elif not same and mat[u][v] >= k:
                out.append(f"{u},{v} in different classes but lambda={mat[u][v]} >= {k}")
    return out


def quotient_graph(g: Multigraph, k: int) -> QuotientGraph:
    if not is_k_edge_connected(g, k):
        raise NotKConnected(f"graph is not {k}-edge-connected")
    part = r_k_classes(g, k + 1)
    h, origin, _ = contract_with_origin(g, part.classes)
    return QuotientGraph(h, part, origin)


def class_separation_violations(g: Multigraph, k: int) -> list[str]:
    """Pairs of distinct lambda>=k classes joined by more than k-1
    edge-disjoint paths."""
    part = r_k_classes(g, k)
    out = []
    cs = part.classes
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            c = class_connectivity(g, cs[i], cs[j])
            if c > k - 1:
                out.append(f"classes {list(cs[i])} and {list(cs[j])} joined by {c} > {k - 1} paths")
    return out


def check_quotient_properties(g: Multigraph, k: int, report: VerificationReport | None = None) -> VerificationReport:
    """Check the structural claims about the quotient of an edge-minimal
    k-edge-connected graph.

    Claims recorded: ``prop8`` (quotient has >= 2 vertices and is exactly
    k-edge-connected), ``prop9`` (class degree >= every member's degree),
    ``prop9.no_intraclass_edge`` (no edge inside a class) and ``prop4``
    (distinct (k+1)-classes are joined by at most k paths).
    """
    if not is_k_edge_connected(g, k):
        raise NotKConnected(f"graph is not {k}-edge-connected")
    if not is_edge_minimal(g, k).is_minimal:
        raise NotEdgeMinimal(f"graph is not edge-minimal for k={k}")
    report = report if report is not None else VerificationReport()
    q = quotient_graph(g, k)
    h = q.graph

    ok = h.n >= 2 and is_exactly_k_edge_connected(h, k)
    report.record("prop8", ok, g, "" if ok else f"quotient n={h.n} not exactly {k}-edge-connected")

    qdeg = h.degrees()
    gdeg = g.degrees()
    bad = [
        f"class {list(c)} degree {qdeg[ci]} < member degree {max(gdeg[v] for v in c)}"
        for ci, c in enumerate(q.partition.classes)
        if qdeg[ci] < max(gdeg[v] for v in c)
    ]
    report.record("prop9", not bad, g, "; ".join(bad))

    inner = [eid for eid, u, v in g.edges if q.partition.class_of[u] == q.partition.class_of[v]]
    report.record("prop9.no_intraclass_edge", not inner, g, f"intra-class edges {inner}" if inner else "")

    sep = class_separation_violations(g, k + 1)
    report.record("prop4", not sep, g, "; ".join(sep))
    return report
