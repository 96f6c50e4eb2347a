"""Edge-disjoint path counts, minimum cuts and connectivity predicates.

All values come from integral unit-capacity maximum flow on the flow
kernel.  Results are cached on the (immutable) graph instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadK, EmptyVertexSet, OverlappingSets, SameVertex, TooFewVertices
from .multigraph import EdgeCut, Multigraph, contract_with_origin


@dataclass(frozen=True)
class FlowResult:
    """Maximum packing of edge-disjoint paths with its certifying cut."""

    value: int
    paths: tuple[tuple[int, ...], ...]
    cut: EdgeCut


def _check_pair(g: Multigraph, u: int, v: int) -> None:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SameVertex(u)


def _check_k(k) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise BadK(f"k must be an integer >= 1, got {k!r}")


def _lam_cache(g: Multigraph) -> dict:
    cache = g._cache.get("lam")
    if cache is None:
        cache = g._cache["lam"] = {}
    return cache


def edge_connectivity(g: Multigraph, u: int, v: int) -> int:
    """lambda(u, v) as a bare count (cached)."""
    _check_pair(g, u, v)
    key = (u, v) if u < v else (v, u)
    cache = _lam_cache(g)
    val = cache.get(key)
    if val is None:
        val = cache[key] = g.kernel().flow_value(key[0], key[1])
    return val


def _decompose_paths(g: Multigraph, flow: list[int], u: int, v: int, value: int):
    out_edges = [[] for _ in range(g.n)]
    for (eid, a, b), f in zip(g.edges, flow):
        if f == 1:
            out_edges[a].append((eid, b))
        elif f == -1:
            out_edges[b].append((eid, a))
    cursor = [0] * g.n
    paths = []
    for _ in range(value):
        walk = []
        x = u
        while x != v:
            eid, w = out_edges[x][cursor[x]]
            cursor[x] += 1
            walk.append(eid)
            x = w
        paths.append(tuple(walk))
    return tuple(paths)


def local_edge_connectivity(g: Multigraph, u: int, v: int) -> FlowResult:
    """Maximum number of pairwise edge-disjoint u-v paths, the paths
    themselves, and a minimum u-v cut of the same size.

    Disconnected pairs give value 0 with the component of ``u`` as side1.
    """
    _check_pair(g, u, v)
    fg = g.kernel()
    value, flow = fg.max_flow(u, v)
    reach = fg.reachable(flow, u)
    cut = EdgeCut.from_side(g, [x for x in g.vertices if reach[x]])
    paths = _decompose_paths(g, flow, u, v, value)
    key = (u, v) if u < v else (v, u)
    _lam_cache(g)[key] = value
    return FlowResult(value, paths, cut)


def min_edge_cut(g: Multigraph, u: int, v: int) -> EdgeCut:
    """Canonical minimum u-v cut: side1 is the residual-reachable set of u."""
    return local_edge_connectivity(g, u, v).cut


def global_edge_connectivity(g: Multigraph) -> int:
    if g.n < 2:
        raise TooFewVertices("need at least two vertices")
    val = g._cache.get("global")
    if val is None:
        val = min(edge_connectivity(g, 0, v) for v in range(1, g.n))
        g._cache["global"] = val
    return val


def is_k_edge_connected(g: Multigraph, k: int) -> bool:
    _check_k(k)
    if g.n < 2:
        raise TooFewVertices("need at least two vertices")
    val = g._cache.get("global")
    if val is not None:
        return val >= k
    fg = g.kernel()
    cache = _lam_cache(g)
    for v in range(1, g.n):
        known = cache.get((0, v))
        if known is not None:
            if known < k:
                return False
        elif fg.flow_value(0, v, k) < k:
            return False
    return True


def lambda_matrix(g: Multigraph) -> list[list[int]]:
    """All-pairs lambda; the diagonal is 0."""
    mat = g._cache.get("lammat")
    if mat is None:
        mat = g.kernel().lambda_matrix()
        g._cache["lammat"] = mat
        cache = _lam_cache(g)
        for s in range(g.n):
            for t in range(s + 1, g.n):
                cache[(s, t)] = mat[s][t]
        if g.n >= 2:
            g._cache["global"] = min(mat[0][1:])
    return mat


def is_exactly_k_edge_connected(g: Multigraph, k: int) -> bool:
    _check_k(k)
    if g.n < 2:
        raise TooFewVertices("need at least two vertices")
    if not is_k_edge_connected(g, k):
        return False
    mat = lambda_matrix(g)
    return all(mat[s][t] == k for s in range(g.n) for t in range(s + 1, g.n))


def class_connectivity(g: Multigraph, a, b) -> int:
    """Edge-disjoint paths with one end in ``a`` and the other in ``b``."""
    a = set(a)
    b = set(b)
    if not a or not b:
        raise EmptyVertexSet("vertex sets must be nonempty")
    if a & b:
        raise OverlappingSets(sorted(a & b))
    for x in a | b:
        g.check_vertex(x)
    if len(a) == 1 and len(b) == 1:
        return edge_connectivity(g, next(iter(a)), next(iter(b)))
    rest = [[x] for x in g.vertices if x not in a and x not in b]
    h, _, _ = contract_with_origin(g, [sorted(a), sorted(b)] + rest)
    return h.kernel().flow_value(0, 1)
