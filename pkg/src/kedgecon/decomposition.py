"""Non-trivial minimum cuts, vertex splitting, recursive decomposition into
quasi-k-regular pieces, and extraction of degree-k witness vertices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .connectivity import (
    _check_k,
    global_edge_connectivity,
    is_exactly_k_edge_connected,
    is_k_edge_connected,
    min_edge_cut,
)
from .errors import (
    ClaimViolation,
    NotEdgeMinimal,
    NotExactlyK,
    NotKConnected,
    NotMinCut,
    TooLarge,
    TrivialCut,
)
from .minimality import is_edge_minimal
from .multigraph import EdgeCut, Multigraph, format_mgraph
from .quotient import quotient_graph

DEFAULT_MAX_VERTICES = 16


def is_trivial_cut(g: Multigraph, cut: EdgeCut) -> bool:
    cut.validate(g)
    return len(cut.side1) == 1 or len(cut.side2) == 1


def is_quasi_k_regular(g: Multigraph, k: int) -> bool:
    return sum(1 for d in g.degrees() if d != k) <= 1


def _require_exactly_k(g: Multigraph, k: int) -> None:
    if not is_exactly_k_edge_connected(g, k):
        raise NotExactlyK(f"graph is not exactly {k}-edge-connected")


def _scan_masks(g: Multigraph, k: int, max_vertices: int) -> list[int]:
    if g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices exceeds exhaustive bound {max_vertices}")
    key = ("cut_masks", k)
    masks = g._cache.get(key)
    if masks is None:
        masks = g._cache[key] = g.kernel().cut_masks(k)
    return masks


def _side_key(g: Multigraph, mask: int) -> tuple[int, ...]:
    return tuple(v for v in g.vertices if (mask >> v) & 1)


def nontrivial_min_cuts(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[EdgeCut]:
    """Every bipartition with both sides >= 2 and exactly ``k`` crossing
    edges, each listed once (side1 holds vertex 0)."""
    return [EdgeCut.from_mask(g, m) for m in _scan_masks(g, k, max_vertices)]


def count_nontrivial_min_cuts(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return len(_scan_masks(g, k, max_vertices))


def find_nontrivial_min_cut(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> EdgeCut | None:
    """Exhaustive bipartition scan; returns the cut whose side1 is
    lexicographically smallest, or ``None``."""
    _require_exactly_k(g, k)
    masks = _scan_masks(g, k, max_vertices)
    if not masks:
        return None
    best = min(masks, key=lambda m: _side_key(g, m))
    return EdgeCut.from_mask(g, best)


def flow_cut_hint(g: Multigraph, k: int) -> EdgeCut | None:
    """Fast path: a minimum cut between the two lowest vertices of degree
    above ``k`` can isolate neither, so it is non-trivial.  ``None`` when
    fewer than two such vertices exist or the cut is not of value ``k``;
    absence proves nothing."""
    big = [v for v in g.vertices if g.degree(v) > k]
    if len(big) < 2:
        return None
    cut = min_edge_cut(g, big[0], big[1])
    if cut.value != k:
        return None
    return cut


@dataclass(frozen=True)
class VertexSplit:
    """The two graphs produced by splitting along a minimum cut.

    ``*_vertices[i]`` is the parent vertex of child vertex ``i`` (``None``
    for the added vertex).  ``*_edges`` maps child edge ids of induced
    edges to parent edge ids; ``*_new`` maps each edge at the added vertex
    to the cut edge it replaces.
    """

    left: Multigraph
    right: Multigraph
    left_vertices: tuple
    right_vertices: tuple
    x1: int
    x2: int
    left_edges: dict[int, int]
    right_edges: dict[int, int]
    left_new: dict[int, int]
    right_new: dict[int, int]


def _half(g: Multigraph, side, cut_edges) -> tuple[Multigraph, tuple, int, dict, dict]:
    sub, vs, edge_map = g.induced(side)
    index = {v: i for i, v in enumerate(vs)}
    x, pairs = sub.n, sub.pairs()
    new = {}
    for ce in sorted(cut_edges):
        a, b = g.endpoints(ce)
        new[len(pairs)] = ce
        pairs.append((x, index[a] if a in index else index[b]))
    return Multigraph(x + 1, pairs), tuple(vs) + (None,), x, edge_map, new


def vertex_split(g: Multigraph, cut: EdgeCut) -> VertexSplit:
    cut.validate(g)
    if len(cut.side1) < 2 or len(cut.side2) < 2:
        raise TrivialCut("vertex splitting needs both sides to have >= 2 vertices")
    lam = global_edge_connectivity(g)
    if cut.value != lam:
        raise NotMinCut(f"cut value {cut.value} differs from edge connectivity {lam}")
    g1, vs1, x1, e1, n1 = _half(g, cut.side1, cut.cut_edges)
    g2, vs2, x2, e2, n2 = _half(g, cut.side2, cut.cut_edges)
    return VertexSplit(g1, g2, vs1, vs2, x1, x2, e1, e2, n1, n2)


@dataclass
class SplitLeaf:
    graph: Multigraph
    nontrivial_cuts: int = 0

    def leaves(self) -> Iterator["SplitLeaf"]:
        yield self

    def splits(self) -> Iterator["SplitNode"]:
        return iter(())

    def to_json(self) -> dict:
        return {
            "kind": "leaf",
            "n": self.graph.n,
            "degrees": self.graph.degrees(),
            "mgraph": format_mgraph(self.graph),
        }


@dataclass
class SplitNode:
    graph: Multigraph
    cut: EdgeCut
    split: VertexSplit
    left: "SplitTree"
    right: "SplitTree"
    nontrivial_cuts: int = field(default=0)

    @property
    def added_left(self) -> int:
        return self.split.x1

    @property
    def added_right(self) -> int:
        return self.split.x2

    @property
    def edge_correspondence(self) -> dict[str, dict[int, int]]:
        return {"left": dict(self.split.left_new), "right": dict(self.split.right_new)}

    def leaves(self) -> Iterator[SplitLeaf]:
        yield from self.left.leaves()
        yield from self.right.leaves()

    def splits(self) -> Iterator["SplitNode"]:
        yield self
        yield from self.left.splits()
        yield from self.right.splits()

    def to_json(self) -> dict:
        s = self.split
        return {
            "kind": "split",
            "n": self.graph.n,
            "cut": self.cut.to_json(),
            "added_left": s.x1,
            "added_right": s.x2,
            "left_vertex_map": list(s.left_vertices),
            "right_vertex_map": list(s.right_vertices),
            "edge_correspondence": {
                "left": [[c, p] for c, p in sorted(s.left_new.items())],
                "right": [[c, p] for c, p in sorted(s.right_new.items())],
            },
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


SplitTree = Union[SplitLeaf, SplitNode]


def _decompose(g: Multigraph, k: int, max_vertices: int) -> SplitTree:
    masks = _scan_masks(g, k, max_vertices)
    if not masks:
        if not is_quasi_k_regular(g, k):
            raise ClaimViolation("lemma", f"leaf degrees {g.degrees()} not quasi {k}-regular", g)
        return SplitLeaf(g, 0)
    cut = EdgeCut.from_mask(g, min(masks, key=lambda m: _side_key(g, m)))
    sp = vertex_split(g, cut)
    for side, h, x in (("left", sp.left, sp.x1), ("right", sp.right, sp.x2)):
        if h.degree(x) != k:
            raise ClaimViolation("split.degree", f"{side} added vertex has degree {h.degree(x)}", g)
        if not is_exactly_k_edge_connected(h, k):
            raise ClaimViolation(
                "prop11", f"{side} part of split on side1={sorted(cut.side1)} is not exactly {k}-edge-connected", g
            )
    left = _decompose(sp.left, k, max_vertices)
    right = _decompose(sp.right, k, max_vertices)
    return SplitNode(g, cut, sp, left, right, len(masks))


def decompose(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> SplitTree:
    """Split recursively on the lexicographically first non-trivial minimum
    cut until no such cut remains.

    Raises :class:`ClaimViolation` if a split part is not exactly
    k-edge-connected or a leaf is not quasi-k-regular.
    """
    _require_exactly_k(g, k)
    if g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices exceeds exhaustive bound {max_vertices}")
    return _decompose(g, k, max_vertices)


@dataclass(frozen=True)
class WitnessPair:
    witnesses: tuple[int, ...]
    provenance: str

    def to_json(self) -> dict:
        return {"witnesses": list(self.witnesses), "provenance": self.provenance}


def _tree_witnesses(tree: SplitTree, k: int) -> set[int]:
    if isinstance(tree, SplitLeaf):
        return {v for v, d in enumerate(tree.graph.degrees()) if d == k}
    s = tree.split
    out = set()
    for side, sub, vmap in (("left", tree.left, s.left_vertices), ("right", tree.right, s.right_vertices)):
        got = {vmap[w] for w in _tree_witnesses(sub, k) if vmap[w] is not None}
        if not got:
            raise ClaimViolation("prop12", f"{side} child has no degree-{k} vertex besides the added one", tree.graph)
        out |= got
    return out


def constructive_witnesses(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> WitnessPair:
    """Degree-k vertices found by walking the split tree of an exactly
    k-edge-connected graph."""
    tree = decompose(g, k, max_vertices)
    found = sorted(_tree_witnesses(tree, k))
    bad = [v for v in found if g.degree(v) != k]
    if len(found) < 2 or bad:
        raise ClaimViolation("prop12", f"witnesses {found} (wrong degree: {bad})", g)
    return WitnessPair(tuple(found), "constructive")


def theorem_witnesses(g: Multigraph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> WitnessPair:
    """Degree-k vertices of an edge-minimal k-edge-connected graph, obtained
    through its quotient: each degree-k class is a single vertex."""
    if not is_k_edge_connected(g, k):
        raise NotKConnected(f"graph is not {k}-edge-connected")
    if not is_edge_minimal(g, k).is_minimal:
        raise NotEdgeMinimal(f"graph is not edge-minimal for k={k}")
    q = quotient_graph(g, k)
    try:
        cw = constructive_witnesses(q.graph, k, max_vertices)
    except (NotExactlyK, TooLarge) as exc:
        if isinstance(exc, TooLarge):
            raise
        raise ClaimViolation("prop8", f"quotient is not exactly {k}-edge-connected", g) from exc
    out = []
    for c in cw.witnesses:
        members = q.partition.classes[c]
        if len(members) != 1 or g.degree(members[0]) != k:
            raise ClaimViolation("theorem1", f"degree-{k} class {list(members)} is not a single degree-{k} vertex", g)
        out.append(members[0])
    return WitnessPair(tuple(sorted(out)), "constructive")


def scan_witnesses(g: Multigraph, k: int) -> WitnessPair:
    return WitnessPair(tuple(v for v, d in enumerate(g.degrees()) if d == k), "scan")
