"""Immutable undirected multigraph with stable edge ids, plus the MGRAPH
text format and the structural transforms used by the other modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._kernel import FlowGraph
from .errors import (
    EmptyVertexSet,
    InvalidCut,
    ParseError,
    PartitionNotCover,
    SelfLoopRejected,
    UnknownEdge,
    UnknownVertex,
)


class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Edges are ``(eid, u, v)`` records with ``u < v``, kept in ascending
    ``eid`` order.  Parallel edges are distinct records.  Instances are
    values: every transform returns a new graph and edge ids of surviving
    edges never change.
    """

    __slots__ = ("_n", "_records", "_ends", "_next_eid", "_inc", "_cache")

    def __init__(self, n: int = 0, pairs: Iterable[tuple[int, int]] = ()):
        records = []
        for eid, (u, v) in enumerate(pairs):
            records.append((eid, u, v))
        self._setup(n, records, len(records))

    @classmethod
    def _from_records(cls, n, records, next_eid=None) -> "Multigraph":
        g = cls.__new__(cls)
        records = sorted(records)
        if next_eid is None:
            next_eid = records[-1][0] + 1 if records else 0
        g._setup(n, records, next_eid)
        return g

    def _setup(self, n, records, next_eid):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        inc = [[] for _ in range(n)]
        ends = {}
        norm = []
        for eid, u, v in records:
            if u == v:
                raise SelfLoopRejected(f"edge {eid} is a self-loop at {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise UnknownVertex(x)
            if eid in ends:
                raise ValueError(f"duplicate edge id {eid}")
            if u > v:
                u, v = v, u
            ends[eid] = (u, v)
            norm.append((eid, u, v))
            inc[u].append(eid)
            inc[v].append(eid)
        self._n = n
        self._records = tuple(norm)
        self._ends = ends
        self._next_eid = max(next_eid, norm[-1][0] + 1) if norm else next_eid
        self._inc = tuple(tuple(x) for x in inc)
        self._cache = {}

    # -- inspection -------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._records)

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        return self._records

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self._records)

    @property
    def next_edge_id(self) -> int:
        return self._next_eid

    def has_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self._n

    def has_edge(self, eid) -> bool:
        return eid in self._ends

    def check_vertex(self, v) -> None:
        if not (type(v) is int and 0 <= v < self._n) and not self.has_vertex(v):
            raise UnknownVertex(v)

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._ends[eid]
        except KeyError:
            raise UnknownEdge(eid) from None

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._inc[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self._inc]

    def incident(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._inc[v]

    def neighbors(self, v: int) -> list[int]:
        out = []
        for eid in self.incident(v):
            a, b = self._ends[eid]
            out.append(b if a == v else a)
        return out

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return sum(1 for eid in self.incident(u) if self._ends[eid] == (u, v))

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for w in self.neighbors(x):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self._n

    def components(self) -> list[list[int]]:
        seen = [False] * self._n
        out = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for w in self.neighbors(x):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def kernel(self) -> FlowGraph:
        """Flow kernel over this graph; edge position ``i`` is ``edges[i]``."""
        fg = self._cache.get("kernel")
        if fg is None:
            fg = FlowGraph(self._n, [r[1] for r in self._records], [r[2] for r in self._records])
            self._cache["kernel"] = fg
        return fg

    # -- transforms -------------------------------------------------------

    def add_vertex(self) -> tuple["Multigraph", int]:
        g = Multigraph._from_records(self._n + 1, self._records, self._next_eid)
        return g, self._n

    def add_edge(self, u: int, v: int) -> tuple["Multigraph", int]:
        if u == v:
            raise SelfLoopRejected(f"self-loop at {u}")
        self.check_vertex(u)
        self.check_vertex(v)
        eid = self._next_eid
        g = Multigraph._from_records(self._n, self._records + ((eid, u, v),), eid + 1)
        return g, eid

    def remove_edge(self, eid: int) -> "Multigraph":
        return self.remove_edges([eid])

    def remove_edges(self, eids: Iterable[int]) -> "Multigraph":
        drop = set(eids)
        for e in drop:
            if e not in self._ends:
                raise UnknownEdge(e)
        kept = [r for r in self._records if r[0] not in drop]
        return Multigraph._from_records(self._n, kept, self._next_eid)

    def induced(self, vertices: Iterable[int]) -> tuple["Multigraph", list[int], dict[int, int]]:
        """Induced multigraph on ``vertices`` relabelled densely in ascending
        order.  Returns ``(graph, vertex_map, edge_map)`` mapping child ids
        back to this graph's ids; child edges keep ascending parent order."""
        vs = sorted(set(vertices))
        for v in vs:
            self.check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        pairs = []
        edge_map = {}
        for eid, u, v in self._records:
            if u in index and v in index:
                edge_map[len(pairs)] = eid
                pairs.append((index[u], index[v]))
        return Multigraph(len(vs), pairs), vs, edge_map

    # -- value semantics --------------------------------------------------

    def _key(self):
        return (self._n, self._records)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Multigraph(n={self._n}, m={self.m})"

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for _, u, v in self._records]


def add_vertex(g: Multigraph) -> tuple[Multigraph, int]:
    return g.add_vertex()


def add_edge(g: Multigraph, u: int, v: int) -> tuple[Multigraph, int]:
    return g.add_edge(u, v)


def remove_edge(g: Multigraph, e: int) -> Multigraph:
    return g.remove_edge(e)


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def parallel_k2(k: int) -> Multigraph:
    return Multigraph(2, [(0, 1)] * k)


def cycle(n: int) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class EdgeCut:
    """Edge cut given by a vertex bipartition and its crossing edge ids."""

    cut_edges: tuple[int, ...]
    side1: frozenset[int]
    side2: frozenset[int]

    @property
    def value(self) -> int:
        return len(self.cut_edges)

    @classmethod
    def from_side(cls, g: Multigraph, side1: Iterable[int]) -> "EdgeCut":
        s1 = frozenset(side1)
        s2 = frozenset(v for v in g.vertices if v not in s1)
        crossing = tuple(eid for eid, u, v in g.edges if (u in s1) != (v in s1))
        return cls(crossing, s1, s2)

    @classmethod
    def from_mask(cls, g: Multigraph, mask: int) -> "EdgeCut":
        return cls.from_side(g, [v for v in g.vertices if (mask >> v) & 1])

    def validate(self, g: Multigraph) -> None:
        if self.side1 & self.side2:
            raise InvalidCut("sides overlap")
        if self.side1 | self.side2 != frozenset(g.vertices):
            raise InvalidCut("sides do not cover the vertex set")
        if not self.side1 or not self.side2:
            raise InvalidCut("empty side")
        expected = tuple(eid for eid, u, v in g.edges if (u in self.side1) != (v in self.side1))
        if tuple(sorted(self.cut_edges)) != expected:
            raise InvalidCut("cut edges are not exactly the edges crossing the bipartition")

    def to_json(self) -> dict:
        return {
            "cut_edges": list(self.cut_edges),
            "side1": sorted(self.side1),
            "side2": sorted(self.side2),
            "value": self.value,
        }


def subdivide_parallel_edges(g: Multigraph) -> tuple[Multigraph, dict[int, tuple[int, ...]]]:
    """Replace every parallel copy after the first by a length-2 path.

    Returns the simple graph and a map from each original edge id to the
    ids of the edge(s) representing it.  Original vertices keep their ids;
    midpoints are appended in ascending order of the edge they subdivide.
    """
    seen = set()
    pairs = []
    corr = {}
    n = g.n
    for eid, u, v in g.edges:
        if (u, v) not in seen:
            seen.add((u, v))
            corr[eid] = (len(pairs),)
            pairs.append((u, v))
        else:
            w = n
            n += 1
            corr[eid] = (len(pairs), len(pairs) + 1)
            pairs.append((u, w))
            pairs.append((w, v))
    return Multigraph(n, pairs), corr


def _classes_of(partition) -> list[list[int]]:
    classes = getattr(partition, "classes", partition)
    return [sorted(c) for c in classes]


def contract_with_origin(g: Multigraph, partition) -> tuple[Multigraph, dict[int, int], list[int]]:
    """Contract each class to one vertex (class order preserved).

    Returns ``(graph, edge_origin, class_of)``; ``edge_origin`` maps each
    new edge id to the original edge it came from.
    """
    classes = _classes_of(partition)
    class_of = [-1] * g.n
    for ci, c in enumerate(classes):
        if not c:
            raise EmptyVertexSet(f"class {ci} is empty")
        for v in c:
            g.check_vertex(v)
            if class_of[v] != -1:
                raise PartitionNotCover(f"vertex {v} appears in two classes")
            class_of[v] = ci
    missing = [v for v in g.vertices if class_of[v] == -1]
    if missing:
        raise PartitionNotCover(f"vertices {missing} are not covered")
    pairs = []
    origin = {}
    for eid, u, v in g.edges:
        cu, cv = class_of[u], class_of[v]
        if cu != cv:
            origin[len(pairs)] = eid
            pairs.append((cu, cv))
    return Multigraph(len(classes), pairs), origin, class_of


def contract_vertex_sets(g: Multigraph, partition) -> Multigraph:
    """One vertex per class, one edge per inter-class edge; intra-class
    edges are dropped."""
    return contract_with_origin(g, partition)[0]


# -- MGRAPH text format ----------------------------------------------------


def format_mgraph(g: Multigraph, comment: str | None = None) -> str:
    """Emit MGRAPH text.  Consecutive parallel records share one ``e`` line,
    so parsing the output reproduces the edge order (ids become dense)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"mg {g.n}")
    run = None
    count = 0
    for _, u, v in g.edges:
        if run == (u, v):
            count += 1
            continue
        if run is not None:
            lines.append(f"e {run[0]} {run[1]} {count}")
        run, count = (u, v), 1
    if run is not None:
        lines.append(f"e {run[0]} {run[1]} {count}")
    return "\n".join(lines) + "\n"


def _parse_int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno) from None


def _parse_lines(lines: Sequence[tuple[int, str]]) -> Multigraph:
    n = None
    pairs = []
    for lineno, raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "mg":
            if n is not None:
                raise ParseError("duplicate 'mg' header", lineno)
            if len(tok) != 2:
                raise ParseError("header must be 'mg <n>'", lineno)
            n = _parse_int(tok[1], lineno, "vertex count")
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before 'mg' header", lineno)
            if len(tok) != 4:
                raise ParseError("edge line must be 'e <u> <v> <mult>'", lineno)
            u = _parse_int(tok[1], lineno, "vertex")
            v = _parse_int(tok[2], lineno, "vertex")
            mult = _parse_int(tok[3], lineno, "multiplicity")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
            if u == v:
                raise ParseError(f"self-loop at {u}", lineno)
            if mult < 1:
                raise ParseError("multiplicity must be >= 1", lineno)
            pairs.extend([(u, v)] * mult)
        else:
            raise ParseError(f"unknown record {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'mg' header")
    return Multigraph(n, pairs)


def parse_mgraph(text: str) -> Multigraph:
    return _parse_lines(list(enumerate(text.splitlines(), start=1)))


def iter_mgraphs(text: str) -> Iterator[Multigraph]:
    """Parse a stream of concatenated MGRAPH documents (each starts at an
    ``mg`` line)."""
    block: list[tuple[int, str]] = []
    has_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.split()[:1] == ["mg"] and has_header:
            yield _parse_lines(block)
            block, has_header = [], False
        if raw.split()[:1] == ["mg"]:
            has_header = True
        block.append((lineno, raw))
    if has_header or any(l.strip() and not l.strip().startswith("#") for _, l in block):
        yield _parse_lines(block)
