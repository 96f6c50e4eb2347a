"""Exhaustive and seeded random generation of small multigraphs, the
brute-force path-packing oracle, and batch verification runs."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from itertools import islice
from typing import Callable, Iterable, Iterator

from .connectivity import (
    edge_connectivity,
    is_exactly_k_edge_connected,
    is_k_edge_connected,
    lambda_matrix,
)
from .decomposition import (
    SplitLeaf,
    constructive_witnesses,
    decompose,
    scan_witnesses,
    theorem_witnesses,
)
from .errors import ClaimViolation, TooLarge
from .minimality import cross_check_minimality, is_edge_minimal
from .multigraph import Multigraph
from .quotient import (
    check_quotient_properties,
    class_separation_violations,
    partition_violations,
    r_k_classes,
)
from .report import VerificationReport

DEFAULT_ORACLE_MAX_EDGES = 8


@dataclass(frozen=True)
class EnumSpec:
    n_max: int = 6
    m_max: int = 9
    mult_max: int = 3
    k_set: tuple[int, ...] = (1, 2, 3)
    require_connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "k_set", tuple(sorted(set(self.k_set))))
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        if self.mult_max < 1:
            raise ValueError("mult_max must be >= 1")
        if self.m_max < 0:
            raise ValueError("m_max must be >= 0")
        if not self.k_set:
            raise ValueError("k_set must be nonempty")
        if any(k < 1 for k in self.k_set):
            raise ValueError("every k must be >= 1")

    def to_json(self) -> dict:
        d = asdict(self)
        d["k_set"] = list(self.k_set)
        return d


def _multiplicity_vectors(npairs: int, budget: int, mult_max: int) -> Iterator[list[int]]:
    vec = [0] * npairs

    def rec(i, left):
        if i == npairs:
            yield vec
            return
        for c in range(min(mult_max, left) + 1):
            vec[i] = c
            yield from rec(i + 1, left - c)
        vec[i] = 0

    return rec(0, budget)


def _connected(n: int, pairs, vec) -> bool:
    adj = [0] * n
    for (u, v), c in zip(pairs, vec):
        if c:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def enumerate_raw(spec: EnumSpec) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield ``(n, edge pairs)``: every labeled multigraph of the spec, in
    a fixed order (n ascending, then multiplicity vectors over the pairs
    ``(0,1), (0,2), ...`` in lexicographic order)."""
    for n in range(2, spec.n_max + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for vec in _multiplicity_vectors(len(pairs), spec.m_max, spec.mult_max):
            if spec.require_connected and (sum(vec) < n - 1 or not _connected(n, pairs, vec)):
                continue
            edges = []
            for p, c in zip(pairs, vec):
                if c:
                    edges.extend([p] * c)
            yield n, edges


def enumerate_multigraphs(spec: EnumSpec) -> Iterator[Multigraph]:
    for n, edges in enumerate_raw(spec):
        yield Multigraph(n, edges)


def enumerate_trees(n: int) -> Iterator[Multigraph]:
    """All labeled trees on ``n`` vertices, via Pruefer sequences."""
    if n == 2:
        yield Multigraph(2, [(0, 1)])
        return
    from itertools import product

    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = next(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (w for w in range(n) if degree[w] == 1)
        edges.append((u, v))
        yield Multigraph(n, edges)


def brute_force_lambda(g: Multigraph, u: int, v: int, max_edges: int = DEFAULT_ORACLE_MAX_EDGES) -> int:
    """Maximum number of pairwise edge-disjoint u-v paths by exhaustive
    search over packings of vertex-simple paths.

    Vertex-simple paths suffice: any u-v trail contains one using a subset
    of its edges.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("u and v must differ")
    if g.m > max_edges:
        raise TooLarge(f"{g.m} edges exceeds oracle bound {max_edges}")
    adj = [[] for _ in range(g.n)]
    for i, (_, a, b) in enumerate(g.edges):
        adj[a].append((i, b))
        adj[b].append((i, a))
    paths = []

    def dfs(x, visited, used):
        if x == v:
            paths.append(used)
            return
        for i, w in adj[x]:
            if not (visited >> w) & 1:
                dfs(w, visited | (1 << w), used | (1 << i))

    dfs(u, 1 << u, 0)
    cap = min(len(adj[u]), len(adj[v]))
    memo = {}

    def best(used):
        got = memo.get(used)
        if got is not None:
            return got
        top = 0
        for p in paths:
            if not p & used:
                top = max(top, 1 + best(used | p))
                if top == cap:
                    break
        memo[used] = top
        return top

    return best(0)


def random_k_edge_connected(n: int, k: int, seed: int) -> Multigraph:
    """Seeded k-edge-connected multigraph.

    Base: ceil(k/2) Hamiltonian cycles on random vertex orders (each cycle
    adds 2 to every cut); n = 2 gives exactly k parallel edges.  Then a
    random number (0..n) of extra edges between random distinct pairs.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if n == 2:
        return Multigraph(2, [(0, 1)] * k)
    rng = random.Random(seed)
    pairs = []
    for _ in range((k + 1) // 2):
        order = list(range(n))
        rng.shuffle(order)
        for i in range(n):
            a, b = order[i], order[(i + 1) % n]
            pairs.append((min(a, b), max(a, b)))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        pairs.append((min(a, b), max(a, b)))
    g = Multigraph(n, pairs)
    assert is_k_edge_connected(g, k)
    return g


# -- per-graph checks ------------------------------------------------------


def theorem_checks(g: Multigraph, k_set: Iterable[int], report: VerificationReport) -> None:
    """Record ``theorem1`` (>= 2 degree-k vertices), ``theorem1.constructive``
    (quotient witnesses are a subset of the scan, size >= 2) and, for k=1,
    ``theorem1.k1_tree`` for every edge-minimal k-edge-connected pair."""
    for k in k_set:
        if not is_k_edge_connected(g, k) or not is_edge_minimal(g, k).is_minimal:
            continue
        scan = set(scan_witnesses(g, k).witnesses)
        report.record("theorem1", len(scan) >= 2, g, f"k={k}: degree-{k} vertices {sorted(scan)}")
        try:
            tw = set(theorem_witnesses(g, k).witnesses)
            ok = len(tw) >= 2 and tw <= scan
            detail = f"k={k}: constructive {sorted(tw)} vs scan {sorted(scan)}"
        except ClaimViolation as exc:
            ok, detail = False, f"k={k}: {exc}"
        report.record("theorem1.constructive", ok, g, detail)
        if k == 1:
            report.record("theorem1.k1_tree", g.m == g.n - 1, g, "edge-minimal connected graph is not a tree")


def _oracle_check(g: Multigraph, report: VerificationReport, oracle_max_edges: int) -> None:
    if g.m > oracle_max_edges or g.n < 2:
        return
    mat = lambda_matrix(g)
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bf = brute_force_lambda(g, u, v, oracle_max_edges)
            if bf != mat[u][v] or bf != edge_connectivity(g, v, u):
                bad.append(f"({u},{v}): flow {mat[u][v]} oracle {bf}")
    report.record("oracle", not bad, g, "; ".join(bad))


def _split_checks(g: Multigraph, k: int, report: VerificationReport) -> None:
    try:
        tree = decompose(g, k)
    except ClaimViolation as exc:
        report.record(exc.claim, False, exc.graph or g, f"k={k}: {exc.detail}")
        return
    for node in tree.splits():
        report.record("prop11", True)
        for child in (node.left, node.right):
            report.record(
                "descent",
                child.nontrivial_cuts < node.nontrivial_cuts,
                node.graph,
                f"k={k}: child has {child.nontrivial_cuts} non-trivial min cuts, parent {node.nontrivial_cuts}",
            )
    for _ in tree.leaves():
        report.record("lemma", True)
    try:
        cw = constructive_witnesses(g, k)
        ok = set(cw.witnesses) <= set(scan_witnesses(g, k).witnesses)
        report.record("prop12", ok, g, f"k={k}: constructive {cw.witnesses}")
    except ClaimViolation as exc:
        report.record("prop12", False, g, f"k={k}: {exc}")


def proposition_checks(
    g: Multigraph,
    k_set: Iterable[int],
    report: VerificationReport,
    oracle_max_edges: int = DEFAULT_ORACLE_MAX_EDGES,
) -> None:
    """Run every structural check that applies to ``g``.

    Claims: ``oracle`` (flow equals brute force), ``partition`` (class
    invariants by direct lambda), ``prop4`` (distinct k-classes joined by
    <= k-1 paths), ``prop6`` (adjacency criterion equals definitional
    minimality), ``prop8``/``prop9``/``prop9.no_intraclass_edge``
    (quotient of edge-minimal graphs), ``prop11``/``lemma``/``descent``/
    ``prop12`` (splitting of exactly k-edge-connected graphs).
    """
    _oracle_check(g, report, oracle_max_edges)
    if g.n < 2:
        return
    for k in k_set:
        part = r_k_classes(g, k)
        bad = partition_violations(g, part)
        report.record("partition", not bad, g, f"k={k}: " + "; ".join(bad))
        sep = class_separation_violations(g, k)
        report.record("prop4", not sep, g, f"k={k}: " + "; ".join(sep))
        if not is_k_edge_connected(g, k):
            continue
        minimal = is_edge_minimal(g, k).is_minimal
        cross = cross_check_minimality(g, k)
        report.record("prop6", minimal == cross, g, f"k={k}: criterion {minimal}, definition {cross}")
        if minimal:
            check_quotient_properties(g, k, report)
        if is_exactly_k_edge_connected(g, k):
            _split_checks(g, k, report)


# -- batch drivers -----------------------------------------------------------


def _check_chunk(kind: str, k_set: tuple[int, ...], oracle_max_edges: int, chunk) -> VerificationReport:
    report = VerificationReport()
    for n, edges in chunk:
        g = Multigraph(n, edges)
        report.graphs_examined += 1
        if kind == "theorem":
            theorem_checks(g, k_set, report)
        else:
            proposition_checks(g, k_set, report, oracle_max_edges)
    return report


def _chunks(it, size):
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _run(kind: str, spec: EnumSpec, jobs: int, oracle_max_edges: int, graphs=None) -> VerificationReport:
    start = time.perf_counter()
    source = enumerate_raw(spec) if graphs is None else ((g.n, g.pairs()) for g in graphs)
    work: Callable = partial(_check_chunk, kind, spec.k_set, oracle_max_edges)
    report = VerificationReport()
    if jobs <= 1:
        report = work(source)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(work, _chunks(source, 2000)):
                report = report.merge(part)
    report.spec = spec.to_json()
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def verify_theorem(spec: EnumSpec, jobs: int = 1, graphs: Iterable[Multigraph] | None = None) -> VerificationReport:
    """Check the two-degree-k-vertices theorem on every enumerated graph
    (or on ``graphs`` when given) for every k in ``spec.k_set``."""
    return _run("theorem", spec, jobs, DEFAULT_ORACLE_MAX_EDGES, graphs)


def verify_propositions(
    spec: EnumSpec,
    jobs: int = 1,
    oracle_max_edges: int = DEFAULT_ORACLE_MAX_EDGES,
    graphs: Iterable[Multigraph] | None = None,
) -> VerificationReport:
    return _run("propositions", spec, jobs, oracle_max_edges, graphs)
