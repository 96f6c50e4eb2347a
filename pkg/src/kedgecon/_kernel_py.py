"""Pure-Python flow kernel.

Mirrors the compiled ``_kernel_ext`` module exactly (same API, same
augmenting-path order) so either can back :mod:`kedgecon.connectivity`.

Edges are addressed by position ``0..m-1``; callers keep positions sorted by
edge id so "lowest position first" means "lowest EdgeId first".  The flow on
edge ``e`` is stored as ``-1``, ``0`` or ``+1``, positive meaning
``eu[e] -> ev[e]``.  Each undirected unit edge is an antiparallel arc pair and
storing a single signed value per edge is what cancels opposite flow.
"""

from collections import deque

MAX_MASK_VERTICES = 30


class FlowGraph:
    __slots__ = ("n", "m", "eu", "ev", "_adj", "_deg")

    def __init__(self, n, eu, ev):
        self.n = int(n)
        self.eu = [int(x) for x in eu]
        self.ev = [int(x) for x in ev]
        self.m = len(self.eu)
        if len(self.ev) != self.m:
            raise ValueError("endpoint arrays differ in length")
        adj = [[] for _ in range(self.n)]
        for e, (a, b) in enumerate(zip(self.eu, self.ev)):
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise ValueError(f"bad edge {e}: ({a}, {b})")
            adj[a].append((e, b, 1))
            adj[b].append((e, a, -1))
        self._adj = adj
        self._deg = [len(a) for a in adj]

    def _augment(self, s, t, limit, flow):
        adj = self._adj
        n = self.n
        bound = min(self._deg[s], self._deg[t])
        if limit >= 0:
            bound = min(bound, limit)
        value = 0
        while value < bound:
            via = [None] * n
            via[s] = (-1, -1, 0)
            queue = deque([s])
            found = False
            while queue and not found:
                x = queue.popleft()
                for e, w, sign in adj[x]:
                    if via[w] is None and sign * flow[e] < 1:
                        via[w] = (e, x, sign)
                        if w == t:
                            found = True
                            break
                        queue.append(w)
            if not found:
                break
            w = t
            while w != s:
                e, x, sign = via[w]
                flow[e] += sign
                w = x
            value += 1
        return value

    def max_flow(self, s, t, limit=-1):
        """Return ``(value, flow)`` for an integral unit-capacity s-t flow."""
        flow = [0] * self.m
        value = self._augment(s, t, limit, flow)
        return value, flow

    def flow_value(self, s, t, limit=-1):
        return self._augment(s, t, limit, [0] * self.m)

    def reachable(self, flow, s):
        """Residual reachability from ``s`` as a list of booleans."""
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        adj = self._adj
        while stack:
            x = stack.pop()
            for e, w, sign in adj[x]:
                if not seen[w] and sign * flow[e] < 1:
                    seen[w] = True
                    stack.append(w)
        return seen

    def lambda_matrix(self):
        n = self.n
        lam = [[0] * n for _ in range(n)]
        for s in range(n):
            for t in range(s + 1, n):
                lam[s][t] = lam[t][s] = self.flow_value(s, t)
        return lam

    def crossing(self, mask):
        """Number of edges with exactly one endpoint in ``mask``."""
        c = 0
        for a, b in zip(self.eu, self.ev):
            if ((mask >> a) ^ (mask >> b)) & 1:
                c += 1
        return c

    def cut_masks(self, value):
        """Vertex masks containing vertex 0, both sides of size >= 2, with
        exactly ``value`` crossing edges, in increasing mask order."""
        n = self.n
        if n > MAX_MASK_VERTICES:
            raise OverflowError(f"mask scan limited to {MAX_MASK_VERTICES} vertices")
        out = []
        for half in range(1 << (n - 1)):
            mask = (half << 1) | 1
            size = bin(mask).count("1")
            if size < 2 or n - size < 2:
                continue
            if self.crossing(mask) == value:
                out.append(mask)
        return out
