# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled flow kernel; same API and augmenting order as ``_kernel_py``."""

from libc.stdlib cimport malloc, free

MAX_MASK_VERTICES = 30


cdef inline int _popcount(unsigned long long x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef class FlowGraph:
    cdef readonly int n
    cdef readonly int m
    cdef int *_eu
    cdef int *_ev
    cdef int *_start      # CSR offsets, n + 1
    cdef int *_edge       # 2m incident edge positions
    cdef int *_other      # 2m opposite endpoints
    cdef int *_sign       # 2m, +1 when this vertex is eu
    cdef int *_flow       # m scratch flow
    cdef int *_via_e      # n scratch
    cdef int *_via_x
    cdef int *_via_s
    cdef int *_queue
    cdef int *_stamp
    cdef int _epoch

    def __cinit__(self, n, eu, ev):
        cdef int i, e, a, b, p
        self.n = n
        self.m = len(eu)
        if len(ev) != self.m:
            raise ValueError("endpoint arrays differ in length")
        cdef int nn = self.n if self.n > 0 else 1
        cdef int mm = self.m if self.m > 0 else 1
        self._eu = <int *> malloc(mm * sizeof(int))
        self._ev = <int *> malloc(mm * sizeof(int))
        self._flow = <int *> malloc(mm * sizeof(int))
        self._start = <int *> malloc((nn + 1) * sizeof(int))
        self._edge = <int *> malloc(2 * mm * sizeof(int))
        self._other = <int *> malloc(2 * mm * sizeof(int))
        self._sign = <int *> malloc(2 * mm * sizeof(int))
        self._via_e = <int *> malloc(nn * sizeof(int))
        self._via_x = <int *> malloc(nn * sizeof(int))
        self._via_s = <int *> malloc(nn * sizeof(int))
        self._queue = <int *> malloc(nn * sizeof(int))
        self._stamp = <int *> malloc(nn * sizeof(int))
        if (self._eu == NULL or self._ev == NULL or self._flow == NULL
                or self._start == NULL or self._edge == NULL
                or self._other == NULL or self._sign == NULL
                or self._via_e == NULL or self._via_x == NULL
                or self._via_s == NULL or self._queue == NULL
                or self._stamp == NULL):
            raise MemoryError()
        self._epoch = 0
        for i in range(self.n + 1):
            self._start[i] = 0
        for i in range(self.n):
            self._stamp[i] = 0
        for e in range(self.m):
            a = eu[e]
            b = ev[e]
            if a < 0 or a >= self.n or b < 0 or b >= self.n or a == b:
                raise ValueError(f"bad edge {e}: ({a}, {b})")
            self._eu[e] = a
            self._ev[e] = b
            self._start[a + 1] += 1
            self._start[b + 1] += 1
        for i in range(self.n):
            self._start[i + 1] += self._start[i]
        # fill in ascending edge order so BFS visits lowest EdgeId first
        for i in range(self.n):
            self._via_e[i] = self._start[i]
        for e in range(self.m):
            a = self._eu[e]
            b = self._ev[e]
            p = self._via_e[a]
            self._edge[p] = e
            self._other[p] = b
            self._sign[p] = 1
            self._via_e[a] = p + 1
            p = self._via_e[b]
            self._edge[p] = e
            self._other[p] = a
            self._sign[p] = -1
            self._via_e[b] = p + 1

    def __dealloc__(self):
        free(self._eu)
        free(self._ev)
        free(self._flow)
        free(self._start)
        free(self._edge)
        free(self._other)
        free(self._sign)
        free(self._via_e)
        free(self._via_x)
        free(self._via_s)
        free(self._queue)
        free(self._stamp)

    @property
    def eu(self):
        return [self._eu[e] for e in range(self.m)]

    @property
    def ev(self):
        return [self._ev[e] for e in range(self.m)]

    cdef inline int _next_epoch(self):
        cdef int i
        self._epoch += 1
        if self._epoch == 0x7fffffff:
            for i in range(self.n):
                self._stamp[i] = 0
            self._epoch = 1
        return self._epoch

    cdef int _augment(self, int s, int t, int limit) except -1:
        cdef int bound, value, head, tail, x, w, p, e, sg, ep
        cdef bint found
        bound = self._start[s + 1] - self._start[s]
        if self._start[t + 1] - self._start[t] < bound:
            bound = self._start[t + 1] - self._start[t]
        if limit >= 0 and limit < bound:
            bound = limit
        for e in range(self.m):
            self._flow[e] = 0
        value = 0
        while value < bound:
            ep = self._next_epoch()
            self._stamp[s] = ep
            self._queue[0] = s
            head = 0
            tail = 1
            found = False
            while head < tail and not found:
                x = self._queue[head]
                head += 1
                for p in range(self._start[x], self._start[x + 1]):
                    w = self._other[p]
                    e = self._edge[p]
                    sg = self._sign[p]
                    if self._stamp[w] != ep and sg * self._flow[e] < 1:
                        self._stamp[w] = ep
                        self._via_e[w] = e
                        self._via_x[w] = x
                        self._via_s[w] = sg
                        if w == t:
                            found = True
                            break
                        self._queue[tail] = w
                        tail += 1
            if not found:
                break
            w = t
            while w != s:
                self._flow[self._via_e[w]] += self._via_s[w]
                w = self._via_x[w]
            value += 1
        return value

    cdef inline void _check_pair(self, int s, int t) except *:
        if s < 0 or s >= self.n or t < 0 or t >= self.n:
            raise IndexError("vertex out of range")

    def max_flow(self, int s, int t, int limit=-1):
        """Return ``(value, flow)`` for an integral unit-capacity s-t flow."""
        self._check_pair(s, t)
        cdef int value = self._augment(s, t, limit)
        return value, [self._flow[e] for e in range(self.m)]

    def flow_value(self, int s, int t, int limit=-1):
        self._check_pair(s, t)
        return self._augment(s, t, limit)

    def reachable(self, flow, int s):
        cdef int i, x, w, p, e, top, ep
        cdef int *fl = self._flow
        for e in range(self.m):
            fl[e] = flow[e]
        ep = self._next_epoch()
        self._stamp[s] = ep
        self._queue[0] = s
        top = 1
        while top > 0:
            top -= 1
            x = self._queue[top]
            for p in range(self._start[x], self._start[x + 1]):
                w = self._other[p]
                e = self._edge[p]
                if self._stamp[w] != ep and self._sign[p] * fl[e] < 1:
                    self._stamp[w] = ep
                    self._queue[top] = w
                    top += 1
        return [self._stamp[i] == ep for i in range(self.n)]

    def lambda_matrix(self):
        cdef int s, t, v
        lam = [[0] * self.n for _ in range(self.n)]
        for s in range(self.n):
            for t in range(s + 1, self.n):
                v = self._augment(s, t, -1)
                lam[s][t] = v
                lam[t][s] = v
        return lam

    def crossing(self, mask):
        cdef unsigned long long mk = mask
        cdef int e, c = 0
        for e in range(self.m):
            c += ((mk >> self._eu[e]) ^ (mk >> self._ev[e])) & 1
        return c

    def cut_masks(self, int value):
        """Vertex masks containing vertex 0, both sides of size >= 2, with
        exactly ``value`` crossing edges, in increasing mask order."""
        cdef unsigned long long half, mask, total
        cdef int e, c, size
        if self.n > MAX_MASK_VERTICES:
            raise OverflowError(f"mask scan limited to {MAX_MASK_VERTICES} vertices")
        out = []
        if self.n < 4:
            return out
        total = (<unsigned long long> 1) << (self.n - 1)
        for half in range(total):
            mask = (half << 1) | 1
            size = _popcount(mask)
            if size < 2 or self.n - size < 2:
                continue
            c = 0
            for e in range(self.m):
                c += ((mask >> self._eu[e]) ^ (mask >> self._ev[e])) & 1
                if c > value:
                    break
            if c == value:
                out.append(mask)
        return out
