# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Littlewood-Richardson kernel (same algorithm as ``_lr_py``)."""

cdef enum:
    MAXR = 32
    MAXC = 64
    MAXM = 33


cdef struct State:
    int nrows
    int m
    int outer[MAXR]
    int inner[MAXR]
    int content[MAXM]
    int above[MAXC]
    int counts[MAXM]
    int row[MAXR][MAXC]


cdef long fill_row(State* s, int r):
    cdef int v
    if r == s.nrows:
        for v in range(1, s.m + 1):
            if s.counts[v] != s.content[v - 1]:
                return 0
        return 1
    return place(s, r, s.inner[r], 1)


cdef long place(State* s, int r, int c, int prev):
    cdef int lo = s.inner[r]
    cdef int hi = s.outer[r]
    cdef int v, start, top, j
    cdef int added[MAXM + 1]
    cdef int saved[MAXC]
    cdef long got = 0
    if c == hi:
        for v in range(s.m + 2):
            added[v] = 0
        for j in range(lo, hi):
            added[s.row[r][j]] += 1
        for v in range(1, s.m):
            if s.counts[v + 1] + added[v + 1] > s.counts[v]:
                return 0
        for v in range(1, s.m + 1):
            if s.counts[v] + added[v] > s.content[v - 1]:
                return 0
        for j in range(lo, hi):
            saved[j] = s.above[j]
            s.above[j] = s.row[r][j]
        for v in range(1, s.m + 1):
            s.counts[v] += added[v]
        got = fill_row(s, r + 1)
        for v in range(1, s.m + 1):
            s.counts[v] -= added[v]
        for j in range(lo, hi):
            s.above[j] = saved[j]
        return got
    start = prev
    if s.above[c] + 1 > start:
        start = s.above[c] + 1
    top = s.m
    if r + 1 < top:
        top = r + 1
    for v in range(start, top + 1):
        s.row[r][c] = v
        got += place(s, r, c + 1, v)
    return got


def lr_coefficient(tuple outer, tuple inner, tuple content):
    cdef State s
    cdef int i, n_in
    content = tuple([c for c in content if c])
    s.nrows = len(outer)
    n_in = len(inner)
    if n_in > s.nrows:
        return 0
    if s.nrows > MAXR or len(content) >= MAXM or (s.nrows and outer[0] > MAXC):
        from ._lr_py import lr_coefficient as slow
        return slow(outer, inner, content)
    for i in range(s.nrows):
        s.outer[i] = outer[i]
        s.inner[i] = inner[i] if i < n_in else 0
        if s.inner[i] > s.outer[i]:
            return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    s.m = len(content)
    if s.m == 0:
        return 1
    for i in range(s.m):
        s.content[i] = content[i]
    for i in range(MAXM):
        s.counts[i] = 0
    for i in range(MAXC):
        s.above[i] = 0
        pass
    return fill_row(&s, 0)
