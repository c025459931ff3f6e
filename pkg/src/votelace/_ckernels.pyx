# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled containment kernels.

Drop-in replacement for ``votelace._pykernels``; same functions, same
semantics, same results.  Inputs are small (sizes <= MAXN), so everything
runs on stack-allocated C arrays; no shared mutable state, so calls are safe
from any number of threads.
"""

DEF MAXN = 32


cdef inline int _load(tuple t, int* buf) except -1:
    cdef int i, n = len(t)
    if n > MAXN:
        raise ValueError("kernel input longer than %d" % MAXN)
    for i in range(n):
        buf[i] = t[i]
    return n


def contains_pattern(tuple host, tuple pattern):
    """True iff some index-increasing subsequence of ``host`` is order-isomorphic to ``pattern``."""
    cdef int hbuf[MAXN]
    cdef int pbuf[MAXN]
    cdef int chosen[MAXN]
    cdef int n = _load(host, hbuf)
    cdef int k = _load(pattern, pbuf)
    if k == 0:
        return True
    if k > n:
        return False
    return _cp_extend(hbuf, n, pbuf, k, chosen, 0, 0) != 0


cdef int _cp_extend(int* host, int n, int* pattern, int k, int* chosen, int depth, int start):
    cdef int i, t, v, ok
    if depth == k:
        return 1
    for i in range(start, n - (k - depth) + 1):
        v = host[i]
        ok = 1
        for t in range(depth):
            if (pattern[t] < pattern[depth]) != (host[chosen[t]] < v):
                ok = 0
                break
        if ok:
            chosen[depth] = i
            if _cp_extend(host, n, pattern, k, chosen, depth + 1, i + 1):
                return 1
    return 0


def strong_contains(tuple big_first, tuple big_second, tuple small_first, tuple small_second):
    """True iff one set of values realizes ``small_first`` in ``big_first``
    and ``small_second`` in ``big_second`` simultaneously."""
    cdef int b1[MAXN]
    cdef int b2[MAXN]
    cdef int s1[MAXN]
    cdef int s2[MAXN]
    cdef int pos1[MAXN]
    cdef int pos2[MAXN]
    cdef int q1[MAXN]
    cdef int q2[MAXN]
    cdef int chosen[MAXN]
    cdef int n = _load(big_first, b1)
    cdef int h = _load(small_first, s1)
    cdef int i
    _load(big_second, b2)
    _load(small_second, s2)
    if h == 0:
        return True
    if h > n:
        return False
    for i in range(n):
        pos1[b1[i] - 1] = i
        pos2[b2[i] - 1] = i
    for i in range(h):
        q1[s1[i] - 1] = i
        q2[s2[i] - 1] = i
    return _sc_extend(pos1, pos2, q1, q2, chosen, n, h, 0, 1) != 0


cdef int _sc_extend(int* pos1, int* pos2, int* q1, int* q2, int* chosen,
                    int n, int h, int depth, int start):
    cdef int v, t, w, p1, p2, ok
    if depth == h:
        return 1
    for v in range(start, n - (h - depth) + 2):
        p1 = pos1[v - 1]
        p2 = pos2[v - 1]
        ok = 1
        for t in range(depth):
            w = chosen[t]
            if (pos1[w - 1] < p1) != (q1[t] < q1[depth]):
                ok = 0
                break
            if (pos2[w - 1] < p2) != (q2[t] < q2[depth]):
                ok = 0
                break
        if ok:
            chosen[depth] = v
            if _sc_extend(pos1, pos2, q1, q2, chosen, n, h, depth + 1, v + 1):
                return 1
    return 0


cdef struct CCState:
    int n, m, l, h
    int host[MAXN * MAXN]
    int cfg[MAXN * MAXN]
    int f[MAXN]
    int fused[MAXN]
    int assigned[MAXN]
    int used[MAXN]


def contains_configuration(tuple host_ranks, tuple cfg_ranks):
    """Generic configuration containment via exhaustive injections.

    ``host_ranks``/``cfg_ranks`` are tuples of rank vectors, one per voter:
    ranks[v][c-1] is the position of candidate c in voter v's ranking.
    """
    cdef CCState st
    cdef int i, j
    cdef tuple row
    st.n = len(host_ranks)
    st.l = len(cfg_ranks)
    if st.l > st.n:
        return False
    st.m = len(host_ranks[0]) if st.n else 0
    st.h = len(cfg_ranks[0]) if st.l else 0
    if st.h > st.m:
        return False
    if st.l == 0 or st.h == 0:
        return True
    if st.n > MAXN or st.m > MAXN:
        raise ValueError("kernel input longer than %d" % MAXN)
    for i in range(st.n):
        row = host_ranks[i]
        for j in range(st.m):
            st.host[i * MAXN + j] = row[j]
    for i in range(st.l):
        row = cfg_ranks[i]
        for j in range(st.h):
            st.cfg[i * MAXN + j] = row[j]
    for i in range(st.n):
        st.fused[i] = 0
    for i in range(st.m):
        st.used[i] = 0
    return _cc_pick_voter(&st, 0) != 0


cdef int _cc_pick_voter(CCState* st, int depth):
    cdef int v
    if depth == st.l:
        return _cc_place(st, 0)
    for v in range(st.n):
        if st.fused[v]:
            continue
        st.f[depth] = v
        st.fused[v] = 1
        if _cc_pick_voter(st, depth + 1):
            st.fused[v] = 0
            return 1
        st.fused[v] = 0
    return 0


cdef int _cc_place(CCState* st, int depth):
    cdef int c, t, i, ct, ok
    cdef int* hr
    if depth == st.h:
        return 1
    for c in range(1, st.m + 1):
        if st.used[c - 1]:
            continue
        ok = 1
        for t in range(depth):
            ct = st.assigned[t]
            for i in range(st.l):
                hr = &st.host[st.f[i] * MAXN]
                if (st.cfg[i * MAXN + t] < st.cfg[i * MAXN + depth]) != (hr[ct - 1] < hr[c - 1]):
                    ok = 0
                    break
            if not ok:
                break
        if ok:
            st.assigned[depth] = c
            st.used[c - 1] = 1
            if _cc_place(st, depth + 1):
                st.used[c - 1] = 0
                return 1
            st.used[c - 1] = 0
    return 0


def fits_axis(tuple order, tuple axis_pos):
    """True iff every prefix of the ranking ``order`` is an interval of the axis."""
    cdef int obuf[MAXN]
    cdef int abuf[MAXN]
    cdef int n = _load(order, obuf)
    cdef int i, p, lo, hi
    _load(axis_pos, abuf)
    if n <= 1:
        return True
    lo = hi = abuf[obuf[0] - 1]
    for i in range(1, n):
        p = abuf[obuf[i] - 1]
        if p == lo - 1:
            lo = p
        elif p == hi + 1:
            hi = p
        else:
            return False
    return True
