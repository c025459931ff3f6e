"""Pure-Python containment kernels.

These are the hot inner loops of every exhaustive count in the package:
classical pattern containment, strong containment of pair patterns, generic
configuration containment, and the axis-interval check behind single-peaked
recognition.  ``votelace._ckernels`` is a compiled drop-in replacement; both
backends must return identical results on identical inputs (see
tests/test_kernels.py).

All arguments are plain tuples of ints.  Permutations are in one-line
notation with values 1..n; rank vectors are 0-based positions indexed by
candidate-1.
"""

from itertools import permutations


def contains_pattern(host, pattern):
    """True iff some index-increasing subsequence of ``host`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    n = len(host)
    if k == 0:
        return True
    if k > n:
        return False
    chosen = [0] * k

    def extend(depth, start):
        if depth == k:
            return True
        # not enough host entries left for the remaining pattern entries
        for i in range(start, n - (k - depth) + 1):
            v = host[i]
            ok = True
            for t in range(depth):
                if (pattern[t] < pattern[depth]) != (host[chosen[t]] < v):
                    ok = False
                    break
            if ok:
                chosen[depth] = i
                if extend(depth + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def strong_contains(big_first, big_second, small_first, small_second):
    """True iff one set of values realizes ``small_first`` in ``big_first``
    and ``small_second`` in ``big_second`` simultaneously."""
    h = len(small_first)
    n = len(big_first)
    if h == 0:
        return True
    if h > n:
        return False
    # pos*[v-1] = position of value v in the host permutation
    pos1 = [0] * n
    pos2 = [0] * n
    for i in range(n):
        pos1[big_first[i] - 1] = i
        pos2[big_second[i] - 1] = i
    # q*[r-1] = position of value r in the small pattern; chosen values in
    # increasing order must have host positions ordered like q1 resp. q2
    q1 = [0] * h
    q2 = [0] * h
    for i in range(h):
        q1[small_first[i] - 1] = i
        q2[small_second[i] - 1] = i
    chosen = [0] * h  # chosen[j] = value (1-based) playing rank j+1

    def extend(depth, start):
        if depth == h:
            return True
        for v in range(start, n - (h - depth) + 2):
            p1 = pos1[v - 1]
            p2 = pos2[v - 1]
            ok = True
            for t in range(depth):
                w = chosen[t]
                if (pos1[w - 1] < p1) != (q1[t] < q1[depth]):
                    ok = False
                    break
                if (pos2[w - 1] < p2) != (q2[t] < q2[depth]):
                    ok = False
                    break
            if ok:
                chosen[depth] = v
                if extend(depth + 1, v + 1):
                    return True
        return False

    return extend(0, 1)


def contains_configuration(host_ranks, cfg_ranks):
    """Generic configuration containment via exhaustive injections.

    ``host_ranks``/``cfg_ranks`` are tuples of rank vectors, one per voter:
    ranks[v][c-1] is the position of candidate c in voter v's ranking.
    Searches an injective voter map f and an injective candidate map g such
    that every preference stated by the configuration is preserved.
    """
    n = len(host_ranks)
    l = len(cfg_ranks)
    if l > n:
        return False
    m = len(host_ranks[0]) if n else 0
    h = len(cfg_ranks[0]) if l else 0
    if h > m:
        return False
    if l == 0 or h == 0:
        return True

    assigned = [0] * h  # assigned[s] = host candidate (1-based) for cfg candidate s+1
    used = [False] * m

    def place(f, depth):
        if depth == h:
            return True
        for c in range(1, m + 1):
            if used[c - 1]:
                continue
            ok = True
            for t in range(depth):
                ct = assigned[t]
                for i in range(l):
                    hr = host_ranks[f[i]]
                    if (cfg_ranks[i][t] < cfg_ranks[i][depth]) != (hr[ct - 1] < hr[c - 1]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                assigned[depth] = c
                used[c - 1] = True
                if place(f, depth + 1):
                    used[c - 1] = False
                    return True
                used[c - 1] = False
        return False

    for f in permutations(range(n), l):
        if place(f, 0):
            return True
    return False


def fits_axis(order, axis_pos):
    """True iff every prefix of the ranking ``order`` is an interval of the axis.

    ``axis_pos[c-1]`` is the axis position of candidate c.
    """
    if len(order) <= 1:
        return True
    lo = hi = axis_pos[order[0] - 1]
    for c in order[1:]:
        p = axis_pos[c - 1]
        if p == lo - 1:
            lo = p
        elif p == hi + 1:
            hi = p
        else:
            return False
    return True
