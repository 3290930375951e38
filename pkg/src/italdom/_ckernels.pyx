# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit adjacency words.

Mirror of ``_pykernels``: same functions, arguments and return values.
"""

from libc.stdint cimport uint64_t

NAME = "cython"

cdef enum:
    MAXN = 64
    CACHE_CAP = 512

CACHE_LIMIT = CACHE_CAP


cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) noexcept nogil
    int ctz "__builtin_ctzll"(unsigned long long) noexcept nogil


cdef struct Search:
    int n
    uint64_t full
    uint64_t inm[MAXN]
    uint64_t outm[MAXN]
    int order[MAXN]
    int budget
    int lower
    int best
    uint64_t best_ones
    uint64_t best_twos
    long long nodes
    bint stop


cdef void visit(Search *s, int i, uint64_t assigned, uint64_t ones,
                uint64_t twos, int weight) noexcept nogil:
    cdef uint64_t unassigned, zeros, pending, needy, free, low, m, bit
    cdef int need = 0, forced = 0, cur, v, d, spread, lb
    s.nodes += 1
    unassigned = s.full & ~assigned
    zeros = assigned & ~(ones | twos)
    needy = 0
    pending = zeros | unassigned
    while pending:
        v = ctz(pending)
        low = (<uint64_t>1) << v
        pending ^= low
        m = s.inm[v]
        cur = popcount(m & ones) + 2 * popcount(m & twos)
        if cur >= 2:
            continue
        if cur + 2 * popcount(m & unassigned) < 2:
            if zeros & low:
                return
            forced += 1
        need += 2 - cur
        needy |= low
    if need == 0:
        if weight < s.best:
            s.best = weight
            s.best_ones = ones
            s.best_twos = twos
            if weight <= s.lower:
                s.stop = True
        return
    spread = 0
    free = unassigned
    while free:
        v = ctz(free)
        free &= free - 1
        d = popcount(s.outm[v] & needy)
        if d > spread:
            spread = d
    lb = (need + 1 + spread) // (2 + spread)
    if forced > lb:
        lb = forced
    if weight + lb > s.budget or weight + lb >= s.best:
        return
    bit = (<uint64_t>1) << s.order[i]
    assigned |= bit
    visit(s, i + 1, assigned, ones, twos, weight)
    if s.stop:
        return
    visit(s, i + 1, assigned, ones, twos | bit, weight + 2)
    if s.stop:
        return
    visit(s, i + 1, assigned, ones | bit, twos, weight + 1)


cdef void setup(Search *s, int n, in_masks, out_masks, order, int budget, int lower):
    cdef int v
    s.n = n
    s.full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n == 64 else (((<uint64_t>1) << n) - 1)
    for v in range(n):
        s.inm[v] = <uint64_t>in_masks[v]
        s.outm[v] = <uint64_t>out_masks[v]
        s.order[v] = <int>order[v]
    s.budget = budget
    s.lower = lower


cdef inline void run(Search *s) noexcept nogil:
    s.best = s.budget + 1
    s.best_ones = 0
    s.best_twos = 0
    s.nodes = 0
    s.stop = False
    if s.budget >= 0:
        visit(s, 0, 0, 0, 0, 0)


def best_idf(int n, in_masks, out_masks, order, int budget, int lower):
    """Lightest IDF of weight at most ``budget``; see ``_pykernels.best_idf``."""
    cdef Search s
    setup(&s, n, in_masks, out_masks, order, budget, lower)
    with nogil:
        run(&s)
    if s.best > budget:
        return -1, 0, 0, s.nodes
    return s.best, int(s.best_ones), int(s.best_twos), s.nodes


cdef bint next_combo(int *c, int k, int m) noexcept nogil:
    cdef int i = k - 1, j
    while i >= 0 and c[i] == m - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


def first_bondage_subset(int n, in_masks, out_masks, tails, heads, int k,
                         int gamma, order, list cache):
    """See ``_pykernels.first_bondage_subset``."""
    cdef Search s
    cdef int m = len(tails)
    cdef int tl[MAXN * MAXN]
    cdef int hd[MAXN * MAXN]
    cdef int c[MAXN * MAXN]
    cdef uint64_t base_in[MAXN]
    cdef uint64_t base_out[MAXN]
    cdef uint64_t c_ones[CACHE_CAP]
    cdef uint64_t c_twos[CACHE_CAP]
    cdef int ncache = 0, i, j, h, idx, hit
    cdef uint64_t o, t, lab, mm
    cdef bint ok, found = False
    cdef long long nodes = 0
    if k > m or k < 0:
        return None, 0
    setup(&s, n, in_masks, out_masks, order, gamma, gamma)
    for i in range(n):
        base_in[i] = s.inm[i]
        base_out[i] = s.outm[i]
    for i in range(m):
        tl[i] = tails[i]
        hd[i] = heads[i]
    for pair in cache[:CACHE_CAP]:
        c_ones[ncache] = <uint64_t>pair[0]
        c_twos[ncache] = <uint64_t>pair[1]
        ncache += 1
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            for i in range(n):
                s.inm[i] = base_in[i]
                s.outm[i] = base_out[i]
            for i in range(k):
                s.inm[hd[c[i]]] &= ~((<uint64_t>1) << tl[c[i]])
                s.outm[tl[c[i]]] &= ~((<uint64_t>1) << hd[c[i]])
            hit = -1
            for idx in range(ncache):
                o = c_ones[idx]
                t = c_twos[idx]
                lab = o | t
                ok = True
                for i in range(k):
                    h = hd[c[i]]
                    if (lab >> h) & 1:
                        continue
                    mm = s.inm[h]
                    if popcount(mm & o) + 2 * popcount(mm & t) < 2:
                        ok = False
                        break
                if ok:
                    hit = idx
                    break
            if hit >= 0:
                if hit > 0:
                    o = c_ones[hit]
                    t = c_twos[hit]
                    for j in range(hit, 0, -1):
                        c_ones[j] = c_ones[j - 1]
                        c_twos[j] = c_twos[j - 1]
                    c_ones[0] = o
                    c_twos[0] = t
            else:
                run(&s)
                nodes += s.nodes
                if s.best > gamma:
                    found = True
                    break
                if ncache < CACHE_CAP:
                    ncache += 1
                for j in range(ncache - 1, 0, -1):
                    c_ones[j] = c_ones[j - 1]
                    c_twos[j] = c_twos[j - 1]
                c_ones[0] = s.best_ones
                c_twos[0] = s.best_twos
            if not next_combo(c, k, m):
                break
    cache[:] = [(int(c_ones[i]), int(c_twos[i])) for i in range(ncache)]
    if found:
        return tuple(c[i] for i in range(k)), nodes
    return None, nodes


def first_reinforcing_subset(int n, in_masks, out_masks, tails, heads, int k,
                             int target, order):
    """See ``_pykernels.first_reinforcing_subset``."""
    cdef Search s
    cdef int m = len(tails)
    cdef int tl[MAXN * MAXN]
    cdef int hd[MAXN * MAXN]
    cdef int c[MAXN * MAXN]
    cdef uint64_t base_in[MAXN]
    cdef uint64_t base_out[MAXN]
    cdef int i
    cdef bint found = False
    cdef long long nodes = 0
    if k > m or k < 0:
        return None, 0
    setup(&s, n, in_masks, out_masks, order, target, target)
    for i in range(n):
        base_in[i] = s.inm[i]
        base_out[i] = s.outm[i]
    for i in range(m):
        tl[i] = tails[i]
        hd[i] = heads[i]
    for i in range(k):
        c[i] = i
    with nogil:
        while True:
            for i in range(n):
                s.inm[i] = base_in[i]
                s.outm[i] = base_out[i]
            for i in range(k):
                s.inm[hd[c[i]]] |= (<uint64_t>1) << tl[c[i]]
                s.outm[tl[c[i]]] |= (<uint64_t>1) << hd[c[i]]
            run(&s)
            nodes += s.nodes
            if s.best <= target:
                found = True
                break
            if not next_combo(c, k, m):
                break
    if found:
        return tuple(c[i] for i in range(k)), nodes
    return None, nodes
