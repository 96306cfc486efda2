# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bitset edge classification and canonical labelling.

Mirrors ``_pykernels`` exactly (same refinement, same search order) so the
two backends return identical certificates and labellings.
"""

from libc.stdint cimport uint64_t

BACKEND = "cython"

cdef enum:
    MAXN = 64
    MAXCANON = 11

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _load(list adj, uint64_t* rows) except -1:
    cdef Py_ssize_t n = len(adj)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        rows[i] = <uint64_t>adj[i]
    return <int>n


def nontriangular_masks(list adj):
    cdef uint64_t rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef int u, v
    cdef uint64_t row, rest, m
    out = [0] * n
    for u in range(n):
        row = rows[u]
        rest = row
        m = 0
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            if not (row & rows[v]):
                m |= (<uint64_t>1) << v
        out[u] = m
    return out


def count_nontriangular(list adj):
    cdef uint64_t rows[MAXN]
    cdef int n = _load(adj, rows)
    cdef int u, v
    cdef uint64_t row, rest
    cdef long e2 = 0, t2 = 0
    for u in range(n):
        row = rows[u]
        e2 += __builtin_popcountll(row)
        rest = row
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            if not (row & rows[v]):
                t2 += 1
    return e2 // 2, t2 // 2


cdef struct Search:
    int n
    uint64_t rows[MAXCANON]
    uint64_t best
    int have_best
    int best_order[MAXCANON]


cdef int _refine(Search* s, int* colors, int k) nogil:
    cdef int n = s.n
    cdef int sig[MAXCANON][MAXCANON + 1]
    cdef int idx[MAXCANON]
    cdef uint64_t cells[MAXCANON]
    cdef int newc[MAXCANON]
    cdef int v, c, i, j, t, cmp, nk
    while True:
        for c in range(k):
            cells[c] = 0
        for v in range(n):
            cells[colors[v]] |= (<uint64_t>1) << v
        for v in range(n):
            sig[v][0] = colors[v]
            for c in range(k):
                sig[v][c + 1] = __builtin_popcountll(s.rows[v] & cells[c])
            idx[v] = v
        # insertion sort of vertices by signature
        for i in range(1, n):
            t = idx[i]
            j = i - 1
            while j >= 0:
                cmp = 0
                for c in range(k + 1):
                    if sig[idx[j]][c] != sig[t][c]:
                        cmp = 1 if sig[idx[j]][c] > sig[t][c] else -1
                        break
                if cmp <= 0:
                    break
                idx[j + 1] = idx[j]
                j -= 1
            idx[j + 1] = t
        nk = 0
        newc[idx[0]] = 0
        for i in range(1, n):
            cmp = 0
            for c in range(k + 1):
                if sig[idx[i - 1]][c] != sig[idx[i]][c]:
                    cmp = 1
                    break
            if cmp:
                nk += 1
            newc[idx[i]] = nk
        nk += 1
        if nk == k:
            return k
        for v in range(n):
            colors[v] = newc[v]
        k = nk


cdef uint64_t _certificate(Search* s, int* order) nogil:
    cdef uint64_t code = 0
    cdef int i, j
    cdef uint64_t row
    for j in range(1, s.n):
        row = s.rows[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


cdef void _search(Search* s, int* colors, int k) nogil:
    cdef int n = s.n
    cdef int order[MAXCANON]
    cdef int sizes[MAXCANON]
    cdef int cell[MAXCANON]
    cdef int kept[MAXCANON]
    cdef int child[MAXCANON]
    cdef int v, w, c, i, target, ncell, nkept, twin, ck
    cdef uint64_t code, bv, bw
    if k == n:
        for v in range(n):
            order[colors[v]] = v
        code = _certificate(s, order)
        if not s.have_best or code > s.best:
            s.best = code
            s.have_best = 1
            for v in range(n):
                s.best_order[v] = order[v]
        return
    for c in range(k):
        sizes[c] = 0
    for v in range(n):
        sizes[colors[v]] += 1
    target = 0
    while sizes[target] <= 1:
        target += 1
    ncell = 0
    for v in range(n):
        if colors[v] == target:
            cell[ncell] = v
            ncell += 1
    nkept = 0
    for i in range(ncell):
        v = cell[i]
        twin = 0
        bv = (<uint64_t>1) << v
        for c in range(nkept):
            w = kept[c]
            bw = (<uint64_t>1) << w
            if (s.rows[v] & ~bw) == (s.rows[w] & ~bv):
                twin = 1
                break
        if not twin:
            kept[nkept] = v
            nkept += 1
    for i in range(nkept):
        v = kept[i]
        for w in range(n):
            c = colors[w]
            if c > target:
                child[w] = c + 1
            elif c == target and w != v:
                child[w] = target + 1
            else:
                child[w] = c
        ck = _refine(s, child, k + 1)
        _search(s, child, ck)


def canonical_label(list adj):
    cdef Search s
    cdef int colors[MAXCANON]
    cdef int n = len(adj)
    cdef int v, k
    if n > MAXCANON:
        raise ValueError("compiled canonical labelling supports at most 11 vertices")
    if n == 0:
        return 0, []
    s.n = n
    s.have_best = 0
    s.best = 0
    for v in range(n):
        s.rows[v] = <uint64_t>adj[v]
        colors[v] = 0
    k = _refine(&s, colors, 1)
    _search(&s, colors, k)
    return int(s.best), [s.best_order[v] for v in range(n)]
