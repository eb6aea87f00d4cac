# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; mirrors ``_pykernels.dsatur_solve`` exactly."""

from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"


cdef struct Ctx:
    int n
    int k
    int symmetry
    long node_limit
    long nodes
    int maxc
    int abort
    int *indptr
    int *indices
    int *color
    int *cnt      # n * (k + 1)
    int *dom


cdef int _assign(Ctx *s, int e, int c) nogil:
    cdef int j, nb, ok = 1
    s.color[e] = c
    for j in range(s.indptr[e], s.indptr[e + 1]):
        nb = s.indices[j]
        s.cnt[nb * (s.k + 1) + c] += 1
        if s.cnt[nb * (s.k + 1) + c] == 1:
            s.dom[nb] -= 1
            if s.dom[nb] == 0 and s.color[nb] == 0:
                ok = 0
    return ok


cdef void _unassign(Ctx *s, int e, int c) nogil:
    cdef int j, nb
    s.color[e] = 0
    for j in range(s.indptr[e], s.indptr[e + 1]):
        nb = s.indices[j]
        s.cnt[nb * (s.k + 1) + c] -= 1
        if s.cnt[nb * (s.k + 1) + c] == 0:
            s.dom[nb] += 1


cdef int _search(Ctx *s, int left) nogil:
    cdef int e, best, bestd, top, c, old
    if left == 0:
        return 1
    s.nodes += 1
    if s.node_limit > 0 and s.nodes > s.node_limit:
        s.abort = 1
        return 0
    best = -1
    bestd = s.k + 1
    for e in range(s.n):
        if s.color[e] == 0 and s.dom[e] < bestd:
            best = e
            bestd = s.dom[e]
            if bestd <= 1:
                break
    e = best
    top = s.k
    if s.symmetry and s.maxc + 1 < top:
        top = s.maxc + 1
    for c in range(1, top + 1):
        if s.cnt[e * (s.k + 1) + c]:
            continue
        old = s.maxc
        if c > old:
            s.maxc = c
        if _assign(s, e, c) and _search(s, left - 1):
            return 1
        _unassign(s, e, c)
        s.maxc = old
        if s.abort:
            return 0
    return 0


def dsatur_solve(int n, indptr, indices, int k, init, bint symmetry, long node_limit=0):
    cdef Ctx s
    cdef int e, j, nb, c, remaining = 0, found
    cdef int m = len(indices)
    s.n = n
    s.k = k
    s.symmetry = symmetry
    s.node_limit = node_limit
    s.nodes = 0
    s.maxc = 0
    s.abort = 0
    s.indptr = <int *> malloc((n + 1) * sizeof(int))
    s.indices = <int *> malloc((m + 1) * sizeof(int))
    s.color = <int *> calloc(n + 1, sizeof(int))
    s.cnt = <int *> calloc(n * (k + 1) + 1, sizeof(int))
    s.dom = <int *> malloc((n + 1) * sizeof(int))
    try:
        for e in range(n + 1):
            s.indptr[e] = indptr[e]
        for j in range(m):
            s.indices[j] = indices[j]
        for e in range(n):
            s.dom[e] = k
        for e in range(n):
            c = init[e]
            if c:
                if c < 1 or c > k:
                    return None, 0
                for j in range(s.indptr[e], s.indptr[e + 1]):
                    if s.color[s.indices[j]] == c:
                        return None, 0
                s.color[e] = c
                if c > s.maxc:
                    s.maxc = c
                for j in range(s.indptr[e], s.indptr[e + 1]):
                    nb = s.indices[j]
                    s.cnt[nb * (k + 1) + c] += 1
                    if s.cnt[nb * (k + 1) + c] == 1:
                        s.dom[nb] -= 1
        for e in range(n):
            if s.color[e] == 0:
                remaining += 1
                if s.dom[e] == 0:
                    return None, 0
        with nogil:
            found = _search(&s, remaining)
        if s.abort:
            return -1, s.nodes
        if not found:
            return None, s.nodes
        return [s.color[e] for e in range(n)], s.nodes
    finally:
        free(s.indptr)
        free(s.indices)
        free(s.color)
        free(s.cnt)
        free(s.dom)
