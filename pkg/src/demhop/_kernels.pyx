# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""
Compiled hopping kernels; same interface as ``_kernels_py`` minus tracing.

Signed windows are handled on the normalized unfolding (values ``1..2n``,
mirror of ``k`` is ``2n+1-k``).
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef void _hop(int* u, int* pos, int size, int t, const int* L, int k,
               bint mirror) noexcept nogil:
    cdef int pt, best, q, pb, mt, mq, a, b, r
    while True:
        pt = pos[t]
        best = 0
        for r in range(k):
            q = L[r]
            if q > t and pos[q] > pt:
                best = q
        if best == 0:
            return
        pb = pos[best]
        u[pt] = best
        u[pb] = t
        pos[best] = pt
        pos[t] = pb
        if mirror:
            mt = size + 1 - t
            mq = size + 1 - best
            if mt != best:
                a = pos[mt]
                b = pos[mq]
                u[a] = mq
                u[b] = mt
                pos[mq] = a
                pos[mt] = b


cdef inline void _index(int* u, int* pos, int size) noexcept nogil:
    cdef int p
    for p in range(size):
        pos[u[p]] = p


cdef int* _alloc(Py_ssize_t count) except NULL:
    cdef int* buf = <int*>PyMem_Malloc(count * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


def hop_a(w, int t, L, trace=None):
    if trace is not None:
        raise NotImplementedError("tracing is only available in the Python kernels")
    cdef Py_ssize_t n = len(w), k = len(L), p
    cdef int* buf = _alloc(2 * n + 1 + k + 1)
    cdef int* u = buf
    cdef int* pos = buf + n
    cdef int* lst = buf + 2 * n + 1
    try:
        for p in range(n):
            u[p] = w[p]
        for p in range(k):
            lst[p] = L[p]
        _index(u, pos, n)
        _hop(u, pos, n, t, lst, k, False)
        return tuple([u[p] for p in range(n)])
    finally:
        PyMem_Free(buf)


cdef inline void _unfold_norm(int* u, w, int n):
    cdef int m = 2 * n + 1, p, x
    for p in range(n):
        x = w[p]
        if x < 0:
            x = m + x
        u[p] = x
        u[2 * n - 1 - p] = m - x


cdef inline tuple _fold_denorm(int* u, int n):
    cdef int m = 2 * n + 1
    return tuple([u[p] if u[p] <= n else u[p] - m for p in range(n)])


def hop_signed(w, int t, L, trace=None):
    if trace is not None:
        raise NotImplementedError("tracing is only available in the Python kernels")
    cdef int n = len(w), k = len(L), p, x
    cdef int m = 2 * n + 1
    cdef int* buf = _alloc(4 * n + 1 + k + 1)
    cdef int* u = buf
    cdef int* pos = buf + 2 * n
    cdef int* lst = buf + 4 * n + 1
    try:
        _unfold_norm(u, w, n)
        for p in range(k):
            x = L[p]
            lst[p] = x if x > 0 else m + x
        _index(u, pos, 2 * n)
        _hop(u, pos, 2 * n, t if t > 0 else m + t, lst, k, True)
        return _fold_denorm(u, n)
    finally:
        PyMem_Free(buf)


def star_a(w, v):
    cdef int n = len(w), p, i, x, k
    cdef int* buf = _alloc(4 * n + 2)
    cdef int* u = buf
    cdef int* pos = buf + n
    cdef int* ww = buf + 2 * n + 1
    cdef int* lst = buf + 3 * n + 1
    try:
        for p in range(n):
            ww[p] = w[p]
        for p in range(n):
            u[p] = ww[<int>v[p] - 1]
        _index(u, pos, n)
        with nogil:
            for i in range(1, n):
                k = 0
                for p in range(n):
                    x = ww[p]
                    if x == i:
                        break
                    if x > i:
                        lst[k] = x
                        k += 1
                _hop(u, pos, n, i, lst, k, False)
        return tuple([u[p] for p in range(n)])
    finally:
        PyMem_Free(buf)


def star_signed(w, v, bint closed):
    cdef int n = len(w), p, i, x, k, neg, top
    cdef bint seen_neg
    cdef int m = 2 * n + 1
    cdef int size = 2 * n
    cdef int* buf = _alloc(4 * size + 1)
    cdef int* u = buf
    cdef int* pos = buf + size
    cdef int* uw = buf + 2 * size + 1
    cdef int* lst = buf + 3 * size + 1
    cdef list wv = []
    try:
        for p in range(n):
            x = v[p]
            wv.append(w[x - 1] if x > 0 else -w[-x - 1])
        _unfold_norm(u, wv, n)
        _unfold_norm(uw, w, n)
        _index(u, pos, size)
        top = n if closed else n - 1
        with nogil:
            for i in range(1, top + 1):
                neg = m - i
                seen_neg = False
                k = 0
                for p in range(size):
                    if p == n and seen_neg:
                        lst[k] = neg
                        k += 1
                    x = uw[p]
                    if x == i:
                        break
                    if x == neg:
                        seen_neg = closed
                    elif i < x < neg:
                        lst[k] = x
                        k += 1
                _hop(u, pos, size, i, lst, k, True)
        return _fold_denorm(u, n)
    finally:
        PyMem_Free(buf)
