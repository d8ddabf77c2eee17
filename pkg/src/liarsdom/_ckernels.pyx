# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels (graphs with at most 64 vertices).

Same signatures and semantics as ``_pykernels``.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free as cfree

DS = 0
LDS = 1


cdef inline int _pc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef uint64_t* _to_array(object seq, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef uint64_t* arr = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = <uint64_t> seq[i]
    n_out[0] = n
    return arr


cdef inline bint _ds(const uint64_t* nb, Py_ssize_t n, uint64_t mask) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if (nb[i] & mask) == 0:
            return False
    return True


cdef inline bint _lds(const uint64_t* nb, Py_ssize_t n,
                      const uint64_t* pu, Py_ssize_t npu, uint64_t mask) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if _pc(nb[i] & mask) < 2:
            return False
    for i in range(npu):
        if _pc(pu[i] & mask) < 3:
            return False
    return True


def popcount(x):
    return _pc(<uint64_t> x)


def ds_ok(nb, mask):
    cdef Py_ssize_t n
    cdef uint64_t* a = _to_array(nb, &n)
    try:
        return _ds(a, n, <uint64_t> mask)
    finally:
        cfree(a)


def lds_ok(nb, pair_unions, mask):
    cdef Py_ssize_t n, npu
    cdef uint64_t* a = _to_array(nb, &n)
    cdef uint64_t* p = NULL
    try:
        p = _to_array(pair_unions, &npu)
        return _lds(a, n, p, npu, <uint64_t> mask)
    finally:
        cfree(a)
        if p != NULL:
            cfree(p)


def search_size(int problem, nb, pair_unions, free, base, int k, long long limit,
                long long budget):
    cdef Py_ssize_t n, npu, nf
    cdef uint64_t* a = _to_array(nb, &n)
    cdef uint64_t* p = NULL
    cdef uint64_t* fb = NULL
    cdef int* idx = NULL
    cdef uint64_t b0 = <uint64_t> base
    cdef uint64_t mask
    cdef long long examined = 0
    cdef bint hit = False, ok
    cdef int i, j
    solutions = []
    try:
        p = _to_array(pair_unions, &npu)
        fb = _to_array([1 << v for v in free], &nf)
        if k < 0 or k > nf:
            return solutions, 0, False
        idx = <int*> malloc((k + 1) * sizeof(int))
        if idx == NULL:
            raise MemoryError()
        for i in range(k):
            idx[i] = i
        while True:
            if examined >= budget:
                hit = True
                break
            examined += 1
            mask = b0
            for i in range(k):
                mask |= fb[idx[i]]
            if problem == DS:
                ok = _ds(a, n, mask)
            else:
                ok = _lds(a, n, p, npu, mask)
            if ok:
                solutions.append(mask)
                if 0 < limit <= len(solutions):
                    break
            # next combination in lexicographic order
            i = k - 1
            while i >= 0 and idx[i] == nf - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
        return solutions, examined, hit
    finally:
        cfree(a)
        if p != NULL:
            cfree(p)
        if fb != NULL:
            cfree(fb)
        if idx != NULL:
            cfree(idx)


def deficiency(nb, mask):
    cdef Py_ssize_t n
    cdef uint64_t* a = _to_array(nb, &n)
    cdef uint64_t m = <uint64_t> mask
    cdef long long total = 0
    cdef int c
    cdef Py_ssize_t u, v
    try:
        for u in range(n):
            c = _pc(a[u] & m)
            if c < 2:
                total += 2 - c
        for u in range(n):
            for v in range(u + 1, n):
                c = _pc((a[u] | a[v]) & m)
                if c < 3:
                    total += 3 - c
        return total
    finally:
        cfree(a)
