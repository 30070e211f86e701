# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot-loop kernels.

Drop-in replacement for alexq._kernels_py (see there for the interface
contract and the algorithm notes); this file only rewrites the two hot
loops with C buffers. Permutations cross the boundary as Python tuples.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.string cimport memset


def compose_perm(p, q):
    """The permutation of "q then p": (p o q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


def invert_perm(p):
    cdef Py_ssize_t n = len(p)
    cdef list inv = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        inv[p[i]] = i
    return tuple(inv)


cdef void _extend(int n, int level, int width, int* factors, int* add,
                  int** allowed_arr, int* allowed_len, int** bufs,
                  char* seen, list results):
    cdef int d = factors[level]
    cdef int* src = bufs[level + 1]
    cdef int* dst = bufs[level]
    cdef int ai, img, c, x, y, base, pos, ok
    for ai in range(allowed_len[level]):
        img = allowed_arr[level][ai]
        memset(seen, 0, n)
        for x in range(width):
            dst[x] = src[x]
            seen[src[x]] = 1
        ok = 1
        base = 0
        pos = width
        for c in range(1, d):
            base = add[base * n + img]
            for x in range(width):
                y = add[base * n + src[x]]
                if seen[y]:
                    ok = 0
                    break
                seen[y] = 1
                dst[pos] = y
                pos += 1
            if not ok:
                break
        if not ok:
            continue
        if level == 0:
            results.append(tuple([dst[x] for x in range(n)]))
        else:
            _extend(n, level - 1, pos, factors, add, allowed_arr, allowed_len,
                    bufs, seen, results)


def enumerate_linear_bijections(n, factors, gen_idx, add, allowed):
    cdef int cn = n
    cdef int k = len(factors)
    if k == 0:
        return [(0,)]
    cdef int* c_add = <int*> PyMem_Malloc(cn * cn * sizeof(int))
    cdef int* c_factors = <int*> PyMem_Malloc(k * sizeof(int))
    cdef int* allowed_len = <int*> PyMem_Malloc(k * sizeof(int))
    cdef int** allowed_arr = <int**> PyMem_Malloc(k * sizeof(int*))
    cdef int** bufs = <int**> PyMem_Malloc((k + 1) * sizeof(int*))
    cdef char* seen = <char*> PyMem_Malloc(cn)
    cdef int i, j
    for i in range(k):
        allowed_arr[i] = NULL
    for i in range(k + 1):
        bufs[i] = NULL
    results = []
    try:
        for i in range(cn * cn):
            c_add[i] = add[i]
        for i in range(k):
            c_factors[i] = factors[i]
            lst = allowed[i]
            allowed_len[i] = len(lst)
            allowed_arr[i] = <int*> PyMem_Malloc(len(lst) * sizeof(int))
            for j in range(len(lst)):
                allowed_arr[i][j] = lst[j]
        for i in range(k + 1):
            bufs[i] = <int*> PyMem_Malloc(cn * sizeof(int))
        bufs[k][0] = 0
        _extend(cn, k - 1, 1, c_factors, c_add, allowed_arr, allowed_len,
                bufs, seen, results)
    finally:
        for i in range(k):
            PyMem_Free(allowed_arr[i])
        for i in range(k + 1):
            PyMem_Free(bufs[i])
        PyMem_Free(c_add)
        PyMem_Free(c_factors)
        PyMem_Free(allowed_len)
        PyMem_Free(allowed_arr)
        PyMem_Free(bufs)
        PyMem_Free(seen)
    results.sort(key=lambda p: tuple([p[g] for g in gen_idx]))
    return results


def conjugacy_partition(perms):
    cdef Py_ssize_t N = len(perms)
    cdef int n = len(perms[0])
    cdef int* P = <int*> PyMem_Malloc(N * n * sizeof(int))
    cdef int* INV = <int*> PyMem_Malloc(N * n * sizeof(int))
    cdef int* cid = <int*> PyMem_Malloc(N * sizeof(int))
    cdef int* m = <int*> PyMem_Malloc(n * sizeof(int))
    cdef Py_ssize_t i, h
    cdef int x, c
    cdef int* fp
    cdef int* hp
    cdef int* hi
    reps = []
    try:
        for i in range(N):
            row = perms[i]
            for x in range(n):
                P[i * n + x] = row[x]
            cid[i] = -1
        for i in range(N):
            for x in range(n):
                INV[i * n + P[i * n + x]] = x
        index = {}
        for i in range(N):
            index[PyBytes_FromStringAndSize(<char*> (P + i * n), n * sizeof(int))] = i
        for i in range(N):
            if cid[i] != -1:
                continue
            c = len(reps)
            reps.append(i)
            fp = P + i * n
            for h in range(N):
                hp = P + h * n
                hi = INV + h * n
                for x in range(n):
                    m[x] = hi[fp[hp[x]]]
                key = PyBytes_FromStringAndSize(<char*> m, n * sizeof(int))
                cid[<Py_ssize_t> index[key]] = c
        class_ids = [cid[i] for i in range(N)]
    finally:
        PyMem_Free(P)
        PyMem_Free(INV)
        PyMem_Free(cid)
        PyMem_Free(m)
    return class_ids, reps
