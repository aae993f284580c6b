# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled word-tree kernels.  Mirrors ``_pykernels`` operation for operation."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def tree_size(Py_ssize_t ngens, Py_ssize_t depth):
    cdef Py_ssize_t total = 0, level = 2 * ngens, i
    if ngens <= 0 or depth <= 0:
        return 0
    for i in range(depth):
        total += level
        level *= 2 * ngens - 1
    return total


cdef inline int _signed(int k) nogil:
    if k % 2 == 0:
        return k // 2 + 1
    return -(k // 2 + 1)


cdef double[:, ::1] _letters(double[:, ::1] gens):
    cdef Py_ssize_t g = gens.shape[0], i
    cdef double[:, ::1] out = np.empty((2 * g, 4), dtype=np.float64)
    for i in range(g):
        out[2 * i, 0] = gens[i, 0]
        out[2 * i, 1] = gens[i, 1]
        out[2 * i, 2] = gens[i, 2]
        out[2 * i, 3] = gens[i, 3]
        out[2 * i + 1, 0] = gens[i, 3]
        out[2 * i + 1, 1] = -gens[i, 1]
        out[2 * i + 1, 2] = -gens[i, 2]
        out[2 * i + 1, 3] = gens[i, 0]
    return out


def word_products(gens, int depth):
    cdef double[:, ::1] G = np.ascontiguousarray(gens, dtype=np.float64).reshape(-1, 4)
    cdef Py_ssize_t g = G.shape[0]
    cdef Py_ssize_t n = tree_size(g, depth)
    words_arr = np.zeros((n, max(depth, 0)), dtype=np.int32)
    mats_arr = np.empty((n, 4), dtype=np.float64)
    if n == 0:
        return words_arr, mats_arr
    cdef int[:, ::1] words = words_arr
    cdef double[:, ::1] mats = mats_arr
    cdef double[:, ::1] L = _letters(G)
    cdef double[:, ::1] prefix = np.empty((depth + 1, 4), dtype=np.float64)
    cdef int[::1] choice = np.full(depth, -1, dtype=np.int32)
    cdef int[::1] word = np.zeros(depth, dtype=np.int32)
    cdef int nl = 2 * g, level = 0, k, j
    cdef Py_ssize_t row = 0
    cdef double a, b, c, d, e, f, gg, h
    prefix[0, 0] = 1.0; prefix[0, 1] = 0.0; prefix[0, 2] = 0.0; prefix[0, 3] = 1.0
    with nogil:
        while level >= 0:
            choice[level] += 1
            k = choice[level]
            if k >= nl:
                level -= 1
                continue
            if level > 0 and k == (word[level - 1] ^ 1):
                continue
            word[level] = k
            a = prefix[level, 0]; b = prefix[level, 1]
            c = prefix[level, 2]; d = prefix[level, 3]
            e = L[k, 0]; f = L[k, 1]; gg = L[k, 2]; h = L[k, 3]
            mats[row, 0] = a * e + b * gg
            mats[row, 1] = a * f + b * h
            mats[row, 2] = c * e + d * gg
            mats[row, 3] = c * f + d * h
            for j in range(level + 1):
                words[row, j] = _signed(word[j])
            if level + 1 < depth:
                prefix[level + 1, 0] = mats[row, 0]
                prefix[level + 1, 1] = mats[row, 1]
                prefix[level + 1, 2] = mats[row, 2]
                prefix[level + 1, 3] = mats[row, 3]
                choice[level + 1] = -1
                level += 1
            row += 1
    return words_arr, mats_arr


def limit_tree(gens, discs, int depth):
    cdef double[:, ::1] G = np.ascontiguousarray(gens, dtype=np.float64).reshape(-1, 4)
    cdef double[:, ::1] F = np.ascontiguousarray(discs, dtype=np.float64).reshape(-1, 2)
    cdef Py_ssize_t g = G.shape[0]
    if F.shape[0] != 2 * g:
        raise ValueError("need one disc per letter")
    cdef Py_ssize_t n = tree_size(g, depth)
    words_arr = np.zeros((n, max(depth, 0)), dtype=np.int32)
    lo_arr = np.empty(n, dtype=np.float64)
    hi_arr = np.empty(n, dtype=np.float64)
    if n == 0:
        return words_arr, lo_arr, hi_arr
    cdef int[:, ::1] words = words_arr
    cdef double[::1] lo = lo_arr
    cdef double[::1] hi = hi_arr
    cdef double[:, ::1] L = _letters(G)
    cdef double[:, ::1] prefix = np.empty((depth + 1, 4), dtype=np.float64)
    cdef int[::1] choice = np.full(depth, -1, dtype=np.int32)
    cdef int[::1] word = np.zeros(depth, dtype=np.int32)
    cdef int nl = 2 * g, level = 0, k, j
    cdef Py_ssize_t row = 0
    cdef double a, b, c, d, e, f, gg, h, u, v, u2, v2
    prefix[0, 0] = 1.0; prefix[0, 1] = 0.0; prefix[0, 2] = 0.0; prefix[0, 3] = 1.0
    with nogil:
        while level >= 0:
            choice[level] += 1
            k = choice[level]
            if k >= nl:
                level -= 1
                continue
            if level > 0 and k == (word[level - 1] ^ 1):
                continue
            word[level] = k
            a = prefix[level, 0]; b = prefix[level, 1]
            c = prefix[level, 2]; d = prefix[level, 3]
            u = F[k, 0]; v = F[k, 1]
            u2 = (a * u + b) / (c * u + d)
            v2 = (a * v + b) / (c * v + d)
            for j in range(level + 1):
                words[row, j] = _signed(word[j])
            if u2 <= v2:
                lo[row] = u2; hi[row] = v2
            else:
                lo[row] = v2; hi[row] = u2
            if level + 1 < depth:
                e = L[k, 0]; f = L[k, 1]; gg = L[k, 2]; h = L[k, 3]
                prefix[level + 1, 0] = a * e + b * gg
                prefix[level + 1, 1] = a * f + b * h
                prefix[level + 1, 2] = c * e + d * gg
                prefix[level + 1, 3] = c * f + d * h
                choice[level + 1] = -1
                level += 1
            row += 1
    return words_arr, lo_arr, hi_arr
