# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the 2x2x2 move tables and the compact census."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint32_t, int64_t

cnp.import_array()

cdef enum:
    NC = 7
    NORIENT = 729
    NSTATES = 3674160

cdef int64_t FACT[7]
FACT[:] = [720, 120, 24, 6, 2, 1, 1]
cdef int64_t POW3[6]
POW3[:] = [243, 81, 27, 9, 3, 1]

UNSEEN = 255


cdef inline void _decode(int64_t index, int* perm, int* ori) noexcept nogil:
    cdef int64_t rank = index // NORIENT
    cdef int64_t code = index % NORIENT
    cdef int i, j, s = 0
    for i in range(NC):
        perm[i] = <int>((rank // FACT[i]) % (NC - i))
    for i in range(NC - 2, -1, -1):
        for j in range(i + 1, NC):
            if perm[j] >= perm[i]:
                perm[j] += 1
    for i in range(6):
        ori[i] = <int>((code // POW3[i]) % 3)
        s += ori[i]
    ori[6] = (3 - s % 3) % 3


cdef inline int64_t _encode(int* perm, int* ori) noexcept nogil:
    cdef int64_t rank = 0, code = 0
    cdef int i, j, smaller
    for i in range(NC):
        smaller = 0
        for j in range(i + 1, NC):
            if perm[j] < perm[i]:
                smaller += 1
        rank += smaller * FACT[i]
    for i in range(6):
        code = code * 3 + ori[i]
    return rank * NORIENT + code


def build_table(src, twist):
    cdef int s[NC]
    cdef int t[NC]
    cdef int perm[NC]
    cdef int ori[NC]
    cdef int perm2[NC]
    cdef int ori2[NC]
    cdef int i
    cdef int64_t idx
    for i in range(NC):
        s[i] = int(src[i])
        t[i] = int(twist[i])
    out = np.empty(NSTATES, dtype=np.uint32)
    cdef uint32_t[::1] view = out
    with nogil:
        for idx in range(NSTATES):
            _decode(idx, perm, ori)
            for i in range(NC):
                perm2[i] = perm[s[i]]
                ori2[i] = (ori[s[i]] + t[i]) % 3
            view[idx] = <uint32_t>_encode(perm2, ori2)
    return out


def collect_unseen(const uint32_t[:, ::1] table, const uint32_t[::1] frontier,
                   const uint8_t[::1] depth):
    cdef Py_ssize_t k = table.shape[0], m = frontier.shape[0]
    out = np.empty(k * m, dtype=np.uint32)
    cdef uint32_t[::1] buf = out
    cdef Py_ssize_t g, i, count = 0
    cdef uint32_t nxt
    with nogil:
        for i in range(m):
            for g in range(k):
                nxt = table[g, frontier[i]]
                if depth[nxt] == 255:
                    buf[count] = nxt
                    count += 1
    return out[:count]


def claim(const uint32_t[::1] candidates, uint8_t[::1] depth, int level):
    cdef Py_ssize_t i, m = candidates.shape[0], count = 0
    out = np.empty(m, dtype=np.uint32)
    cdef uint32_t[::1] buf = out
    cdef uint32_t c
    cdef uint8_t lv = <uint8_t>level
    with nogil:
        for i in range(m):
            c = candidates[i]
            if depth[c] == 255:
                depth[c] = lv
                buf[count] = c
                count += 1
    res = out[:count]
    res.sort()
    return res
