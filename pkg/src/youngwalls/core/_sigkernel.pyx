# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled signature reduction; same contract as _sigkernel_py.reduce_counts."""

from libc.stdlib cimport malloc, free


def reduce_counts(eps, phi):
    cdef Py_ssize_t n = len(eps)
    cdef Py_ssize_t j, top = 0
    cdef long e, p, c, rem
    cdef long plus = 0, minus = 0
    cdef Py_ssize_t last_minus = -1
    cdef Py_ssize_t *pos
    cdef long *cnt
    if len(phi) != n:
        raise ValueError("eps and phi differ in length")
    if n == 0:
        return 0, 0, -1, -1
    pos = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cnt = <long *> malloc(n * sizeof(long))
    if pos == NULL or cnt == NULL:
        free(pos)
        free(cnt)
        raise MemoryError()
    try:
        for j in range(n):
            e = eps[j]
            p = phi[j]
            if e < 0 or p < 0:
                raise ValueError("negative string length")
            if e:
                c = e if e < plus else plus
                plus -= c
                rem = c
                while rem:
                    if cnt[top - 1] <= rem:
                        rem -= cnt[top - 1]
                        top -= 1
                    else:
                        cnt[top - 1] -= rem
                        rem = 0
                if e > c:
                    minus += e - c
                    last_minus = j
            if p:
                pos[top] = j
                cnt[top] = p
                top += 1
                plus += p
        return minus, plus, (pos[0] if top else -1), last_minus
    finally:
        free(pos)
        free(cnt)
