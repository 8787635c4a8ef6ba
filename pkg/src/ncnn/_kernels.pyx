# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot loops: reflection length and crossing/nesting scans."""

from libc.stdlib cimport malloc, free


def reflection_length(images):
    cdef Py_ssize_t n = len(images)
    cdef Py_ssize_t k
    cdef long *w = <long *> malloc((n + 1) * sizeof(long))
    cdef char *seen = <char *> malloc(n + 1)
    cdef long start, x, y
    cdef long free_pairs = 0
    cdef bint balanced
    if w == NULL or seen == NULL:
        free(w)
        free(seen)
        raise MemoryError()
    try:
        for k in range(n):
            w[k + 1] = images[k]
            seen[k + 1] = 0
        for start in range(1, n + 1):
            if seen[start]:
                continue
            x = start
            balanced = False
            while True:
                seen[x if x > 0 else -x] = 1
                y = w[x if x > 0 else -x]
                x = y if x > 0 else -y
                if x == start:
                    break
                if x == -start:
                    balanced = True
                    break
            if not balanced:
                free_pairs += 1
        return n - free_pairs
    finally:
        free(w)
        free(seen)


cdef long *_flatten(edges, Py_ssize_t *m) except NULL:
    cdef Py_ssize_t k
    m[0] = len(edges)
    cdef long *buf = <long *> malloc((2 * m[0] + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for k in range(m[0]):
        lo, hi = edges[k]
        buf[2 * k] = lo
        buf[2 * k + 1] = hi
    return buf


def has_crossing(edges):
    cdef Py_ssize_t m, i, j
    cdef long *e = _flatten(edges, &m)
    cdef long a, b, c, d
    try:
        for i in range(m):
            a = e[2 * i]
            c = e[2 * i + 1]
            for j in range(m):
                b = e[2 * j]
                d = e[2 * j + 1]
                if a < b and b < c and c < d:
                    return True
        return False
    finally:
        free(e)


def has_nesting(edges):
    cdef Py_ssize_t m, i, j
    cdef long *e = _flatten(edges, &m)
    cdef long a, b, c, d
    try:
        for i in range(m):
            a = e[2 * i]
            d = e[2 * i + 1]
            for j in range(m):
                b = e[2 * j]
                c = e[2 * j + 1]
                if a < b and b < c and c < d:
                    return True
        return False
    finally:
        free(e)
