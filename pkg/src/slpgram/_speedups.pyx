# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Output-identical to ``_purepy``; positions 0-based."""

import numpy as np
cimport numpy as cnp
from cpython.bytes cimport PyBytes_FromStringAndSize
from cpython.dict cimport PyDict_GetItem
from cpython.object cimport PyObject
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()


cdef void _induce(const int64_t[::1] s, int64_t[::1] sa, const uint8_t[::1] ls,
                  const int64_t[::1] lms, Py_ssize_t nlms,
                  const int64_t[::1] sum_s, const int64_t[::1] sum_l,
                  int64_t[::1] buf, Py_ssize_t upper) noexcept nogil:
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t i
    cdef int64_t d, v, c
    for i in range(n):
        sa[i] = -1
    for i in range(upper + 2):
        buf[i] = sum_s[i]
    for i in range(nlms):
        d = lms[i]
        if d == n:
            continue
        sa[buf[s[d]]] = d
        buf[s[d]] += 1
    for i in range(upper + 2):
        buf[i] = sum_l[i]
    sa[buf[s[n - 1]]] = n - 1
    buf[s[n - 1]] += 1
    for i in range(n):
        v = sa[i]
        if v >= 1 and not ls[v - 1]:
            c = s[v - 1]
            sa[buf[c]] = v - 1
            buf[c] += 1
    for i in range(upper + 2):
        buf[i] = sum_l[i]
    for i in range(n - 1, -1, -1):
        v = sa[i]
        if v >= 1 and ls[v - 1]:
            c = s[v - 1] + 1
            buf[c] -= 1
            sa[buf[c]] = v - 1


cdef cnp.ndarray _sais(const int64_t[::1] s, int64_t upper):
    cdef Py_ssize_t n = s.shape[0]
    cdef cnp.ndarray sa_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] sa = sa_arr
    if n == 0:
        return sa_arr
    if n == 1:
        return sa_arr
    if n == 2:
        if s[0] < s[1]:
            sa[0] = 0
            sa[1] = 1
        else:
            sa[0] = 1
            sa[1] = 0
        return sa_arr

    cdef uint8_t[::1] ls = np.zeros(n, dtype=np.uint8)
    cdef int64_t[::1] sum_l = np.zeros(upper + 2, dtype=np.int64)
    cdef int64_t[::1] sum_s = np.zeros(upper + 2, dtype=np.int64)
    cdef int64_t[::1] buf = np.zeros(upper + 2, dtype=np.int64)
    cdef int64_t[::1] lms_map = np.full(n + 1, -1, dtype=np.int64)
    cdef int64_t[::1] lms
    cdef int64_t[::1] sorted_lms
    cdef int64_t[::1] rec_s
    cdef int64_t[::1] rec_sa
    cdef Py_ssize_t i, j, m, k
    cdef int64_t left, right, end_l, end_r, rec_upper, v
    cdef bint same

    for i in range(n - 2, -1, -1):
        if s[i] == s[i + 1]:
            ls[i] = ls[i + 1]
        else:
            ls[i] = s[i] < s[i + 1]
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for i in range(upper + 1):
        sum_s[i] += sum_l[i]
        if i < upper:
            sum_l[i + 1] += sum_s[i]

    m = 0
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            m += 1
    lms = np.zeros(m, dtype=np.int64)
    m = 0
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = m
            lms[m] = i
            m += 1

    _induce(s, sa, ls, lms, m, sum_s, sum_l, buf, upper)

    if m:
        sorted_lms = np.zeros(m, dtype=np.int64)
        k = 0
        for i in range(n):
            v = sa[i]
            if lms_map[v] != -1:
                sorted_lms[k] = v
                k += 1
        rec_s = np.zeros(m, dtype=np.int64)
        rec_upper = 0
        rec_s[lms_map[sorted_lms[0]]] = 0
        for i in range(1, m):
            left = sorted_lms[i - 1]
            right = sorted_lms[i]
            j = lms_map[left] + 1
            end_l = lms[j] if j < m else n
            j = lms_map[right] + 1
            end_r = lms[j] if j < m else n
            same = True
            if end_l - left != end_r - right:
                same = False
            else:
                while left < end_l:
                    if s[left] != s[right]:
                        break
                    left += 1
                    right += 1
                if left == n or s[left] != s[right]:
                    same = False
            if not same:
                rec_upper += 1
            rec_s[lms_map[sorted_lms[i]]] = rec_upper
        rec_sa = _sais(rec_s, rec_upper)
        for i in range(m):
            sorted_lms[i] = lms[rec_sa[i]]
        _induce(s, sa, ls, sorted_lms, m, sum_s, sum_l, buf, upper)
    return sa_arr


def suffix_array(data):
    s = np.frombuffer(bytes(data), dtype=np.uint8).astype(np.int64)
    return _sais(s, 255)


def lcp_array(data, sa_in):
    cdef const uint8_t[::1] t = bytes(data)
    cdef const int64_t[::1] sa = np.ascontiguousarray(sa_in, dtype=np.int64)
    cdef Py_ssize_t n = t.shape[0]
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] lcp = out
    cdef int64_t[::1] rank = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t i, p, r, j, h = 0
    with nogil:
        for i in range(n):
            rank[sa[i]] = i
        for p in range(n):
            r = rank[p]
            if r == 0:
                h = 0
                continue
            j = sa[r - 1]
            while p + h < n and j + h < n and t[p + h] == t[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
    return out


def qgram_runs(sa_in, lcp_in, weights, Py_ssize_t q):
    cdef const int64_t[::1] sa = np.ascontiguousarray(sa_in, dtype=np.int64)
    cdef const int64_t[::1] lcp = np.ascontiguousarray(lcp_in, dtype=np.int64)
    cdef const int64_t[::1] w
    cdef bint weighted = weights is not None
    if weighted:
        w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t n = sa.shape[0]
    cdef int64_t last = n - q
    reps_a = np.empty(n, dtype=np.int64)
    totals_a = np.empty(n, dtype=np.int64)
    starts_a = np.empty(n, dtype=np.int64)
    ends_a = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] reps = reps_a
    cdef int64_t[::1] totals = totals_a
    cdef int64_t[::1] starts = starts_a
    cdef int64_t[::1] ends = ends_a
    cdef Py_ssize_t i, k = 0, start = 0
    cdef int64_t count = 0
    with nogil:
        for i in range(n + 1):
            if i == n or (i > 0 and lcp[i] < q):
                if count > 0:
                    reps[k] = sa[i - 1]
                    totals[k] = count
                    starts[k] = start
                    ends[k] = i
                    k += 1
                count = 0
                start = i
            if i < n and sa[i] <= last:
                if weighted:
                    count += w[sa[i]]
                else:
                    count += 1
    return reps_a[:k].copy(), totals_a[:k].copy(), starts_a[:k].copy(), ends_a[:k].copy()


def count_windows(bytes data, Py_ssize_t q, weights=None):
    cdef dict counts = {}
    cdef Py_ssize_t i, n = len(data)
    cdef const char* buf = data
    cdef const int64_t[::1] w
    cdef int64_t wi
    cdef object key
    cdef PyObject* found
    if weights is None:
        for i in range(n - q + 1):
            key = PyBytes_FromStringAndSize(buf + i, q)
            found = PyDict_GetItem(counts, key)
            if found is NULL:
                counts[key] = 1
            else:
                counts[key] = <object>found + 1
    else:
        w = np.ascontiguousarray(weights, dtype=np.int64)
        for i in range(n - q + 1):
            wi = w[i]
            key = PyBytes_FromStringAndSize(buf + i, q)
            found = PyDict_GetItem(counts, key)
            if found is not NULL:
                counts[key] = <object>found + wi
            elif wi > 0:
                counts[key] = wi
    return counts
