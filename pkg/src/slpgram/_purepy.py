"""Pure-Python versions of the hot kernels.

Used when the compiled ``_speedups`` module is unavailable or disabled with
``SLPGRAM_PURE=1``.  Must stay output-identical to ``_speedups.pyx``.
All positions here are 0-based.
"""

import numpy as np


def _sais(s, upper):
    # induced sorting over integer list s with values in [0, upper]
    n = len(s)
    if n == 0:
        return []
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1] if s[0] < s[1] else [1, 0]

    sa = [0] * n
    ls = [False] * n  # True = S-type
    for i in range(n - 2, -1, -1):
        ls[i] = ls[i + 1] if s[i] == s[i + 1] else s[i] < s[i + 1]

    sum_l = [0] * (upper + 2)
    sum_s = [0] * (upper + 2)
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for i in range(upper + 1):
        sum_s[i] += sum_l[i]
        if i < upper:
            sum_l[i + 1] += sum_s[i]

    def induce(lms):
        for i in range(n):
            sa[i] = -1
        buf = sum_s[:]
        for d in lms:
            if d == n:
                continue
            sa[buf[s[d]]] = d
            buf[s[d]] += 1
        buf = sum_l[:]
        sa[buf[s[n - 1]]] = n - 1
        buf[s[n - 1]] += 1
        for i in range(n):
            v = sa[i]
            if v >= 1 and not ls[v - 1]:
                c = s[v - 1]
                sa[buf[c]] = v - 1
                buf[c] += 1
        buf = sum_l[:]
        for i in range(n - 1, -1, -1):
            v = sa[i]
            if v >= 1 and ls[v - 1]:
                c = s[v - 1] + 1
                buf[c] -= 1
                sa[buf[c]] = v - 1

    lms_map = [-1] * (n + 1)
    lms = []
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = len(lms)
            lms.append(i)
    m = len(lms)
    induce(lms)

    if m:
        sorted_lms = [v for v in sa if lms_map[v] != -1]
        rec_s = [0] * m
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
        induce(sorted_lms)
    return sa


def suffix_array(data):
    return np.array(_sais(list(data), 255), dtype=np.int64)


def lcp_array(data, sa):
    n = len(data)
    lcp = [0] * n
    rank = [0] * n
    sa = sa.tolist()
    for i, p in enumerate(sa):
        rank[p] = i
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while p + h < n and j + h < n and data[p + h] == data[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.array(lcp, dtype=np.int64)


def qgram_runs(sa, lcp, weights, q):
    """Scan maximal SA intervals whose adjacent lcp values are all >= q.

    Returns ``(reps, totals, starts, ends)``: for each interval with positive
    total weight, the text position of its last suffix, the summed weight of
    suffixes at least q long, and the half-open SA range.
    """
    n = len(sa)
    sa = sa.tolist()
    lcp = lcp.tolist()
    w = None if weights is None else weights.tolist()
    last = n - q
    reps, totals, starts, ends = [], [], [], []
    count = 0
    start = 0
    for i in range(n + 1):
        if i == n or (i > 0 and lcp[i] < q):
            if count > 0:
                reps.append(sa[i - 1])
                totals.append(count)
                starts.append(start)
                ends.append(i)
            count = 0
            start = i
        if i < n and sa[i] <= last:
            count += 1 if w is None else w[sa[i]]
    return (
        np.array(reps, dtype=np.int64),
        np.array(totals, dtype=np.int64),
        np.array(starts, dtype=np.int64),
        np.array(ends, dtype=np.int64),
    )


def count_windows(data, q, weights=None):
    counts = {}
    get = counts.get
    if weights is None:
        for i in range(len(data) - q + 1):
            key = data[i:i + q]
            counts[key] = get(key, 0) + 1
    else:
        w = weights.tolist()
        for i in range(len(data) - q + 1):
            wi = w[i]
            key = data[i:i + q]
            if key in counts:
                counts[key] += wi
            elif wi > 0:
                counts[key] = wi
    return counts
