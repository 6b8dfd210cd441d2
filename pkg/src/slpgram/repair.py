"""RE-PAIR grammar compression producing SLPs.

The working sequence is a doubly linked list over the input positions.  For
every adjacent pair we keep the number of positions where it currently
starts (overlapping occurrences included) and a list of candidate positions.
A max-heap keyed on ``(-count, left, right)`` with lazy invalidation yields
the most frequent pair, smallest ids first among ties.  Because runs such as
``aaa`` hold fewer non-overlapping occurrences than overlapping ones, the
count stored in the heap is only an upper bound: a popped pair is accepted
when its exact non-overlapping frequency equals its key and is re-queued with
the exact value otherwise.
"""

from __future__ import annotations

import heapq
import logging
from collections import defaultdict

from .slp import Pair, Slp, Terminal, validate

log = logging.getLogger(__name__)


def binarize_sequence(seq, rules) -> int:
    """Fold ``seq`` left-leaning into pair rules appended to ``rules``.

    Returns the id of the rule deriving the whole sequence.
    """
    if not seq:
        raise ValueError("cannot binarize an empty sequence")
    acc = seq[0]
    for item in seq[1:]:
        rules.append(Pair(acc, item))
        acc = len(rules) - 1
    return acc


def repair_compress(text: bytes) -> Slp:
    """Compress ``text`` with RE-PAIR; ``expand(result) == text``."""
    text = bytes(text)
    if not text:
        raise ValueError("cannot compress an empty string")
    alphabet = sorted(set(text))
    rules = [Terminal(b) for b in alphabet]
    code = {b: i for i, b in enumerate(alphabet)}

    n = len(text)
    sym = [code[b] for b in text]
    nxt = list(range(1, n + 1))
    nxt[-1] = -1
    prv = list(range(-1, n - 1))

    count = defaultdict(int)
    where = defaultdict(list)
    for i in range(n - 1):
        pair = (sym[i], sym[i + 1])
        count[pair] += 1
        where[pair].append(i)
    heap = [(-c, a, b) for (a, b), c in count.items() if c >= 2]
    heapq.heapify(heap)

    while heap:
        negkey, a, b = heapq.heappop(heap)
        key = -negkey
        pair = (a, b)
        current = count.get(pair, 0)
        if current < 2 or key > current:
            continue
        chosen = _non_overlapping(pair, where, sym, nxt)
        if len(chosen) != key:
            if len(chosen) < key and len(chosen) >= 2:
                heapq.heappush(heap, (-len(chosen), a, b))
            continue

        new = len(rules)
        rules.append(Pair(a, b))
        touched = set()
        for i in chosen:
            j = nxt[i]
            p = prv[i]
            k = nxt[j]
            if p != -1:
                _drop(count, (sym[p], a), touched)
            if k != -1:
                _drop(count, (b, sym[k]), touched)
            count[pair] -= 1
            sym[i] = new
            sym[j] = -1
            nxt[i] = k
            if k != -1:
                prv[k] = i
            if p != -1:
                _add(count, where, (sym[p], new), p, touched)
            if k != -1:
                _add(count, where, (new, sym[k]), i, touched)
        del where[pair]
        for t in touched:
            c = count.get(t, 0)
            if c >= 2:
                heapq.heappush(heap, (-c, t[0], t[1]))

    residual = []
    i = 0
    while i != -1:
        residual.append(sym[i])
        i = nxt[i]
    binarize_sequence(residual, rules)
    log.debug("repair: %d bytes -> %d rules", n, len(rules))
    return validate(rules)


def _non_overlapping(pair, where, sym, nxt):
    a, b = pair
    live = sorted({i for i in where[pair] if sym[i] == a and nxt[i] != -1 and sym[nxt[i]] == b})
    where[pair] = live
    if a != b:
        return live
    chosen = []
    blocked = -1
    for i in live:
        if i == blocked:
            continue
        chosen.append(i)
        blocked = nxt[i]
    return chosen


def _drop(count, pair, touched):
    count[pair] -= 1
    touched.add(pair)


def _add(count, where, pair, pos, touched):
    count[pair] += 1
    where[pair].append(pos)
    touched.add(pair)
