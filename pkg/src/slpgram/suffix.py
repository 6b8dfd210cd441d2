"""Suffix and LCP arrays over byte strings.

Public arrays use 1-based text positions: ``sa[i] = j`` means the suffix
starting at ``text[j-1]`` is the (i+1)-th smallest.  No sentinel is appended;
a suffix that is a proper prefix of another sorts first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InputTooLarge

NAIVE_LIMIT = 100_000


@dataclass(frozen=True, eq=False)
class SuffixIndex:
    sa: np.ndarray
    lcp: np.ndarray

    def __len__(self):
        return len(self.sa)

    def __eq__(self, other):
        if not isinstance(other, SuffixIndex):
            return NotImplemented
        return np.array_equal(self.sa, other.sa) and np.array_equal(self.lcp, other.lcp)


def build_suffix_array(text: bytes) -> np.ndarray:
    return kernels.suffix_array(bytes(text)) + 1


def build_lcp(text: bytes, sa: np.ndarray) -> np.ndarray:
    return kernels.lcp_array(bytes(text), np.asarray(sa, dtype=np.int64) - 1)


def build_suffix_index(text: bytes) -> SuffixIndex:
    text = bytes(text)
    sa0 = kernels.suffix_array(text)
    return SuffixIndex(sa0 + 1, kernels.lcp_array(text, sa0))


def naive_suffix_index(text: bytes) -> SuffixIndex:
    """Comparison sort plus direct pairwise LCP.  Test oracle only."""
    text = bytes(text)
    n = len(text)
    if n > NAIVE_LIMIT:
        raise InputTooLarge(f"naive suffix index limited to {NAIVE_LIMIT} bytes, got {n}")
    order = sorted(range(n), key=lambda i: text[i:])
    lcp = [0] * n
    for r in range(1, n):
        a, b = order[r - 1], order[r]
        h = 0
        while a + h < n and b + h < n and text[a + h] == text[b + h]:
            h += 1
        lcp[r] = h
    return SuffixIndex(np.array(order, dtype=np.int64) + 1, np.array(lcp, dtype=np.int64))


def check_suffix_index(text: bytes, index: SuffixIndex) -> None:
    """Assert the permutation, sortedness and lcp invariants; raise AssertionError."""
    text = bytes(text)
    n = len(text)
    sa = index.sa.tolist()
    lcp = index.lcp.tolist()
    assert sorted(sa) == list(range(1, n + 1)), "sa is not a permutation"
    if n:
        assert lcp[0] == 0
    for r in range(1, n):
        a, b = sa[r - 1] - 1, sa[r] - 1
        h = lcp[r]
        assert h <= min(n - a, n - b)
        assert text[a:a + h] == text[b:b + h]
        assert text[a + h:] < text[b + h:], f"suffixes out of order at rank {r}"
        if a + h < n and b + h < n:
            assert text[a + h] != text[b + h]
