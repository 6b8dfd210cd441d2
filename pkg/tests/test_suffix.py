import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import pairwise_lcp, sorted_suffixes
from slpgram.errors import InputTooLarge
from slpgram.suffix import (
    SuffixIndex,
    build_lcp,
    build_suffix_array,
    build_suffix_index,
    check_suffix_index,
    naive_suffix_index,
)


@pytest.mark.parametrize(
    "text, sa, lcp",
    [
        (b"abaab", [3, 4, 1, 5, 2], [0, 1, 2, 0, 1]),
        (b"a", [1], [0]),
        (b"aaaa", [4, 3, 2, 1], [0, 1, 2, 3]),
        (b"", [], []),
    ],
)
def test_examples(text, sa, lcp):
    assert build_suffix_array(text).tolist() == sa
    assert build_lcp(text, build_suffix_array(text)).tolist() == lcp
    assert naive_suffix_index(text) == SuffixIndex(np.array(sa), np.array(lcp))


def test_unsigned_byte_order():
    text = bytes([0xFF, 0x00, 0x80])
    assert build_suffix_array(text).tolist() == [2, 3, 1]


def test_naive_guard():
    with pytest.raises(InputTooLarge):
        naive_suffix_index(b"a" * 100_001)


def test_oracle_matches_brute_force():
    rng = random.Random(3)
    for _ in range(100):
        text = bytes(rng.randrange(3) for _ in range(rng.randrange(40)))
        idx = naive_suffix_index(text)
        assert idx.sa.tolist() == sorted_suffixes(text)
        assert idx.lcp.tolist() == pairwise_lcp(text, idx.sa.tolist())


@pytest.mark.parametrize("alphabet", [1, 2, 4, 26, 256])
def test_random_equivalence(alphabet):
    rng = random.Random(alphabet)
    for _ in range(60):
        text = bytes(rng.randrange(alphabet) for _ in range(rng.randrange(513)))
        built = build_suffix_index(text)
        assert built == naive_suffix_index(text)
        check_suffix_index(text, built)


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=300))
def test_invariants(text):
    check_suffix_index(text, build_suffix_index(text))


def test_periodic_and_fibonacci():
    from slpgram.slp import expand, fibonacci_slp

    for text in [b"ab" * 500, b"abc" * 333 + b"ab", expand(fibonacci_slp(18)), b"\x00" * 700]:
        assert build_suffix_index(text) == naive_suffix_index(text)
