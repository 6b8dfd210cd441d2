"""The compiled and pure-Python kernels must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import sorted_suffixes, windows
from slpgram import _backend
from slpgram._purepy import count_windows as py_windows

both = pytest.mark.skipif(len(_backend.BACKENDS) < 2, reason="compiled extension not built")


def test_selected_backend_is_known():
    assert _backend.NAME in _backend.BACKENDS


@pytest.mark.parametrize("name", sorted(_backend.BACKENDS))
@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=200))
def test_suffix_array(name, text):
    kernels = _backend.BACKENDS[name]
    assert (kernels.suffix_array(text) + 1).tolist() == sorted_suffixes(text)


@pytest.mark.parametrize("name", sorted(_backend.BACKENDS))
@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=200), st.integers(1, 6))
def test_windows_and_runs(name, text, q):
    kernels = _backend.BACKENDS[name]
    assert kernels.count_windows(text, q) == dict(windows(text, q))
    sa = kernels.suffix_array(text)
    lcp = kernels.lcp_array(text, sa)
    reps, totals, starts, ends = kernels.qgram_runs(sa, lcp, None, q)
    got = {text[p:p + q]: c for p, c in zip(reps.tolist(), totals.tolist())}
    assert got == dict(windows(text, q))
    assert (ends > starts).all()


@both
@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=300), st.integers(1, 5), st.data())
def test_compiled_matches_python(text, q, data):
    py, cy = _backend.BACKENDS["python"], _backend.BACKENDS["compiled"]
    w = np.array(data.draw(st.lists(st.integers(0, 9), min_size=len(text), max_size=len(text))), dtype=np.int64)
    sa = py.suffix_array(text)
    assert np.array_equal(sa, cy.suffix_array(text))
    lcp = py.lcp_array(text, sa)
    assert np.array_equal(lcp, cy.lcp_array(text, sa))
    for weights in (None, w):
        a = py.qgram_runs(sa, lcp, weights, q)
        b = cy.qgram_runs(sa, lcp, weights, q)
        for x, y in zip(a, b):
            assert np.array_equal(x, y)
        assert py.count_windows(text, q, weights) == cy.count_windows(text, q, weights)


def test_weighted_windows_skip_zero_only_keys():
    z = b"abab"
    w = np.array([0, 2, 0, 0], dtype=np.int64)
    assert py_windows(z, 2, w) == {b"ba": 2}
