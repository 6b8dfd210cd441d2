"""q-gram frequency counting on plain text and on SLPs.

Four counters are provided:

* :func:`count_naive`  -- associative-array scan of the plain text (NMP)
* :func:`count_sa`     -- suffix/LCP array run scan of the plain text (NSA)
* :func:`count_slp` with ``backend="naive"`` -- SLP reduction + weighted scan (SMP)
* :func:`count_slp` with ``backend="sa"``    -- SLP reduction + weighted SA scan (SSA)

The SLP reduction (:func:`build_weighted_text`) gathers, for every pair rule
``X = L R`` deriving at least q bytes, the short string
``suffix(L, q-1) + prefix(R, q-1)``.  The q-grams of the text that straddle
the L/R boundary of some occurrence of ``X`` are exactly the q-grams of that
short string, and each occurs once per occurrence of ``X`` in the derivation
tree, so weighting them by the rule's occurrence count gives the frequencies
of the whole text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._backend import kernels
from .errors import BadFormat, CountOverflow, PositionOutOfRange, QTooSmall, QZero
from .slp import Slp, Terminal, bounded_affixes, v_occ


def _check_q(q):
    if q < 1:
        raise QZero("q must be at least 1")


# -- result types ---------------------------------------------------------


@dataclass(eq=False)
class FreqTable:
    """Mapping from q-gram (bytes of length q) to a positive count."""

    q: int
    counts: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, FreqTable):
            return NotImplemented
        return self.q == other.q and self.counts == other.counts

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, key):
        return self.counts[key]

    def __contains__(self, key):
        return key in self.counts

    def __iter__(self):
        return iter(sorted(self.counts))

    def items(self):
        """(q-gram, count) pairs in lexicographic byte order."""
        return sorted(self.counts.items())

    def total(self) -> int:
        return sum(self.counts.values())

    def __repr__(self):
        shown = ", ".join(f"{k!r}: {v}" for k, v in self.items()[:8])
        more = ", ..." if len(self.counts) > 8 else ""
        return f"FreqTable(q={self.q}, {{{shown}{more}}})"

    def to_tsv(self) -> str:
        return "".join(f"{escape_qgram(k)}\t{v}\n" for k, v in self.items())

    @classmethod
    def from_tsv(cls, text: str, q: int) -> "FreqTable":
        counts = {}
        for line in text.splitlines():
            key, _, value = line.partition("\t")
            gram = unescape_qgram(key)
            if len(gram) != q:
                raise BadFormat(f"q-gram {key!r} does not have length {q}")
            counts[gram] = int(value)
        return cls(q, counts)


@dataclass(eq=False)
class PositionFreqList:
    """One (1-based position, count) pair per distinct q-gram of a subject string."""

    positions: np.ndarray
    counts: np.ndarray

    def __len__(self):
        return len(self.positions)

    def pairs(self):
        return list(zip(self.positions.tolist(), self.counts.tolist()))


@dataclass(eq=False)
class WeightedText:
    """A string ``z`` whose q-gram starting at ``i`` counts ``w[i]`` times."""

    z: bytes
    w: np.ndarray
    doc: Optional[np.ndarray] = None

    def __post_init__(self):
        if len(self.w) != len(self.z):
            raise ValueError("weights and string differ in length")
        if self.doc is not None and len(self.doc) != len(self.z):
            raise ValueError("document ids and string differ in length")

    def __len__(self):
        return len(self.z)


# -- TSV escaping ---------------------------------------------------------


def escape_qgram(gram: bytes) -> str:
    out = []
    for b in gram:
        if b == 0x5C:
            out.append("\\\\")
        elif 0x21 <= b <= 0x7E:
            out.append(chr(b))
        else:
            out.append(f"\\x{b:02X}")
    return "".join(out)


def unescape_qgram(text: str) -> bytes:
    out = bytearray()
    i = 0
    while i < len(text):
        c = text[i]
        if c != "\\":
            out.append(ord(c))
            i += 1
        elif text[i + 1:i + 2] == "\\":
            out.append(0x5C)
            i += 2
        elif text[i + 1:i + 2] == "x":
            out.append(int(text[i + 2:i + 4], 16))
            i += 4
        else:
            raise BadFormat(f"bad escape in {text!r}")
    return bytes(out)


# -- plain-text counters --------------------------------------------------


def count_naive(text: bytes, q: int) -> FreqTable:
    _check_q(q)
    return FreqTable(q, kernels.count_windows(bytes(text), q))


def count_sa(text: bytes, q: int) -> PositionFreqList:
    _check_q(q)
    text = bytes(text)
    sa = kernels.suffix_array(text)
    lcp = kernels.lcp_array(text, sa)
    reps, totals, _, _ = kernels.qgram_runs(sa, lcp, None, q)
    return PositionFreqList(reps + 1, totals)


def materialize(pfl: PositionFreqList, subject: bytes, q: int) -> FreqTable:
    counts = {}
    n = len(subject)
    for pos, count in zip(pfl.positions.tolist(), pfl.counts.tolist()):
        if pos < 1 or pos + q - 1 > n:
            raise PositionOutOfRange(f"position {pos} with q={q} exceeds subject length {n}")
        counts[bytes(subject[pos - 1:pos - 1 + q])] = count
    return FreqTable(q, counts)


# -- SLP reduction --------------------------------------------------------


def _weights_array(values):
    try:
        return np.array(values, dtype=np.int64)
    except OverflowError as exc:
        raise CountOverflow("weight exceeds 64-bit range") from exc


def build_weighted_text(slp: Slp, q: int) -> WeightedText:
    """Reduce q-gram counting on the SLP's text to a weighted string."""
    if q < 2:
        raise QTooSmall("the SLP reduction needs q >= 2")
    occ = v_occ(slp)
    pre, suf = bounded_affixes(slp, q - 1)
    lengths = slp.lengths
    z = bytearray()
    w = []
    zeros = [0] * (q - 1)
    for i, rule in enumerate(slp.rules):
        if isinstance(rule, Terminal) or lengths[i] < q:
            continue
        block = suf[rule.left] + pre[rule.right]
        z += block
        w.extend([occ[i]] * (len(block) - q + 1))
        w.extend(zeros)
    return WeightedText(bytes(z), _weights_array(w))


def slp_weighted_text(slp: Slp, q: int) -> WeightedText:
    """Like :func:`build_weighted_text` but also defined for q = 1.

    For q = 1 every terminal rule contributes its byte weighted by its
    occurrence count.
    """
    _check_q(q)
    if q >= 2:
        return build_weighted_text(slp, q)
    occ = v_occ(slp)
    z = bytearray()
    w = []
    for i, rule in enumerate(slp.rules):
        if isinstance(rule, Terminal):
            z.append(rule.symbol)
            w.append(occ[i])
    return WeightedText(bytes(z), _weights_array(w))


def count_weighted_naive(wt: WeightedText, q: int) -> FreqTable:
    _check_q(q)
    return FreqTable(q, kernels.count_windows(wt.z, q, wt.w))


def count_weighted_sa(wt: WeightedText, q: int) -> PositionFreqList:
    _check_q(q)
    sa = kernels.suffix_array(wt.z)
    lcp = kernels.lcp_array(wt.z, sa)
    reps, totals, _, _ = kernels.qgram_runs(sa, lcp, wt.w, q)
    return PositionFreqList(reps + 1, totals)


def count_slp(slp: Slp, q: int, backend: str = "sa") -> FreqTable:
    """q-gram frequencies of the text derived by ``slp`` without expanding it."""
    _check_q(q)
    if backend not in ("naive", "sa"):
        raise ValueError(f"unknown backend {backend!r}")
    if slp.length < q:
        return FreqTable(q)
    if q == 1:
        occ = v_occ(slp)
        counts = {}
        for i, rule in enumerate(slp.rules):
            if isinstance(rule, Terminal) and occ[i]:
                key = bytes((rule.symbol,))
                counts[key] = counts.get(key, 0) + occ[i]
        return FreqTable(1, counts)
    wt = build_weighted_text(slp, q)
    if backend == "naive":
        return count_weighted_naive(wt, q)
    return materialize(count_weighted_sa(wt, q), wt.z, q)
