"""String-mining applications on top of the SLP reduction.

Both applications concatenate the weighted strings of several SLPs, tag every
position with its document id and make one pass over the suffix array of the
concatenation.  No separator bytes are needed: each block of a weighted
string ends with q-1 zero weights, so a window that crosses a block (and thus
a document) boundary never contributes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._backend import kernels
from .errors import EmptySet, KernelOverflow, NoQgram
from .qgram import WeightedText, count_naive, count_slp, slp_weighted_text
from .slp import Slp

KERNEL_LIMIT = 2**128 - 1

Scorer = Callable[[int, int, int, int], float]


@dataclass(frozen=True)
class ScoredPattern:
    qgram: bytes
    support1: int
    support2: int
    freq1: int
    freq2: int
    score: float


def support_difference(support1, support2, size1, size2):
    """Fraction of set 1 containing the pattern minus the fraction of set 2."""
    return support1 / size1 - support2 / size2


def chi_square(support1, support2, size1, size2):
    """Pearson chi-square statistic of the 2x2 presence/absence table."""
    a, b = support1, size1 - support1
    c, d = support2, size2 - support2
    total = size1 + size2
    denom = (a + b) * (c + d) * (a + c) * (b + d)
    if denom == 0:
        return 0.0
    return total * (a * d - b * c) ** 2 / denom


SCORERS = {"diff": support_difference, "chi2": chi_square}


def concatenate(texts: Sequence[WeightedText]) -> WeightedText:
    """Join weighted strings, recording which input each position came from."""
    if not texts:
        return WeightedText(b"", np.zeros(0, np.int64), np.zeros(0, np.int64))
    z = b"".join(t.z for t in texts)
    w = np.concatenate([t.w for t in texts]).astype(np.int64)
    doc = np.concatenate([np.full(len(t.z), d, dtype=np.int64) for d, t in enumerate(texts)])
    return WeightedText(z, w, doc)


def _runs(joined: WeightedText, q):
    sa = kernels.suffix_array(joined.z)
    lcp = kernels.lcp_array(joined.z, sa)
    # only positivity of a run matters here; unit weights cannot overflow
    present = (joined.w > 0).astype(np.int64)
    reps, _, starts, ends = kernels.qgram_runs(sa, lcp, present, q)
    return sa, reps, starts, ends


def _checked(total):
    if total > KERNEL_LIMIT:
        raise KernelOverflow("kernel value exceeds 128 bits")
    return total


def spectrum_kernel_plain(t1: bytes, t2: bytes, q: int) -> int:
    """Inner product of the q-gram frequency vectors of two strings."""
    f1 = count_naive(t1, q).counts
    f2 = count_naive(t2, q).counts
    if len(f2) < len(f1):
        f1, f2 = f2, f1
    return _checked(sum(c * f2[g] for g, c in f1.items() if g in f2))


def spectrum_kernel_slp(slp1: Slp, slp2: Slp, q: int) -> int:
    """Spectrum kernel of the texts of two SLPs, computed on their weighted strings."""
    joined = concatenate([slp_weighted_text(slp1, q), slp_weighted_text(slp2, q)])
    if len(joined) == 0:
        return 0
    sa, _, starts, ends = _runs(joined, q)
    qualifies = sa <= len(joined) - q
    w_sa = np.where(qualifies, joined.w[sa], 0)
    in_first = joined.doc[sa] == 0
    # per-document prefix sums each stay below one text length, so int64 holds them
    first = np.concatenate([[0], np.cumsum(np.where(in_first, w_sa, 0))])
    second = np.concatenate([[0], np.cumsum(np.where(in_first, 0, w_sa))])
    sums1 = (first[ends] - first[starts]).tolist()
    sums2 = (second[ends] - second[starts]).tolist()
    return _checked(sum(a * b for a, b in zip(sums1, sums2)))


def score_qgrams(set1: Sequence[Slp], set2: Sequence[Slp], q: int, scorer: Scorer = support_difference):
    """Score every q-gram occurring in some document; lexicographic order."""
    if not set1 or not set2:
        raise EmptySet("both document sets must be nonempty")
    if all(s.length < q for s in list(set1) + list(set2)):
        raise NoQgram(f"no document is at least {q} bytes long")
    size1, size2 = len(set1), len(set2)
    joined = concatenate([slp_weighted_text(s, q) for s in list(set1) + list(set2)])
    sa, reps, starts, ends = _runs(joined, q)
    last = len(joined) - q
    sa_l = sa.tolist()
    w = joined.w.tolist()
    doc = joined.doc.tolist()
    z = joined.z
    out = []
    for rep, start, end in zip(reps.tolist(), starts.tolist(), ends.tolist()):
        docs1, docs2 = set(), set()
        freq1 = freq2 = 0
        for p in sa_l[start:end]:
            if p > last or w[p] == 0:
                continue
            d = doc[p]
            if d < size1:
                docs1.add(d)
                freq1 += w[p]
            else:
                docs2.add(d)
                freq2 += w[p]
        s1, s2 = len(docs1), len(docs2)
        out.append(ScoredPattern(z[rep:rep + q], s1, s2, freq1, freq2, scorer(s1, s2, size1, size2)))
    return out


def rank_patterns(patterns, objective="max"):
    """Best first; ties broken by the lexicographically smallest q-gram."""
    sign = -1 if objective == "max" else 1
    return sorted(patterns, key=lambda p: (sign * p.score, p.qgram))


def discover_optimal_qgram(
    set1: Sequence[Slp],
    set2: Sequence[Slp],
    q: int,
    scorer: Scorer = support_difference,
    objective: str = "max",
) -> ScoredPattern:
    """The q-gram with the highest (or lowest) score over two sets of SLPs."""
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    best = None
    for pat in score_qgrams(set1, set2, q, scorer):
        # patterns arrive in lexicographic order, so strict improvement keeps the smallest tie
        if best is None or (pat.score > best.score if objective == "max" else pat.score < best.score):
            best = pat
    return best


def all_lengths_frequencies(slp: Slp, q_max: int) -> list:
    """Frequency tables for every q in 1..q_max, one reduction per q."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    return [count_slp(slp, q) for q in range(1, q_max + 1)]

