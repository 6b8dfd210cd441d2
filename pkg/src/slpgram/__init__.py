"""q-gram frequencies on grammar-compressed strings.

Texts are represented as straight-line programs (:class:`Slp`); the counters
in :mod:`slpgram.qgram` work on the grammar without decompressing it.
"""

from ._backend import NAME as BACKEND
from .apps import (
    ScoredPattern,
    all_lengths_frequencies,
    chi_square,
    discover_optimal_qgram,
    spectrum_kernel_plain,
    spectrum_kernel_slp,
    support_difference,
)
from .qgram import (
    FreqTable,
    PositionFreqList,
    WeightedText,
    build_weighted_text,
    count_naive,
    count_sa,
    count_slp,
    count_weighted_naive,
    count_weighted_sa,
    materialize,
)
from .repair import binarize_sequence, repair_compress
from .slp import (
    Pair,
    Slp,
    Terminal,
    bounded_affixes,
    expand,
    fibonacci_slp,
    parse_slp,
    random_slp,
    v_occ,
    validate,
)
from .suffix import SuffixIndex, build_lcp, build_suffix_array, build_suffix_index, naive_suffix_index

__all__ = [
    "BACKEND", "FreqTable", "Pair", "PositionFreqList", "ScoredPattern", "Slp", "SuffixIndex",
    "Terminal", "WeightedText", "all_lengths_frequencies", "binarize_sequence", "bounded_affixes",
    "build_lcp", "build_suffix_array", "build_suffix_index", "build_weighted_text", "chi_square",
    "count_naive", "count_sa", "count_slp", "count_weighted_naive", "count_weighted_sa",
    "discover_optimal_qgram", "expand", "fibonacci_slp", "materialize", "naive_suffix_index",
    "parse_slp", "random_slp", "repair_compress", "spectrum_kernel_plain", "spectrum_kernel_slp",
    "support_difference", "v_occ", "validate",
]
