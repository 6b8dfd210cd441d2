"""Timing of the four q-gram counters, inputs held in memory."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .qgram import build_weighted_text, count_naive, count_sa, count_slp, count_weighted_sa, slp_weighted_text
from .slp import Slp, expand, fibonacci_slp, format_slp, is_slp_text, parse_slp
from .repair import repair_compress

ALGORITHMS = ("nmp", "nsa", "smp", "ssa")
HEADER = ("input", "algo", "q", "n", "T_len", "z_len", "z_ratio", "mean_secs", "repeats")


def run_algorithm(algo: str, text: bytes, slp: Slp, q: int):
    """Run one counter; results stay in the form each algorithm reports natively."""
    if algo == "nmp":
        return count_naive(text, q)
    if algo == "nsa":
        return count_sa(text, q)
    if algo == "smp":
        return count_slp(slp, q, "naive")
    if algo == "ssa":
        if q == 1 or slp.length < q:
            return count_slp(slp, q, "sa")
        return count_weighted_sa(build_weighted_text(slp, q), q)
    raise ValueError(f"unknown algorithm {algo!r}")


def time_algorithm(algo, text, slp, q, repeats=3, slp_bytes=None):
    """Wall times of ``repeats`` runs on a monotonic clock.

    With ``slp_bytes`` the SLP-based counters also parse the grammar inside
    the timed region.
    """
    if repeats < 3:
        raise ValueError("repeats must be at least 3")
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        if slp_bytes is not None and algo in ("smp", "ssa"):
            run_algorithm(algo, text, parse_slp(slp_bytes), q)
        else:
            run_algorithm(algo, text, slp, q)
        times.append(time.perf_counter() - start)
    return times


@dataclass
class BenchRow:
    input: str
    algo: str
    q: int
    n: int
    t_len: int
    z_len: int
    mean_secs: float
    repeats: int

    @property
    def z_ratio(self) -> float:
        return self.z_len / self.t_len if self.t_len else 0.0

    def tsv(self) -> str:
        return "\t".join(
            [self.input, self.algo, str(self.q), str(self.n), str(self.t_len), str(self.z_len),
             f"{self.z_ratio:.6f}", f"{self.mean_secs:.6f}", str(self.repeats)]
        )


def load_input(spec: str):
    """Return (text, slp) for a path (raw or SLP text) or ``fib:<i>``."""
    if spec.startswith("fib:"):
        slp = fibonacci_slp(int(spec[4:]))
        return expand(slp), slp
    with open(spec, "rb") as fh:
        data = fh.read()
    if is_slp_text(data):
        slp = parse_slp(data)
        return expand(slp), slp
    return data, repair_compress(data)


def bench(inputs, qs, algos=ALGORITHMS, repeats=3, include_parse=False):
    """Yield one :class:`BenchRow` per (input, q, algorithm) cell, run sequentially."""
    for spec in inputs:
        text, slp = load_input(spec)
        slp_bytes = format_slp(slp) if include_parse else None
        for q in qs:
            z_len = len(slp_weighted_text(slp, q)) if slp.length >= q else 0
            for algo in algos:
                times = time_algorithm(algo, text, slp, q, repeats, slp_bytes)
                yield BenchRow(spec, algo, q, slp.n, len(text), z_len, statistics.fmean(times), repeats)
