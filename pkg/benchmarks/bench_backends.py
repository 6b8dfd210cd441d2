"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_backends.py [--sizes 100000,1000000] [--q 8]

Prints a TSV row per (input, kernel, backend) with the best of three runs.
"""

import argparse
import random
import time

from slpgram._backend import BACKENDS
from slpgram.slp import expand, fibonacci_slp


def inputs(sizes):
    rng = random.Random(0)
    fib = expand(fibonacci_slp(40))
    for size in sizes:
        yield f"random4-{size}", bytes(rng.choice(b"ACGT") for _ in range(size))
        yield f"fibonacci-{size}", fib[:size]


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100000,1000000")
    parser.add_argument("--q", type=int, default=8)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    q = args.q

    print("input\tkernel\tbackend\tsecs")
    for name, text in inputs(sizes):
        for backend, k in sorted(BACKENDS.items()):
            sa = k.suffix_array(text)
            lcp = k.lcp_array(text, sa)
            rows = [
                ("suffix_array", lambda: k.suffix_array(text)),
                ("lcp_array", lambda: k.lcp_array(text, sa)),
                ("qgram_runs", lambda: k.qgram_runs(sa, lcp, None, q)),
                ("count_windows", lambda: k.count_windows(text, q)),
            ]
            for kernel, fn in rows:
                print(f"{name}\t{kernel}\t{backend}\t{best_of(fn):.4f}", flush=True)


if __name__ == "__main__":
    main()
