"""Command line interface: ``slpgram <command> ...``."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import bench as bench_mod
from .apps import SCORERS, discover_optimal_qgram, rank_patterns, score_qgrams, spectrum_kernel_slp
from .errors import BadFormat, SlpGramError
from .qgram import count_naive, count_sa, count_slp, escape_qgram, materialize
from .repair import repair_compress
from .slp import expand, fibonacci_slp, format_slp, is_slp_text, parse_slp

log = logging.getLogger("slpgram")


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, data):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _is_slp(data, fmt):
    if fmt == "auto":
        return is_slp_text(data)
    return fmt == "slp"


def _load_slp(path, fmt="auto"):
    """Parse an SLP file; raw files are compressed with RE-PAIR first."""
    data = _read(path)
    if _is_slp(data, fmt):
        return parse_slp(data)
    if not data:
        raise BadFormat(f"{path}: empty input")
    return repair_compress(data)


def cmd_compress(args):
    data = _read(args.input)
    if not data:
        raise BadFormat(f"{args.input}: cannot compress an empty file")
    slp = repair_compress(data)
    _write(args.output, format_slp(slp))
    print(f"n={slp.n}\tT_len={slp.length}", file=sys.stderr)
    return 0


def cmd_decompress(args):
    slp = parse_slp(_read(args.input))
    _write(args.output, expand(slp, limit=args.limit))
    return 0


def cmd_count(args):
    data = _read(args.input)
    is_slp = _is_slp(data, args.format)
    q = args.q
    if args.algo in ("smp", "ssa"):
        if not is_slp:
            raise BadFormat(f"{args.algo} needs an SLP input")
        table = count_slp(parse_slp(data), q, "naive" if args.algo == "smp" else "sa")
    else:
        if is_slp:
            if not args.expand:
                raise BadFormat(f"{args.algo} works on raw text; pass --expand to decompress the SLP")
            data = expand(parse_slp(data))
        if args.algo == "nmp":
            table = count_naive(data, q)
        else:
            table = materialize(count_sa(data, q), data, q)
    sys.stdout.write(table.to_tsv())
    return 0


def cmd_kernel(args):
    value = spectrum_kernel_slp(_load_slp(args.slp1, args.format), _load_slp(args.slp2, args.format), args.q)
    print(value)
    return 0


def _load_dir(path, fmt):
    names = sorted(n for n in os.listdir(path) if os.path.isfile(os.path.join(path, n)))
    return [_load_slp(os.path.join(path, n), fmt) for n in names]


def cmd_discover(args):
    set1 = _load_dir(args.dir1, args.format)
    set2 = _load_dir(args.dir2, args.format)
    scorer = SCORERS[args.scorer]
    if args.top == 1:
        ranked = [discover_optimal_qgram(set1, set2, args.q, scorer, args.objective)]
    else:
        ranked = rank_patterns(score_qgrams(set1, set2, args.q, scorer), args.objective)[: args.top]
    for p in ranked:
        sys.stdout.write(
            f"{escape_qgram(p.qgram)}\t{p.support1}\t{p.support2}\t{p.freq1}\t{p.freq2}\t{p.score!r}\n"
        )
    return 0


def cmd_genfib(args):
    _write(args.output, format_slp(fibonacci_slp(args.i)))
    return 0


def cmd_bench(args):
    qs = [int(x) for x in args.q.split(",")]
    algos = args.algos.split(",")
    for a in algos:
        if a not in bench_mod.ALGORITHMS:
            raise SlpGramError(f"unknown algorithm {a!r}")
    print("\t".join(bench_mod.HEADER))
    for row in bench_mod.bench(args.inputs, qs, algos, args.repeats, args.include_parse):
        print(row.tsv(), flush=True)
    return 0


def _positive(value):
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="slpgram", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("auto", "slp", "raw"), default="auto",
                       help="input format; auto detects the 'SLP ' header")

    p = sub.add_parser("compress", help="RE-PAIR compress a raw file to SLP text")
    p.add_argument("input")
    p.add_argument("output", nargs="?", default="-")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="expand an SLP file")
    p.add_argument("input")
    p.add_argument("output", nargs="?", default="-")
    p.add_argument("--limit", type=int, default=1 << 34)
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("count", help="q-gram frequencies as TSV")
    p.add_argument("input")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--algo", choices=bench_mod.ALGORITHMS, default="ssa")
    p.add_argument("--expand", action="store_true", help="let nmp/nsa decompress an SLP input")
    fmt(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("kernel", help="q-gram spectrum kernel of two inputs")
    p.add_argument("slp1")
    p.add_argument("slp2")
    p.add_argument("--q", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("discover", help="most discriminative q-gram between two directories")
    p.add_argument("dir1")
    p.add_argument("dir2")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--scorer", choices=sorted(SCORERS), default="diff")
    p.add_argument("--objective", choices=("max", "min"), default="max")
    p.add_argument("--top", type=_positive, default=10)
    fmt(p)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("genfib", help="SLP of the i-th Fibonacci string")
    p.add_argument("i", type=_positive)
    p.add_argument("output", nargs="?", default="-")
    p.set_defaults(func=cmd_genfib)

    p = sub.add_parser("bench", help="time nmp/nsa/smp/ssa; inputs are paths or fib:<i>")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--q", default="2,3,4", help="comma separated q values")
    p.add_argument("--algos", default=",".join(bench_mod.ALGORITHMS))
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--include-parse", action="store_true",
                   help="time SLP parsing as part of smp/ssa")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (SlpGramError, ValueError, OSError) as exc:
        print(f"slpgram: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
