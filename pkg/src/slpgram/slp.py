"""Straight-line programs: representation, derived tables, generators, text I/O.

An SLP is a list of rules where rule ``i`` is either a terminal byte or the
concatenation of two earlier rules.  The last rule is the root and derives
the represented text.  Rule ids are 0-based everywhere in the Python API;
the text format uses 1-based ids and the conversion happens only in
:func:`parse_slp` / :func:`format_slp`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .errors import (
    BadFormat,
    CountOverflow,
    EmptyProgram,
    ForwardReference,
    LengthOverflow,
    LimitExceeded,
)

MAX_LENGTH = 2**63 - 1
MAX_COUNT = 2**64 - 1
DEFAULT_EXPAND_LIMIT = 1 << 32

# rules at most this long are expanded once and reused as byte strings
_CACHE_LEN = 64


class Terminal(NamedTuple):
    symbol: int


class Pair(NamedTuple):
    left: int
    right: int


Rule = Union[Terminal, Pair]


@dataclass(frozen=True, eq=False)
class Slp:
    """A validated straight-line program.  Build with :func:`validate`."""

    rules: tuple
    lengths: tuple

    @property
    def n(self) -> int:
        return len(self.rules)

    @property
    def root(self) -> int:
        return len(self.rules) - 1

    @property
    def length(self) -> int:
        """Length of the derived text."""
        return self.lengths[-1]

    def __len__(self):
        return len(self.rules)

    def __eq__(self, other):
        if not isinstance(other, Slp):
            return NotImplemented
        return self.rules == other.rules

    def __hash__(self):
        return hash(self.rules)

    def __repr__(self):
        return f"Slp(n={self.n}, length={self.length})"


def validate(rules: Sequence) -> Slp:
    """Check ``rules`` and return an :class:`Slp` with its length table.

    Accepts :class:`Terminal` / :class:`Pair` instances or plain tuples
    (``("T", byte)`` / ``("N", left, right)``, 0-based ids).
    """
    if len(rules) == 0:
        raise EmptyProgram("an SLP needs at least one rule")
    checked = []
    lengths = []
    for i, rule in enumerate(rules):
        rule = _coerce(rule, i)
        if isinstance(rule, Terminal):
            if not 0 <= rule.symbol <= 255:
                raise BadFormat(f"rule {i}: terminal {rule.symbol} is not a byte")
            lengths.append(1)
        else:
            left, right = rule
            if not (0 <= left < i and 0 <= right < i):
                raise ForwardReference(i)
            size = lengths[left] + lengths[right]
            if size > MAX_LENGTH:
                raise LengthOverflow(f"rule {i} derives {size} bytes")
            lengths.append(size)
        checked.append(rule)
    return Slp(tuple(checked), tuple(lengths))


def _coerce(rule, i):
    if isinstance(rule, (Terminal, Pair)):
        return rule
    if len(rule) == 2 and rule[0] == "T":
        return Terminal(int(rule[1]))
    if len(rule) == 3 and rule[0] == "N":
        return Pair(int(rule[1]), int(rule[2]))
    raise BadFormat(f"rule {i}: cannot interpret {rule!r}")


def expand(slp: Slp, limit: int = DEFAULT_EXPAND_LIMIT) -> bytes:
    """Return the text derived by the root rule."""
    return expand_rule(slp, slp.root, limit)


def expand_rule(slp: Slp, index: int, limit: int = DEFAULT_EXPAND_LIMIT) -> bytes:
    """Return the string derived by rule ``index`` using an explicit stack."""
    size = slp.lengths[index]
    if size > limit:
        raise LimitExceeded(f"rule {index} derives {size} bytes, limit is {limit}")
    rules, lengths = slp.rules, slp.lengths
    cache = _short_expansions(slp, index)
    out = bytearray()
    stack = [index]
    while stack:
        i = stack.pop()
        piece = cache.get(i)
        if piece is not None:
            out += piece
            continue
        left, right = rules[i]
        stack.append(right)
        stack.append(left)
    assert len(out) == lengths[index]
    return bytes(out)


def _short_expansions(slp, upto):
    cache = {}
    for i in range(upto + 1):
        if slp.lengths[i] > _CACHE_LEN:
            continue
        rule = slp.rules[i]
        if isinstance(rule, Terminal):
            cache[i] = bytes((rule.symbol,))
        else:
            cache[i] = cache[rule.left] + cache[rule.right]
    return cache


def v_occ(slp: Slp) -> list:
    """Occurrence count of every rule in the derivation tree of the root."""
    n = slp.n
    occ = [0] * n
    occ[n - 1] = 1
    rules = slp.rules
    for i in range(n - 1, 0, -1):
        count = occ[i]
        rule = rules[i]
        if count == 0 or isinstance(rule, Terminal):
            continue
        left, right = rule
        occ[left] += count
        occ[right] += count
        if occ[left] > MAX_COUNT or occ[right] > MAX_COUNT:
            raise CountOverflow(f"occurrence count of a child of rule {i} exceeds 64 bits")
    return occ


def bounded_affixes(slp: Slp, k: int) -> tuple:
    """Per-rule prefixes and suffixes of length ``min(k, |X_i|)``.

    Each entry is built from the children's entries, so the cost is O(k) per
    rule and never touches the full expansion.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = slp.n
    pre = [b""] * n
    suf = [b""] * n
    if k == 0:
        return pre, suf
    lengths = slp.lengths
    for i, rule in enumerate(slp.rules):
        if isinstance(rule, Terminal):
            pre[i] = suf[i] = bytes((rule.symbol,))
            continue
        left, right = rule
        if lengths[left] >= k:
            pre[i] = pre[left]
        else:
            pre[i] = pre[left] + pre[right][: k - lengths[left]]
        if lengths[right] >= k:
            suf[i] = suf[right]
        else:
            need = k - lengths[right]
            suf[i] = suf[left][-need:] + suf[right]
    return pre, suf


def fibonacci_slp(i: int) -> Slp:
    """SLP for the i-th Fibonacci string: X1 = b, X2 = a, Xj = X(j-1) X(j-2)."""
    if i < 1:
        raise ValueError("Fibonacci index must be >= 1")
    rules = [Terminal(ord("b"))]
    if i >= 2:
        rules.append(Terminal(ord("a")))
    for j in range(2, i):
        rules.append(Pair(j - 1, j - 2))
    return validate(rules)


def random_slp(seed, n_rules: int, alphabet_size: int) -> Slp:
    """Deterministic random SLP.

    The first ``alphabet_size`` rules are terminals (letters ``a``.. for
    alphabets up to 26, raw byte values otherwise); every later rule pairs two
    uniformly chosen earlier rules.
    """
    if n_rules < 1:
        raise ValueError("n_rules must be >= 1")
    if not 1 <= alphabet_size <= 256:
        raise ValueError("alphabet_size must be in 1..256")
    rng = random.Random(seed)
    base = ord("a") if alphabet_size <= 26 else 0
    rules = [Terminal(base + j) for j in range(min(alphabet_size, n_rules))]
    for i in range(len(rules), n_rules):
        rules.append(Pair(rng.randrange(i), rng.randrange(i)))
    return validate(rules)


# -- text format ----------------------------------------------------------

_HEADER = re.compile(rb"SLP (0|[1-9][0-9]*)")
_TERMINAL = re.compile(rb"T (0|[1-9][0-9]{0,2})")
_PAIR = re.compile(rb"N ([1-9][0-9]*) ([1-9][0-9]*)")


def format_slp(slp: Slp) -> bytes:
    lines = [b"SLP %d" % slp.n]
    for rule in slp.rules:
        if isinstance(rule, Terminal):
            lines.append(b"T %d" % rule.symbol)
        else:
            lines.append(b"N %d %d" % (rule.left + 1, rule.right + 1))
    return b"\n".join(lines) + b"\n"


def parse_slp(data: bytes) -> Slp:
    """Parse the line-oriented SLP format (strict: LF endings, no extra space)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data.endswith(b"\n"):
        raise BadFormat("SLP text must end with a newline")
    lines = data[:-1].split(b"\n")
    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise BadFormat(f"bad header line {lines[0][:40]!r}")
    n = int(header.group(1))
    if n == 0:
        raise EmptyProgram("SLP declares zero rules")
    if len(lines) - 1 != n:
        raise BadFormat(f"header declares {n} rules, found {len(lines) - 1}")
    rules = []
    for lineno, line in enumerate(lines[1:], start=1):
        m = _TERMINAL.fullmatch(line)
        if m is not None:
            value = int(m.group(1))
            if value > 255:
                raise BadFormat(f"line {lineno + 1}: terminal {value} is not a byte")
            rules.append(Terminal(value))
            continue
        m = _PAIR.fullmatch(line)
        if m is None:
            raise BadFormat(f"line {lineno + 1}: cannot parse {line[:40]!r}")
        left, right = int(m.group(1)), int(m.group(2))
        if left >= lineno or right >= lineno:
            raise ForwardReference(lineno - 1)
        rules.append(Pair(left - 1, right - 1))
    return validate(rules)


def is_slp_text(data: bytes) -> bool:
    return data.startswith(b"SLP ")


def read_slp(path) -> Slp:
    with open(path, "rb") as fh:
        return parse_slp(fh.read())


def write_slp(slp: Slp, path) -> None:
    with open(path, "wb") as fh:
        fh.write(format_slp(slp))
