"""Exact arithmetic on eventually periodic points of n^omega.

A point is held as a Lasso in canonical form: the cycle is primitive and the
prefix cannot be shortened by rotating the cycle. Two canonical lassos are
equal exactly when they denote the same infinite sequence.
"""

from itertools import product
from math import lcm
from typing import Iterable, Optional

from descol.models import FiniteGraph, Lasso

TAIL_MODES = ("all-equal", "none-equal")


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


def normalize(alphabet: int, prefix: Iterable[int], cycle: Iterable[int]) -> Lasso:
    """Return the canonical lasso denoting prefix . cycle^omega."""
    prefix = tuple(prefix)
    cycle = tuple(cycle)
    # Range checks happen in the Lasso constructor
    Lasso(alphabet, prefix, cycle)

    cycle = _primitive_root(cycle)
    # Absorb trailing prefix symbols into a right rotation of the cycle
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    return Lasso(alphabet, prefix, cycle)


def is_canonical(x: Lasso) -> bool:
    return normalize(x.alphabet, x.prefix, x.cycle) == x


def entry(x: Lasso, i: int) -> int:
    """The i-th symbol (0-based) of the sequence x denotes."""
    return x.entry(i)


def shift_by(x: Lasso, k: int) -> Lasso:
    """Drop the first k symbols."""
    if k < 0:
        raise ValueError(f"shift amount must be >= 0, got {k}")
    if k <= len(x.prefix):
        return normalize(x.alphabet, x.prefix[k:], x.cycle)
    r = (k - len(x.prefix)) % len(x.cycle)
    return normalize(x.alphabet, (), x.cycle[r:] + x.cycle[:r])


def shift(x: Lasso) -> Lasso:
    """The left shift: entry(shift(x), i) == entry(x, i + 1)."""
    return shift_by(x, 1)


def leading_run(x: Lasso, symbols: Iterable[int]) -> Optional[int]:
    """Length of the initial run of entries whose symbol lies in `symbols`.

    Returns None when the run is infinite (every entry lies in the set).
    """
    symbols = frozenset(symbols)
    count = 0
    for s in x.prefix:
        if s not in symbols:
            return count
        count += 1
    if all(s in symbols for s in x.cycle):
        return None
    for s in x.cycle:
        if s not in symbols:
            return count
        count += 1
    return count  # unreachable: the cycle holds a symbol outside the set


def tail_index(x: Lasso, s: int, mode: str) -> Optional[int]:
    """Least k such that every entry at index >= k is equal to s (mode "all-equal")
    or different from s (mode "none-equal"); None when no such k exists.
    """
    if mode not in TAIL_MODES:
        raise ValueError(f"unknown tail mode {mode!r}, expected one of {TAIL_MODES}")
    if not 0 <= s < x.alphabet:
        raise ValueError(f"symbol {s} out of range for alphabet {x.alphabet}")

    def holds(sym: int) -> bool:
        return sym == s if mode == "all-equal" else sym != s

    if not all(holds(sym) for sym in x.cycle):
        return None
    for i in range(len(x.prefix) - 1, -1, -1):
        if not holds(x.prefix[i]):
            return i + 1
    return 0


def eventually_equal(x: Lasso, y: Lasso) -> bool:
    """True iff x and y agree from some index onward.

    Past both prefixes both sequences are periodic with period lcm of the cycle
    lengths, so one window of that length decides the question.
    """
    if x.alphabet != y.alphabet:
        raise ValueError(
            f"alphabet mismatch: {x.alphabet} vs {y.alphabet}"
        )
    start = max(len(x.prefix), len(y.prefix))
    window = lcm(len(x.cycle), len(y.cycle))
    return all(x.entry(i) == y.entry(i) for i in range(start, start + window))


def reinterpret(x: Lasso, alphabet: int) -> Lasso:
    """The same sequence viewed over another alphabet (symbols must fit)."""
    return normalize(alphabet, x.prefix, x.cycle)


def parse_lasso(text: str) -> Lasso:
    """Parse `<alphabet>:<p1,p2,...;c1,c2,...>`, e.g. `2:0;1` or `3:;2`."""
    raw = text.strip()
    if ":" not in raw:
        raise ValueError(f"lasso {text!r}: expected '<alphabet>:<prefix>;<cycle>'")
    alpha_tok, body = raw.split(":", 1)
    try:
        alphabet = int(alpha_tok)
    except ValueError:
        raise ValueError(f"lasso {text!r}: bad alphabet {alpha_tok!r}") from None
    if alphabet < 1:
        raise ValueError(f"lasso {text!r}: alphabet must be >= 1, got {alpha_tok!r}")
    if body.count(";") != 1:
        raise ValueError(f"lasso {text!r}: expected exactly one ';' in {body!r}")
    prefix_tok, cycle_tok = body.split(";")

    def symbols(part: str) -> tuple[int, ...]:
        if not part.strip():
            return ()
        out = []
        for tok in part.split(","):
            try:
                sym = int(tok)
            except ValueError:
                raise ValueError(f"lasso {text!r}: bad symbol {tok!r}") from None
            if not 0 <= sym < alphabet:
                raise ValueError(
                    f"lasso {text!r}: symbol {tok!r} out of range for alphabet {alphabet}"
                )
            out.append(sym)
        return tuple(out)

    prefix = symbols(prefix_tok)
    cycle = symbols(cycle_tok)
    if not cycle:
        raise ValueError(f"lasso {text!r}: empty cycle")
    return normalize(alphabet, prefix, cycle)


def format_lasso(x: Lasso) -> str:
    prefix = ",".join(str(s) for s in x.prefix)
    cycle = ",".join(str(s) for s in x.cycle)
    return f"{x.alphabet}:{prefix};{cycle}"


def primitive_words(alphabet: int, length: int) -> list[tuple[int, ...]]:
    return [w for w in product(range(alphabet), repeat=length)
            if _primitive_root(w) == w]


def enumerate_lassos(alphabet: int, max_prefix: int, max_cycle: int) -> list[Lasso]:
    """Every canonical lasso with |prefix| <= max_prefix and |cycle| <= max_cycle.

    Generated directly in canonical form: a primitive cycle, and a prefix that
    is empty or ends in a symbol different from the cycle's last symbol.
    """
    if alphabet < 1 or max_prefix < 0 or max_cycle < 1:
        raise ValueError(
            f"bad lasso range: alphabet={alphabet}, max_prefix={max_prefix}, "
            f"max_cycle={max_cycle}"
        )
    lassos = []
    for clen in range(1, max_cycle + 1):
        for cycle in primitive_words(alphabet, clen):
            for plen in range(0, max_prefix + 1):
                for prefix in product(range(alphabet), repeat=plen):
                    if prefix and prefix[-1] == cycle[-1]:
                        continue
                    lassos.append(Lasso(alphabet, prefix, cycle))
    return lassos


def shift_graph(alphabet: int, max_prefix: int,
                max_cycle: int) -> tuple[FiniteGraph, list[Lasso]]:
    """The shift graph restricted to enumerate_lassos(...).

    The vertex set is closed under shift, so every x in it has its edge to
    shift(x) (unless x is shift-fixed). labels[v] is the lasso at vertex v.
    """
    labels = enumerate_lassos(alphabet, max_prefix, max_cycle)
    index = {x: v for v, x in enumerate(labels)}
    edges = []
    for v, x in enumerate(labels):
        y = shift(x)
        if y != x:
            edges.append((v, index[y]))
    return FiniteGraph.from_edges(len(labels), edges), labels
