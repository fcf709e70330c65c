"""Dense threads, finite levels of G_s, the G_1 relation and prefix obstructions.

Level-k vertices are the binary strings of length k, encoded as integers
with the most significant bit at index 0. For a thread s, strings a and b
are adjacent at level k when, for some j < k, both start with s_j, differ at
index j, and agree at every index after j.
"""

import random
from itertools import product
from typing import Optional

from descol.models import DenseThread, FiniteGraph, Lasso, LevelGraph, Obstruction
from descol.seqspace import eventually_equal, normalize

FAMILIES = ("g0", "g1")


def bitstring(v: int, k: int) -> str:
    return format(v, f"0{k}b") if k else ""


def vertex_of(bits: str) -> int:
    return int(bits, 2) if bits else 0


def _length_lex(k: int) -> str:
    """The k-th binary string in length-then-lexicographic order (0 -> empty)."""
    m = (k + 1).bit_length() - 1
    j = k - (2 ** m - 1)
    return bitstring(j, m)


def canonical_thread(depth: int) -> DenseThread:
    """s_k is the k-th string of the length-lex enumeration, padded with 0s to length k."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    rows = []
    for k in range(depth):
        t = _length_lex(k)
        rows.append(t + "0" * (k - len(t)))
    return DenseThread(tuple(rows))


def random_thread(depth: int, rng: random.Random) -> DenseThread:
    """Like canonical_thread but padded with random bits; still dense up to depth."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    rows = []
    for k in range(depth):
        t = _length_lex(k)
        rows.append(t + "".join(rng.choice("01") for _ in range(k - len(t))))
    return DenseThread(tuple(rows))


def achievable_length(depth: int) -> int:
    """Largest L whose strings all count as density violations at this depth.

    This is the depth at which the length-lex enumeration has covered every
    string of length L, so canonical threads validate clean at every depth.
    A thread can cover length L from depth 2^L + L on; strings it misses
    between the two bounds are reported as pending, not undominated.
    """
    L = 0
    while 2 ** (L + 2) - 2 <= depth - 1:
        L += 1
    return L


def validate_thread(t: DenseThread) -> dict:
    """Check one row per length and density up to the depth.

    Returns dict with:
    - valid: bool (no structural errors and nothing undominated)
    - errors: structural problems (wrong length, non-binary row)
    - undominated: strings of length <= achievable_length not a prefix of any row
    - pending: longer strings (below depth) not yet dominated; these only
      need more depth
    - achievable_length
    """
    errors = []
    if t.depth < 1:
        errors.append("thread has no rows")
    for k, row in enumerate(t.rows):
        if len(row) != k:
            errors.append(f"row {k} has length {len(row)}, expected {k}")
        if set(row) - {"0", "1"}:
            errors.append(f"row {k} is not a binary string: {row!r}")

    limit = achievable_length(t.depth) if t.depth >= 1 else 0
    undominated: list[str] = []
    pending: list[str] = []
    if not errors:
        dominated = set()
        for row in t.rows:
            for i in range(len(row) + 1):
                dominated.add(row[:i])
        for length in range(t.depth):
            for bits in product("01", repeat=length):
                a = "".join(bits)
                if a in dominated:
                    continue
                (undominated if length <= limit else pending).append(a)

    return {
        "valid": not errors and not undominated,
        "errors": errors,
        "undominated": undominated,
        "pending": pending,
        "achievable_length": limit,
    }


def level_graph(t: DenseThread, k: int) -> LevelGraph:
    """Level k of G_s: for each j < k and each tail w, the edge (s_j 0 w, s_j 1 w)."""
    if not 0 <= k < t.depth:
        raise ValueError(f"level {k} out of range for thread depth {t.depth}")
    for j in range(k):
        if len(t.rows[j]) != j:
            raise ValueError(f"row {j} has length {len(t.rows[j])}, expected {j}")
    edges = []
    for j in range(k):
        s_j = t.rows[j]
        for tail in product("01", repeat=k - j - 1):
            w = "".join(tail)
            edges.append((vertex_of(s_j + "0" + w), vertex_of(s_j + "1" + w)))
    return LevelGraph(k, FiniteGraph.from_edges(2 ** k, edges))


def g1_adjacent(x: Lasso, y: Lasso) -> bool:
    """x != y and x, y agree from some index on."""
    for z in (x, y):
        if z.alphabet != 2:
            raise ValueError(f"G_1 lives on 2^omega, got alphabet {z.alphabet}")
    return x != y and eventually_equal(x, y)


def g1_clique(d: int) -> list[Lasso]:
    """The 2^d points a.0^omega with |a| = d; any two are G_1-adjacent."""
    if d < 0:
        raise ValueError(f"depth must be >= 0, got {d}")
    return [normalize(2, bits, (0,)) for bits in product((0, 1), repeat=d)]


def g1_graph(lassos) -> FiniteGraph:
    """G_1 restricted to a finite list of points; vertex i is lassos[i]."""
    lassos = list(lassos)
    edges = [
        (i, j)
        for i in range(len(lassos))
        for j in range(i + 1, len(lassos))
        if g1_adjacent(lassos[i], lassos[j])
    ]
    return FiniteGraph.from_edges(len(lassos), edges)


def prefix_obstruction(family: str, d: int, m: int,
                       thread: Optional[DenseThread] = None) -> Obstruction:
    """Adjacent pair sharing its first d coordinates.

    Any colouring that only looks at the first d coordinates gives both
    vertices the same colour, whatever the number of colours m.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if d < 0:
        raise ValueError(f"depth must be >= 0, got {d}")
    if m < 1:
        raise ValueError(f"colour count must be >= 1, got {m}")

    if family == "g1":
        x = Lasso(2, (), (0,))
        y = normalize(2, (0,) * d + (1,), (0,))
        return Obstruction("g1", d, m, x, y)

    if thread is None:
        thread = canonical_thread(d + 2)
    if thread.depth <= d + 1:
        raise ValueError(
            f"thread depth {thread.depth} too shallow for obstruction depth {d}"
        )
    s_d = thread.rows[d]
    return Obstruction("g0", d, m, s_d + "0", s_d + "1", level=d + 1)


def check_obstruction(w: Obstruction, thread: Optional[DenseThread] = None) -> bool:
    """The witness pair is adjacent and agrees on the first w.depth coordinates."""
    if w.family == "g1":
        same_prefix = all(w.first.entry(i) == w.second.entry(i) for i in range(w.depth))
        return same_prefix and g1_adjacent(w.first, w.second)
    if thread is None:
        thread = canonical_thread(w.depth + 2)
    level = level_graph(thread, w.level)
    same_prefix = w.first[:w.depth] == w.second[:w.depth]
    return same_prefix and level.graph.has_edge(vertex_of(w.first), vertex_of(w.second))
