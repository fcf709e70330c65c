"""Text file formats: DIMACS-like graphs, function families, threads, colourings.

Vertices are 1-based in every file and 0-based in memory.
"""

from descol.models import Coloring, DenseThread, FiniteGraph, FunctionFamilySpec, LevelGraph


def _int_token(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"line {lineno}: bad {what} {tok!r}") from None


def _content_lines(text: str):
    """Yield (lineno, tokens) for non-blank, non-comment lines."""
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        yield lineno, tokens


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> FiniteGraph:
    """Parse `p edge <n> <m>` followed by m lines `e <u> <v>`."""
    n = None
    declared_edges = 0
    edges: set[tuple[int, int]] = set()
    for lineno, tokens in _content_lines(text):
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: second 'p' line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ValueError(
                    f"line {lineno}: expected 'p edge <n> <m>', got {' '.join(tokens)!r}"
                )
            n = _int_token(tokens[2], lineno, "vertex count")
            declared_edges = _int_token(tokens[3], lineno, "edge count")
            if n < 0 or declared_edges < 0:
                raise ValueError(f"line {lineno}: negative count in {' '.join(tokens)!r}")
        elif kind == "e":
            if n is None:
                raise ValueError(f"line {lineno}: 'e' line before 'p' line")
            if len(tokens) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            u = _int_token(tokens[1], lineno, "vertex")
            v = _int_token(tokens[2], lineno, "vertex")
            for tok, x in ((tokens[1], u), (tokens[2], v)):
                if not 1 <= x <= n:
                    raise ValueError(f"line {lineno}: vertex {tok!r} out of range 1..{n}")
            if u == v:
                raise ValueError(f"line {lineno}: self-loop at vertex {tokens[1]!r}")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                raise ValueError(f"line {lineno}: duplicate edge {u} {v}")
            edges.add(key)
        else:
            raise ValueError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise ValueError("missing 'p edge <n> <m>' line")
    if len(edges) != declared_edges:
        raise ValueError(
            f"header declares {declared_edges} edges but {len(edges)} were given"
        )
    return FiniteGraph(n, frozenset(edges))


def format_graph(g: FiniteGraph, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def format_level_graph(level: LevelGraph) -> str:
    """Level graph with one `c vertex <id> = <bitstring>` comment per vertex."""
    comments = [f"level {level.k}"]
    comments.extend(
        f"vertex {v + 1} = {level.label(v)}" for v in range(level.graph.vertex_count)
    )
    return format_graph(level.graph, comments)


# ---------------------------------------------------------------------------
# Function families
# ---------------------------------------------------------------------------

def parse_functions(text: str) -> FunctionFamilySpec:
    """Parse lines `f <i> <u> <v>` (function i maps u to v).

    An optional `p functions <n> <count>` header fixes the vertex and function
    counts; otherwise they are the largest indices mentioned. Every (i, u)
    pair must appear exactly once.
    """
    header = None
    entries: dict[tuple[int, int], int] = {}
    for lineno, tokens in _content_lines(text):
        kind = tokens[0]
        if kind == "p":
            if len(tokens) != 4 or tokens[1] != "functions":
                raise ValueError(
                    f"line {lineno}: expected 'p functions <n> <count>'"
                )
            header = (_int_token(tokens[2], lineno, "vertex count"),
                      _int_token(tokens[3], lineno, "function count"))
        elif kind == "f":
            if len(tokens) != 4:
                raise ValueError(f"line {lineno}: expected 'f <i> <u> <v>'")
            i = _int_token(tokens[1], lineno, "function index")
            u = _int_token(tokens[2], lineno, "vertex")
            v = _int_token(tokens[3], lineno, "vertex")
            for tok, x in zip(tokens[1:], (i, u, v)):
                if x < 1:
                    raise ValueError(f"line {lineno}: index {tok!r} must be >= 1")
            if (i, u) in entries:
                raise ValueError(
                    f"line {lineno}: function {i} maps vertex {u} twice"
                )
            entries[(i, u)] = v
        else:
            raise ValueError(f"line {lineno}: unknown line type {kind!r}")

    if header is not None:
        n, count = header
    else:
        n = max((max(u, v) for (_, u), v in entries.items()), default=0)
        count = max((i for i, _ in entries), default=0)
    for (i, u), v in entries.items():
        if i > count or u > n or v > n:
            raise ValueError(f"entry 'f {i} {u} {v}' exceeds {count} functions on {n} vertices")

    functions = []
    for i in range(1, count + 1):
        f = []
        for u in range(1, n + 1):
            if (i, u) not in entries:
                raise ValueError(f"function {i} is not total: vertex {u} has no image")
            f.append(entries[(i, u)] - 1)
        functions.append(tuple(f))
    return FunctionFamilySpec(n, tuple(functions))


def format_functions(spec: FunctionFamilySpec) -> str:
    lines = [f"p functions {spec.vertex_count} {len(spec.functions)}"]
    for i, f in enumerate(spec.functions, 1):
        lines.extend(f"f {i} {u + 1} {v + 1}" for u, v in enumerate(f))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Threads
# ---------------------------------------------------------------------------

def parse_thread(text: str) -> DenseThread:
    """Line k holds s_k as a 0/1 string; line 0 is empty."""
    if not text:
        raise ValueError("thread file is empty")
    rows = text.split("\n")
    if rows[-1] == "":
        rows.pop()
    rows = [r.rstrip("\r") for r in rows]
    for k, row in enumerate(rows):
        if set(row) - {"0", "1"}:
            raise ValueError(f"line {k + 1}: not a binary string: {row!r}")
    return DenseThread(tuple(rows))


def format_thread(t: DenseThread) -> str:
    return "\n".join(t.rows) + "\n"


# ---------------------------------------------------------------------------
# Colourings
# ---------------------------------------------------------------------------

def parse_coloring(text: str, vertex_count: int) -> Coloring:
    """Parse lines `<vertex> <colour>`; every vertex 1..vertex_count needs exactly one."""
    mapping: dict[int, int] = {}
    for lineno, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <colour>'")
        v = _int_token(tokens[0], lineno, "vertex")
        c = _int_token(tokens[1], lineno, "colour")
        if not 1 <= v <= vertex_count:
            raise ValueError(f"line {lineno}: vertex {tokens[0]!r} out of range 1..{vertex_count}")
        if c < 0:
            raise ValueError(f"line {lineno}: negative colour {tokens[1]!r}")
        if v - 1 in mapping:
            raise ValueError(f"line {lineno}: vertex {v} coloured twice")
        mapping[v - 1] = c
    return Coloring.from_mapping(mapping, vertex_count)


def format_coloring(c: Coloring) -> str:
    return "".join(f"{v + 1} {colour}\n" for v, colour in enumerate(c.colours))
