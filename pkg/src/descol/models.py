"""Data models for the descol colouring workbench."""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional


@dataclass(frozen=True)
class Lasso:
    """An eventually periodic point of alphabet^omega: prefix then cycle forever.

    Use seqspace.normalize to build canonical instances; the constructor only
    checks ranges, not canonicity.
    """
    alphabet: int
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        if self.alphabet < 1:
            raise ValueError(f"alphabet must be >= 1, got {self.alphabet}")
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        for s in self.prefix + self.cycle:
            if not 0 <= s < self.alphabet:
                raise ValueError(
                    f"symbol {s} out of range for alphabet {self.alphabet}"
                )

    def entry(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"index must be >= 0, got {i}")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]


@dataclass(frozen=True)
class FiniteGraph:
    """A simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as sorted (u, v) pairs with u < v.
    """
    vertex_count: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be >= 0, got {self.vertex_count}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not u < v:
                raise ValueError(f"edge ({u}, {v}) is not stored as u < v")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {self.vertex_count} vertices"
                )

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "FiniteGraph":
        """Build a graph from any iterable of vertex pairs (either orientation)."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(normalized))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self.adjacency), default=0)


@dataclass(frozen=True)
class FunctionFamilySpec:
    """A finite list of total maps on 0..vertex_count-1 (function i is functions[i])."""
    vertex_count: int
    functions: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be >= 0, got {self.vertex_count}")
        for i, f in enumerate(self.functions):
            if len(f) != self.vertex_count:
                raise ValueError(
                    f"function {i} is not total: defined on {len(f)} of "
                    f"{self.vertex_count} vertices"
                )
            for v, w in enumerate(f):
                if not 0 <= w < self.vertex_count:
                    raise ValueError(f"function {i} maps {v} to out-of-range {w}")


@dataclass(frozen=True)
class ComponentOrder:
    """A vertex order in which each connected component is a contiguous block."""
    order: tuple[int, ...]
    component_id: tuple[int, ...]

    def blocks(self) -> list[tuple[int, ...]]:
        """Vertices of each component, in order, one tuple per component."""
        result: list[list[int]] = []
        for v in self.order:
            cid = self.component_id[v]
            if cid == len(result):
                result.append([])
            result[cid].append(v)
        return [tuple(b) for b in result]


@dataclass(frozen=True)
class DenseThread:
    """Candidate dense thread: rows[k] should be a 0/1 string of length k.

    Structure is not enforced here; thread.validate_thread reports problems.
    """
    rows: tuple[str, ...]

    @property
    def depth(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LevelGraph:
    """The finite level k of G_s: vertices are the 2^k binary strings of length k."""
    k: int
    graph: FiniteGraph

    def label(self, v: int) -> str:
        return format(v, f"0{self.k}b") if self.k else ""


@dataclass(frozen=True)
class Coloring:
    """A total assignment vertex -> colour index (colours[v] is the colour of v)."""
    colours: tuple[int, ...]

    def __post_init__(self):
        for v, c in enumerate(self.colours):
            if c < 0:
                raise ValueError(f"vertex {v} has negative colour {c}")

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], vertex_count: int) -> "Coloring":
        missing = [v for v in range(vertex_count) if v not in mapping]
        if missing:
            raise ValueError(
                f"colouring is partial: vertex {missing[0]} has no colour"
            )
        extra = [v for v in mapping if not 0 <= v < vertex_count]
        if extra:
            raise ValueError(f"colouring names unknown vertex {extra[0]}")
        return cls(tuple(mapping[v] for v in range(vertex_count)))

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    @property
    def num_colours(self) -> int:
        """Size of the colour range in use: max colour + 1."""
        return max(self.colours, default=-1) + 1

    @property
    def distinct_colours(self) -> int:
        return len(set(self.colours))


@dataclass(frozen=True)
class ChiResult:
    """Exact chromatic number with a witness colouring and optional clique certificate."""
    chi: int
    witness: Coloring
    lower_bound_certificate: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class Obstruction:
    """Two adjacent vertices sharing a depth-d prefix.

    For family "g0" the vertices are bitstrings at the given level; for "g1"
    they are lassos over alphabet 2 and level is None.
    """
    family: str
    depth: int
    colours: int
    first: str | Lasso
    second: str | Lasso
    level: Optional[int] = None
