"""Exact chromatic numbers, colourability and completability queries.

All tie-breaks go by ascending vertex or colour index, so every query
returns the same witness on every run.
"""

import logging
from collections import Counter
from itertools import product
from typing import Optional

import networkx as nx

from descol.graphs import to_networkx
from descol.models import ChiResult, Coloring, FiniteGraph

log = logging.getLogger(__name__)

BRUTE_FORCE_MAX_VERTICES = 8


def _check_total(g: FiniteGraph, c: Coloring) -> None:
    if len(c) != g.vertex_count:
        raise ValueError(
            f"colouring is partial: {len(c)} colours for {g.vertex_count} vertices"
        )


def improper_edges(g: FiniteGraph, c: Coloring) -> list[tuple[int, int]]:
    """Edges whose endpoints share a colour, sorted."""
    _check_total(g, c)
    return [(u, v) for u, v in g.sorted_edges() if c[u] == c[v]]


def is_proper(g: FiniteGraph, c: Coloring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    return not improper_edges(g, c)


def greedy_coloring(g: FiniteGraph, order=None) -> Coloring:
    """First-fit: each vertex, in order, takes the least colour unused by coloured neighbours."""
    order = list(range(g.vertex_count) if order is None else order)
    colours = nx.greedy_color(to_networkx(g), strategy=lambda G, colors: iter(order))
    return Coloring.from_mapping(colours, g.vertex_count)


def greedy_clique(g: FiniteGraph) -> tuple[int, ...]:
    """A clique grown greedily from each vertex; the largest one found."""
    best: tuple[int, ...] = ()
    by_degree = sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))
    for start in by_degree:
        if g.degree(start) + 1 <= len(best):
            break
        clique = [start]
        candidates = set(g.adjacency[start])
        while candidates:
            v = min(candidates, key=lambda w: (-g.degree(w), w))
            clique.append(v)
            candidates &= g.adjacency[v]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def is_k_colorable(g: FiniteGraph, k: int,
                   pinned: Optional[dict[int, int]] = None) -> Optional[Coloring]:
    """A proper k-colouring extending `pinned`, or None if none exists.

    Backtracking over the most constrained vertex (most distinct neighbour
    colours, then highest degree, then lowest index). Colours nobody uses yet
    are interchangeable, so only the lowest of them is ever tried.
    """
    pinned = dict(pinned or {})
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    for v, c in pinned.items():
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"pinned vertex {v} out of range")
        if not 0 <= c < k:
            raise ValueError(f"pinned colour {c} for vertex {v} not below k={k}")

    n = g.vertex_count
    adj = g.adjacency
    colours = [-1] * n
    usage = [0] * k
    seen: list[Counter] = [Counter() for _ in range(n)]

    def assign(v, c):
        colours[v] = c
        usage[c] += 1
        for w in adj[v]:
            seen[w][c] += 1

    def unassign(v):
        c = colours[v]
        colours[v] = -1
        usage[c] -= 1
        for w in adj[v]:
            seen[w][c] -= 1
            if not seen[w][c]:
                del seen[w][c]

    for v, c in sorted(pinned.items()):
        if seen[v][c]:
            return None
        assign(v, c)

    uncoloured = {v for v in range(n) if colours[v] < 0}
    if uncoloured and k == 0:
        return None

    # Explicit stack of [vertex, next colour to try, fresh colour tried]
    stack: list[list] = []
    while uncoloured:
        v = max(uncoloured, key=lambda u: (len(seen[u]), len(adj[u]), -u))
        uncoloured.discard(v)
        stack.append([v, 0, False])
        while stack:
            frame = stack[-1]
            v, start, fresh_tried = frame
            if colours[v] >= 0:
                unassign(v)
            chosen = None
            for c in range(start, k):
                if c in seen[v]:
                    continue
                if not usage[c]:
                    if fresh_tried:
                        continue
                    fresh_tried = True
                chosen = c
                break
            if chosen is None:
                stack.pop()
                uncoloured.add(v)
                continue
            frame[1] = chosen + 1
            frame[2] = fresh_tried
            assign(v, chosen)
            break
        else:
            return None
    return Coloring(tuple(colours))


def chromatic_number(g: FiniteGraph) -> ChiResult:
    """Least k with a proper k-colouring, bracketed by a greedy clique and greedy colouring."""
    if g.vertex_count == 0:
        return ChiResult(0, Coloring(()), ())

    clique = greedy_clique(g)
    upper = greedy_coloring(g)
    lower = max(1, len(clique))
    log.debug("chromatic_number: n=%d lower=%d upper=%d",
              g.vertex_count, lower, upper.num_colours)

    witness = upper
    chi = upper.num_colours
    for k in range(lower, upper.num_colours):
        log.debug("chromatic_number: trying k=%d", k)
        found = is_k_colorable(g, k, pinned={0: 0})
        if found is not None:
            witness, chi = found, k
            break

    certificate = clique if len(clique) == chi else None
    return ChiResult(chi, witness, certificate)


def brute_force_chi(g: FiniteGraph,
                    max_vertices: int = BRUTE_FORCE_MAX_VERTICES) -> int:
    """Least k by trying all k^n assignments, k ascending. Reference oracle only."""
    n = g.vertex_count
    if n > max_vertices:
        raise ValueError(
            f"brute force supports at most {max_vertices} vertices, got {n}"
        )
    if n == 0:
        return 0
    edges = g.sorted_edges()
    # Vertex 0 takes colour 0 in some optimal colouring
    for k in range(1, n + 1):
        for rest in product(range(k), repeat=n - 1):
            assignment = (0,) + rest
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    return n


def structure_checks(g: FiniteGraph) -> dict:
    """Acyclicity, bipartiteness, connectivity, max degree and degeneracy.

    The null graph counts as acyclic, bipartite and connected.
    """
    if g.vertex_count == 0:
        return {"acyclic": True, "bipartite": True, "connected": True,
                "max_degree": 0, "degeneracy": 0}
    G = to_networkx(g)
    return {
        "acyclic": nx.is_forest(G),
        "bipartite": nx.is_bipartite(G),
        "connected": nx.is_connected(G),
        "max_degree": g.max_degree,
        "degeneracy": max(nx.core_number(G).values(), default=0),
    }


def to_dimacs_cnf(g: FiniteGraph, k: int,
                  pinned: Optional[dict[int, int]] = None) -> str:
    """Direct encoding of k-colourability: variable v*k + c + 1 means "v has colour c"."""
    pinned = dict(pinned or {})
    for v, c in pinned.items():
        if not 0 <= c < k:
            raise ValueError(f"pinned colour {c} for vertex {v} not below k={k}")

    def var(v, c):
        return v * k + c + 1

    clauses: list[list[int]] = []
    for v in range(g.vertex_count):
        clauses.append([var(v, c) for c in range(k)])
        for c1 in range(k):
            for c2 in range(c1 + 1, k):
                clauses.append([-var(v, c1), -var(v, c2)])
    for u, v in g.sorted_edges():
        for c in range(k):
            clauses.append([-var(u, c), -var(v, c)])
    for v, c in sorted(pinned.items()):
        clauses.append([var(v, c)])

    lines = [
        f"c {k}-colouring of a graph with {g.vertex_count} vertices "
        f"and {g.edge_count} edges",
        f"p cnf {g.vertex_count * k} {len(clauses)}",
    ]
    lines.extend(" ".join(str(lit) for lit in cl) + " 0" for cl in clauses)
    return "\n".join(lines) + "\n"
