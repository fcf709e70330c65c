"""Constructive colouring procedures.

- shift3_color: explicit 3-colouring of the shift graph on n^omega
- hom_to_shift / transfer_3color: pull that colouring back along v -> (c(f^i(v)))
- mis_peel_color: peel maximal independent sets, at most max_degree + 1 colours
- two_color_acyclic: distance parity from a transversal
- palette_color: least colour that still extends to an optimal colouring
"""

import logging
from collections import deque
from functools import lru_cache

from descol.graphs import components, generate_graph, induced_subgraph
from descol.models import ComponentOrder, Coloring, FiniteGraph, FunctionFamilySpec, Lasso
from descol.seqspace import leading_run, normalize, reinterpret, shift_by, tail_index
from descol.solver import (
    chromatic_number, greedy_coloring, improper_edges, is_k_colorable, structure_checks,
)

log = logging.getLogger(__name__)

# Bound on memoised shift3_color results
SHIFT3_CACHE_SIZE = 1 << 16


def _finite_odd(run) -> bool:
    return run is not None and run % 2 == 1


def shift3_case(x: Lasso) -> str:
    """Which branch of shift3_color handles x: "a", "b", "c" or "d"."""
    if x.alphabet < 2:
        raise ValueError(f"alphabet must be >= 2, got {x.alphabet}")
    if x.alphabet == 2:
        return "a"
    top = x.alphabet - 1
    in_cycle = set(x.cycle)
    if top not in in_cycle:
        return "d"
    if in_cycle == {top}:
        return "c"
    return "b"


@lru_cache(maxsize=SHIFT3_CACHE_SIZE)
def shift3_color(x: Lasso) -> int:
    """Colour in {0, 1, 2}; x and shift(x) always differ unless x is shift-fixed.

    With top = alphabet - 1:
      a) alphabet 2: 0 if x opens with an odd run of 0s, 1 if with an odd run
         of 1s, else 2.
      b) top and non-top both recur: the same test with runs of top and of
         non-top symbols.
      c) x ends in top forever: tail index mod 2.
      d) top occurs finitely often: drop the first k = tail index symbols,
         colour the rest over the smaller alphabet, add k mod 3.
    """
    case = shift3_case(x)
    top = x.alphabet - 1
    if case == "a":
        if _finite_odd(leading_run(x, {0})):
            return 0
        if _finite_odd(leading_run(x, {1})):
            return 1
        return 2
    if case == "b":
        if _finite_odd(leading_run(x, {top})):
            return 0
        if _finite_odd(leading_run(x, range(top))):
            return 1
        return 2
    if case == "c":
        return tail_index(x, top, "all-equal") % 2
    k = tail_index(x, top, "none-equal")
    inner = reinterpret(shift_by(x, k), x.alphabet - 1)
    return (shift3_color(inner) + k) % 3


def _orbit_lasso(spec: FunctionFamilySpec, c: Coloring, v: int, alphabet: int) -> Lasso:
    f = spec.functions[0]
    seen: dict[int, int] = {}
    trajectory = []
    while v not in seen:
        seen[v] = len(trajectory)
        trajectory.append(v)
        v = f[v]
    start = seen[v]
    colours = [c[w] for w in trajectory]
    return normalize(alphabet, colours[:start], colours[start:])


def _single_function(spec: FunctionFamilySpec) -> None:
    if len(spec.functions) != 1:
        raise ValueError(
            f"expected exactly one function, got {len(spec.functions)}"
        )


def hom_to_shift(spec: FunctionFamilySpec, c: Coloring, v: int) -> Lasso:
    """The lasso (c(v), c(f(v)), c(f^2(v)), ...) over alphabet c.num_colours.

    The orbit of v enters a cycle within vertex_count steps, so the sequence
    is eventually periodic.
    """
    _single_function(spec)
    if not 0 <= v < spec.vertex_count:
        raise ValueError(f"vertex {v} out of range for {spec.vertex_count} vertices")
    bad = improper_edges(generate_graph(spec), c)
    if bad:
        u, w = bad[0]
        raise ValueError(f"colouring is improper: edge ({u}, {w}) is monochromatic")
    return _orbit_lasso(spec, c, v, max(1, c.num_colours))


def transfer_3color(spec: FunctionFamilySpec) -> Coloring:
    """3-colouring of the graph generated by one function, via the shift graph.

    Starts from the first-fit colouring, maps each vertex to its orbit colour
    sequence and reads off shift3_color. The alphabet is at least 2.
    """
    _single_function(spec)
    g = generate_graph(spec)
    base = greedy_coloring(g)
    alphabet = max(2, base.num_colours)
    log.debug("transfer_3color: %d vertices, base colouring uses %d colours",
              spec.vertex_count, base.num_colours)
    return Coloring(tuple(
        shift3_color(_orbit_lasso(spec, base, v, alphabet))
        for v in range(spec.vertex_count)
    ))


def mis_peel(g: FiniteGraph) -> list[list[int]]:
    """Repeatedly remove a maximal independent set, chosen greedily in ascending order."""
    remaining = set(range(g.vertex_count))
    peeled = []
    while remaining:
        chosen: list[int] = []
        blocked: set[int] = set()
        for v in sorted(remaining):
            if v not in blocked:
                chosen.append(v)
                blocked |= g.adjacency[v]
        remaining -= set(chosen)
        peeled.append(chosen)
    return peeled


def mis_peel_color(g: FiniteGraph) -> Coloring:
    """Colour i goes to the i-th peeled set; uses at most max_degree + 1 colours."""
    colours = [0] * g.vertex_count
    for i, layer in enumerate(mis_peel(g)):
        for v in layer:
            colours[v] = i
    return Coloring(tuple(colours))


def two_color_acyclic(g: FiniteGraph, transversal) -> Coloring:
    """Colour each vertex by the parity of its distance to its component's transversal vertex."""
    if not structure_checks(g)["acyclic"]:
        raise ValueError("graph has a cycle")
    co = components(g)
    transversal = list(transversal)
    for v in transversal:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"transversal vertex {v} out of range")
    hit = sorted(co.component_id[v] for v in transversal)
    expected = list(range(len(co.blocks())))
    if hit != expected:
        raise ValueError(
            "transversal must contain exactly one vertex of each component"
        )

    colours = [-1] * g.vertex_count
    for root in transversal:
        colours[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if colours[w] < 0:
                    colours[w] = 1 - colours[v]
                    queue.append(w)
    return Coloring(tuple(colours))


def palette_color(g: FiniteGraph, co: ComponentOrder) -> Coloring:
    """Optimal colouring built vertex by vertex in the component order.

    Each vertex takes the least colour n < chi(g) such that the colours fixed
    so far in its component, plus n at this vertex, still extend to a proper
    chi(g)-colouring of the component.
    """
    chi = chromatic_number(g).chi
    colours = [-1] * g.vertex_count
    for block in co.blocks():
        sub, original = induced_subgraph(g, block)
        local = {v: i for i, v in enumerate(original)}
        pins: dict[int, int] = {}
        for v in block:
            for n in range(chi):
                trial = dict(pins)
                trial[local[v]] = n
                if is_k_colorable(sub, chi, trial) is not None:
                    pins = trial
                    colours[v] = n
                    break
            else:
                raise ValueError(f"no completable colour for vertex {v}")
    return Coloring(tuple(colours))
