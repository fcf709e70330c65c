"""Finite graphs, function-generated graphs and component machinery."""

from collections import deque

import networkx as nx

from descol.models import ComponentOrder, FiniteGraph, FunctionFamilySpec


def generate_graph(spec: FunctionFamilySpec) -> FiniteGraph:
    """The graph generated by the family: v ~ w iff v != w and some f_i maps one to the other."""
    edges = set()
    for f in spec.functions:
        for v, w in enumerate(f):
            if v != w:
                edges.add((min(v, w), max(v, w)))
    return FiniteGraph(spec.vertex_count, frozenset(edges))


def components(g: FiniteGraph) -> ComponentOrder:
    """Components indexed by their minimum vertex, each listed in BFS order.

    BFS starts at the component's minimum vertex and explores neighbours in
    ascending order.
    """
    component_id = [-1] * g.vertex_count
    order: list[int] = []
    next_id = 0
    for root in range(g.vertex_count):
        if component_id[root] >= 0:
            continue
        component_id[root] = next_id
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.adjacency[v]):
                if component_id[w] < 0:
                    component_id[w] = next_id
                    queue.append(w)
        next_id += 1
    return ComponentOrder(tuple(order), tuple(component_id))


def component_rank(co: ComponentOrder, v: int) -> int:
    """Number of vertices of v's component that precede v in the order."""
    if not 0 <= v < len(co.component_id):
        raise ValueError(f"vertex {v} out of range for {len(co.component_id)} vertices")
    cid = co.component_id[v]
    rank = 0
    for w in co.order:
        if w == v:
            return rank
        if co.component_id[w] == cid:
            rank += 1
    raise ValueError(f"vertex {v} missing from the order")


def component_transversal(co: ComponentOrder) -> list[int]:
    """The minimum vertex of each component, by component index."""
    return [min(block) for block in co.blocks()]


def induced_subgraph(g: FiniteGraph, vertices) -> tuple[FiniteGraph, list[int]]:
    """Subgraph on `vertices`, relabelled 0..m-1 in the given order.

    Returns (subgraph, original) where original[i] is the vertex of g behind i.
    """
    original = list(vertices)
    local = {v: i for i, v in enumerate(original)}
    edges = [
        (local[u], local[v]) for u, v in g.edges
        if u in local and v in local
    ]
    return FiniteGraph.from_edges(len(original), edges), original


def is_homomorphism(g: FiniteGraph, h: FiniteGraph, mapping) -> bool:
    """True iff mapping (vertex of g -> vertex of h) sends every edge of g to an edge of h."""
    mapping = tuple(mapping)
    if len(mapping) != g.vertex_count:
        raise ValueError(
            f"mapping covers {len(mapping)} of {g.vertex_count} vertices"
        )
    for v, w in enumerate(mapping):
        if not 0 <= w < h.vertex_count:
            raise ValueError(f"vertex {v} maps to {w}, outside the target graph")
    return all(
        mapping[u] != mapping[v] and h.has_edge(mapping[u], mapping[v])
        for u, v in g.edges
    )


# ---------------------------------------------------------------------------
# Edge-covering families
# ---------------------------------------------------------------------------

def _edge_colouring(g: FiniteGraph) -> dict[tuple[int, int], int]:
    """Proper edge colouring with at most max_degree + 1 colours.

    Misra-Gries: colour edges one at a time; when no colour is free at both
    ends, build a fan at one endpoint, flip an alternating c/d path and rotate
    the fan.
    """
    palette = range(g.max_degree + 1)
    colour: dict[tuple[int, int], int] = {}

    def key(u, v):
        return (u, v) if u < v else (v, u)

    def colour_at(u, v):
        return colour.get(key(u, v))

    def is_free(c, x):
        return all(colour_at(x, w) != c for w in g.adjacency[x])

    def first_free(x):
        return next(c for c in palette if is_free(c, x))

    def is_fan(u, fan):
        if colour_at(u, fan[0]) is not None:
            return False
        return all(
            colour_at(u, fan[j]) is not None and is_free(colour_at(u, fan[j]), fan[j - 1])
            for j in range(1, len(fan))
        )

    for u, v in g.sorted_edges():
        fan = [v]
        grown = True
        while grown:
            grown = False
            for w in sorted(g.adjacency[u]):
                c_uw = colour_at(u, w)
                if w not in fan and c_uw is not None and is_free(c_uw, fan[-1]):
                    fan.append(w)
                    grown = True
                    break

        c = first_free(u)
        d = first_free(fan[-1])

        # Invert the cd-path that leaves u along its d-coloured edge
        if c != d:
            path = []
            x, want = u, d
            while True:
                nxt = next((w for w in g.adjacency[x] if colour_at(x, w) == want), None)
                if nxt is None:
                    break
                path.append(key(x, nxt))
                x, want = nxt, (c if want == d else d)
            for e in path:
                colour[e] = c if colour[e] == d else d

        w_idx = next(
            i for i in range(len(fan))
            if is_free(d, fan[i]) and is_fan(u, fan[:i + 1])
        )
        for i in range(w_idx):
            colour[key(u, fan[i])] = colour[key(u, fan[i + 1])]
        colour[key(u, fan[w_idx])] = d

    return colour


def covering_family(g: FiniteGraph) -> FunctionFamilySpec:
    """A family where every edge is mapped both ways by some function.

    Each colour class of a proper edge colouring is a matching; swapping the
    matched endpoints and fixing every other vertex gives one function.
    """
    colour = _edge_colouring(g)
    used = sorted(set(colour.values()))
    functions = []
    for c in used:
        f = list(range(g.vertex_count))
        for (u, v), cu in colour.items():
            if cu == c:
                f[u] = v
                f[v] = u
        functions.append(tuple(f))
    return FunctionFamilySpec(g.vertex_count, tuple(functions))


# ---------------------------------------------------------------------------
# Uniformisation of the generated relation
# ---------------------------------------------------------------------------

def uniformize_stages(spec: FunctionFamilySpec) -> list[frozenset[tuple[int, int]]]:
    """Cumulative stages A_0, A_1, ... of the least-index selection.

    A_0 holds (x, f_0(x)) for f_0(x) != x; A_{i+1} adds (x, f_{i+1}(x)) for
    the x moved by f_{i+1} and fixed by every earlier function.
    """
    stages = []
    current: set[tuple[int, int]] = set()
    for i, f in enumerate(spec.functions):
        for x in range(spec.vertex_count):
            if f[x] != x and all(spec.functions[k][x] == x for k in range(i)):
                current.add((x, f[x]))
        stages.append(frozenset(current))
    return stages


def uniformize(spec: FunctionFamilySpec) -> frozenset[tuple[int, int]]:
    """For each x moved by some function, the pair (x, f_i(x)) with i least."""
    stages = uniformize_stages(spec)
    return stages[-1] if stages else frozenset()


# ---------------------------------------------------------------------------
# networkx bridges
# ---------------------------------------------------------------------------

def to_networkx(g: FiniteGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def from_networkx(G: nx.Graph) -> FiniteGraph:
    """Relabel nodes 0..n-1 in sorted node order."""
    nodes = sorted(G.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return FiniteGraph.from_edges(
        len(nodes), ((index[a], index[b]) for a, b in G.edges())
    )
