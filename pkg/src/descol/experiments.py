"""Property batteries: each checks one colouring result on many finite instances.

Every battery returns a dict with:
- name: battery name
- ok: True when nothing failed
- checked: number of instances (or pairs) examined
- failures: one message per failed instance
- details: battery-specific counters
"""

import logging
import random
from itertools import combinations

import networkx as nx

from descol.colorings import (
    hom_to_shift, mis_peel, mis_peel_color, palette_color, shift3_case, shift3_color,
    transfer_3color,
)
from descol.graphs import (
    components, covering_family, from_networkx, generate_graph, uniformize,
)
from descol.models import FiniteGraph, FunctionFamilySpec
from descol.seqspace import enumerate_lassos, shift
from descol.solver import (
    BRUTE_FORCE_MAX_VERTICES, brute_force_chi, chromatic_number, greedy_coloring,
    is_proper, structure_checks,
)
from descol.thread import (
    canonical_thread, check_obstruction, level_graph, prefix_obstruction,
    random_thread,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Instance generators
# ---------------------------------------------------------------------------

def random_graph(rng: random.Random, n: int, p: float | None = None) -> FiniteGraph:
    """Erdos-Renyi G(n, p); p itself is drawn uniformly when not given."""
    if p is None:
        p = rng.random()
    return from_networkx(nx.gnp_random_graph(n, p, seed=rng))


def random_bounded_degree_graph(rng: random.Random, n: int, max_degree: int) -> FiniteGraph:
    """Random pairs in shuffled order, each kept only if both ends stay within max_degree."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    degree = [0] * n
    edges = []
    for u, v in pairs:
        if degree[u] < max_degree and degree[v] < max_degree and rng.random() < 0.5:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return FiniteGraph.from_edges(n, edges)


def random_family(rng: random.Random, n: int, count: int,
                  fixed_share: float = 0.0) -> FunctionFamilySpec:
    """count random self-maps of n vertices; each point is fixed with probability fixed_share."""
    functions = []
    for _ in range(count):
        functions.append(tuple(
            v if rng.random() < fixed_share else rng.randrange(n)
            for v in range(n)
        ))
    return FunctionFamilySpec(n, tuple(functions))


def all_graphs(n: int):
    """Every labelled simple graph on n vertices, 2^(n choose 2) of them."""
    pairs = list(combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        yield FiniteGraph.from_edges(
            n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        )


def _result(name: str, checked: int, failures: list[str], **details) -> dict:
    log.info("%s: %d checked, %d failures", name, checked, len(failures))
    return {
        "name": name,
        "ok": not failures,
        "checked": checked,
        "failures": failures,
        "details": details,
    }


# ---------------------------------------------------------------------------
# Batteries
# ---------------------------------------------------------------------------

def sweep_shift3(alphabets=(2, 3, 4, 5), max_prefix: int = 4, max_cycle: int = 4) -> dict:
    """shift3_color separates x from shift(x) on every enumerated lasso, and keeps the case."""
    log.info("sweep_shift3: alphabets=%s max_prefix=%d max_cycle=%d",
             list(alphabets), max_prefix, max_cycle)
    failures = []
    pairs = 0
    per_alphabet = {}
    for n in alphabets:
        lassos = enumerate_lassos(n, max_prefix, max_cycle)
        checked_here = 0
        for x in lassos:
            y = shift(x)
            if y == x:
                continue
            checked_here += 1
            if shift3_color(x) == shift3_color(y):
                failures.append(f"alphabet {n}: {x} and its shift share colour {shift3_color(x)}")
            if shift3_case(x) != shift3_case(y):
                failures.append(f"alphabet {n}: {x} changes case under shift")
        per_alphabet[str(n)] = {"lassos": len(lassos), "pairs": checked_here}
        pairs += checked_here
    return _result("shift3", pairs, failures, alphabets=per_alphabet)


def check_transfer(count: int = 500, max_vertices: int = 50,
                   solver_max_vertices: int = 20, seed: int = 0) -> dict:
    """transfer_3color is proper with at most 3 colours on random single-function specs.

    Small instances also get an independent chi <= 3 from the solver and a
    check that the orbit map commutes with shift.
    """
    rng = random.Random(seed)
    failures = []
    solver_checked = 0
    for i in range(count):
        n = rng.randint(1, max_vertices)
        spec = random_family(rng, n, 1)
        g = generate_graph(spec)
        c = transfer_3color(spec)
        if not is_proper(g, c):
            failures.append(f"instance {i} ({n} vertices): colouring is improper")
        if c.num_colours > 3:
            failures.append(f"instance {i}: {c.num_colours} colours")
        if n <= solver_max_vertices:
            solver_checked += 1
            chi = chromatic_number(g).chi
            if chi > 3:
                failures.append(f"instance {i}: solver reports chi {chi}")
        if n <= 12:
            base = greedy_coloring(g)
            f = spec.functions[0]
            for v in range(n):
                if hom_to_shift(spec, base, f[v]) != shift(hom_to_shift(spec, base, v)):
                    failures.append(f"instance {i}: orbit map does not commute at {v}")
                    break
    return _result("transfer", count, failures, solver_checked=solver_checked)


def check_mis(count: int = 500, max_vertices: int = 30, max_degree: int = 6,
              seed: int = 0) -> dict:
    """Peeled sets are maximal independent and the colouring uses at most max_degree + 1 colours."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        n = rng.randint(1, max_vertices)
        g = random_bounded_degree_graph(rng, n, rng.randint(0, max_degree))
        remaining = set(range(n))
        for layer in mis_peel(g):
            chosen = set(layer)
            if any(g.adjacency[v] & chosen for v in chosen):
                failures.append(f"instance {i}: peeled set {layer} is not independent")
            if any(not g.adjacency[v] & chosen for v in remaining - chosen):
                failures.append(f"instance {i}: peeled set {layer} is not maximal")
            remaining -= chosen
        c = mis_peel_color(g)
        if not is_proper(g, c):
            failures.append(f"instance {i}: colouring is improper")
        if c.num_colours > g.max_degree + 1:
            failures.append(
                f"instance {i}: {c.num_colours} colours with max degree {g.max_degree}"
            )
    return _result("mis", count, failures)


def check_palette(count: int = 300, max_vertices: int = 12,
                  exhaustive_max_vertices: int = 5, seed: int = 0) -> dict:
    """palette_color is proper and uses exactly chi colours."""
    rng = random.Random(seed)
    failures = []
    exhaustive = 0

    def one(label, g):
        c = palette_color(g, components(g))
        chi = chromatic_number(g).chi
        if not is_proper(g, c):
            failures.append(f"{label}: colouring is improper")
        if c.distinct_colours != chi:
            failures.append(f"{label}: {c.distinct_colours} colours but chi is {chi}")

    for n in range(1, exhaustive_max_vertices + 1):
        for j, g in enumerate(all_graphs(n)):
            one(f"graph {j} on {n} vertices", g)
            exhaustive += 1
    for i in range(count):
        one(f"random instance {i}", random_graph(rng, rng.randint(1, max_vertices)))
    return _result("palette", exhaustive + count, failures, exhaustive=exhaustive)


def check_shadow(count: int = 300, max_functions: int = 3, max_vertices: int = 15,
                 seed: int = 0) -> dict:
    """Graphs generated by n functions have chi <= 2n + 1."""
    rng = random.Random(seed)
    failures = []
    worst: dict[str, int] = {}
    for i in range(count):
        k = rng.randint(1, max_functions)
        spec = random_family(rng, rng.randint(1, max_vertices), k)
        chi = chromatic_number(generate_graph(spec)).chi
        worst[str(k)] = max(worst.get(str(k), 0), chi)
        if chi > 2 * k + 1:
            failures.append(f"instance {i}: {k} functions but chi {chi}")
    return _result("shadow", count, failures, worst_chi=worst)


def check_levels(random_threads: int = 3, max_level: int = 10,
                 max_obstruction_depth: int = 8, seed: int = 0) -> dict:
    """Level graphs are trees with 2^k - 1 edges and chi 2; obstructions hold."""
    rng = random.Random(seed)
    depth = max(max_level, max_obstruction_depth + 1) + 1
    threads = [("canonical", canonical_thread(depth))]
    threads += [(f"random {j}", random_thread(depth, rng)) for j in range(random_threads)]
    failures = []
    checked = 0
    for name, t in threads:
        for k in range(1, max_level + 1):
            g = level_graph(t, k).graph
            checked += 1
            s = structure_checks(g)
            if not (s["acyclic"] and s["connected"]):
                failures.append(f"{name} thread, level {k}: not a tree")
            if g.edge_count != 2 ** k - 1:
                failures.append(f"{name} thread, level {k}: {g.edge_count} edges")
            chi = chromatic_number(g).chi
            if chi != 2:
                failures.append(f"{name} thread, level {k}: chi {chi}")
        for d in range(max_obstruction_depth + 1):
            w = prefix_obstruction("g0", d, 2, thread=t)
            checked += 1
            if not check_obstruction(w, thread=t):
                failures.append(f"{name} thread: bad obstruction at depth {d}")
    for d in range(max_obstruction_depth + 1):
        checked += 1
        if not check_obstruction(prefix_obstruction("g1", d, 2)):
            failures.append(f"g1: bad obstruction at depth {d}")
    return _result("levels", checked, failures, threads=len(threads))


def check_solver(count: int = 200, min_vertices: int = 5, max_vertices: int = 8,
                 exhaustive_vertices: int = 4, seed: int = 0,
                 brute_force_max_vertices: int = BRUTE_FORCE_MAX_VERTICES) -> dict:
    """chromatic_number agrees with brute force and returns proper witnesses."""
    rng = random.Random(seed)
    failures = []

    def one(label, g, expected=None):
        result = chromatic_number(g)
        if expected is None:
            expected = brute_force_chi(g, brute_force_max_vertices)
        if result.chi != expected:
            failures.append(f"{label}: solver {result.chi}, expected {expected}")
        if not is_proper(g, result.witness):
            failures.append(f"{label}: witness is improper")

    graphs = list(all_graphs(exhaustive_vertices))
    for j, g in enumerate(graphs):
        one(f"graph {j} on {exhaustive_vertices} vertices", g)
    for i in range(count):
        n = rng.randint(min_vertices, max_vertices)
        one(f"random instance {i}", random_graph(rng, n))
    one("petersen", from_networkx(nx.petersen_graph()), expected=3)
    return _result("solver", len(graphs) + count + 1, failures)


def check_uniformize(count: int = 200, max_functions: int = 4, max_vertices: int = 12,
                     round_trip_max_vertices: int = 7, seed: int = 0) -> dict:
    """The selection is a function inside the generated relation with the right domain.

    The covering round trip runs on every graph of the networkx atlas (all
    graphs up to isomorphism with at most 7 vertices) within the size limit.
    """
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        spec = random_family(rng, rng.randint(1, max_vertices),
                             rng.randint(1, max_functions), fixed_share=0.4)
        pairs = uniformize(spec)
        domain = [x for x, _ in pairs]
        if len(domain) != len(set(domain)):
            failures.append(f"instance {i}: selection is not a function")
        if any(all(f[x] != y for f in spec.functions) for x, y in pairs):
            failures.append(f"instance {i}: selection leaves the relation")
        moved = {x for x in range(spec.vertex_count)
                 if any(f[x] != x for f in spec.functions)}
        if set(domain) != moved:
            failures.append(f"instance {i}: domain differs from the moved points")

    round_trips = 0
    for j, G in enumerate(nx.graph_atlas_g()):
        if G.number_of_nodes() > round_trip_max_vertices:
            break
        g = from_networkx(G)
        round_trips += 1
        if generate_graph(covering_family(g)) != g:
            failures.append(f"atlas graph {j}: covering family does not regenerate it")
    return _result("uniformize", count + round_trips, failures, round_trips=round_trips)


BATTERIES = {
    "shift3": sweep_shift3,
    "transfer": check_transfer,
    "mis": check_mis,
    "palette": check_palette,
    "shadow": check_shadow,
    "levels": check_levels,
    "solver": check_solver,
    "uniformize": check_uniformize,
}


def run_battery(names, config: dict) -> list[dict]:
    """Run the named batteries (all when names is empty) with sizes from config."""
    names = list(names) or list(BATTERIES)
    unknown = [n for n in names if n not in BATTERIES]
    if unknown:
        raise ValueError(
            f"unknown check {unknown[0]!r}, expected one of {', '.join(BATTERIES)}"
        )
    results = []
    for name in names:
        if name == "shift3":
            sweep = config["sweep"]
            results.append(sweep_shift3(sweep["alphabets"], sweep["max_prefix"],
                                        sweep["max_cycle"]))
            continue
        kwargs = dict(config["experiments"][name])
        kwargs["seed"] = config["seed"]
        if name == "solver":
            kwargs["brute_force_max_vertices"] = config["solver"]["brute_force_max_vertices"]
        results.append(BATTERIES[name](**kwargs))
    return results
