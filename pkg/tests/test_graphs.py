"""Tests for graphs.py — generated graphs, components, covering families."""

import random
from itertools import product

import networkx as nx
import pytest

from descol.experiments import all_graphs, random_family, random_graph
from descol.graphs import (
    _edge_colouring, component_rank, component_transversal, components, covering_family,
    from_networkx, generate_graph, induced_subgraph, is_homomorphism, to_networkx,
    uniformize, uniformize_stages,
)
from descol.models import FiniteGraph, FunctionFamilySpec
from descol.solver import chromatic_number, structure_checks


def _path3():
    return FiniteGraph.from_edges(3, [(0, 1), (1, 2)])


def _triangle():
    return FiniteGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


class TestGenerateGraph:
    def test_swap(self):
        g = generate_graph(FunctionFamilySpec(2, ((1, 0),)))
        assert g.sorted_edges() == [(0, 1)]

    def test_identity_is_edgeless(self):
        g = generate_graph(FunctionFamilySpec(3, ((0, 1, 2),)))
        assert g.edge_count == 0
        assert g.vertex_count == 3

    def test_rotation_gives_cycle(self):
        g = generate_graph(FunctionFamilySpec(4, ((1, 2, 3, 0),)))
        assert g.sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_union_over_functions(self):
        spec = FunctionFamilySpec(3, ((1, 1, 2), (0, 2, 2)))
        assert generate_graph(spec).sorted_edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_every_small_family(self, n):
        maps = list(product(range(n), repeat=n))
        families = [(f,) for f in maps] + [(f, h) for f in maps for h in maps]
        for functions in families:
            g = generate_graph(FunctionFamilySpec(n, functions))
            expected = {tuple(sorted((x, f[x]))) for f in functions
                        for x in range(n) if f[x] != x}
            assert set(g.edges) == expected
            for v in range(n):
                assert v not in g.adjacency[v]
                assert all(v in g.adjacency[w] for w in g.adjacency[v])

    def test_n_functions_give_2n_degenerate(self):
        rng = random.Random(23)
        for _ in range(150):
            count = rng.randint(1, 4)
            spec = random_family(rng, rng.randint(1, 20), count)
            assert structure_checks(generate_graph(spec))["degeneracy"] <= 2 * count


class TestComponents:
    def test_path(self):
        co = components(_path3())
        assert co.order == (0, 1, 2)
        assert co.component_id == (0, 0, 0)

    def test_edgeless(self):
        co = components(FiniteGraph(3))
        assert co.order == (0, 1, 2)
        assert co.blocks() == [(0,), (1,), (2,)]

    def test_two_blocks(self):
        g = FiniteGraph.from_edges(4, [(2, 3), (0, 1)])
        co = components(g)
        assert co.order == (0, 1, 2, 3)
        assert co.blocks() == [(0, 1), (2, 3)]

    def test_bfs_order_within_block(self):
        # star centred at 3 reached from 0
        g = FiniteGraph.from_edges(5, [(0, 3), (3, 1), (3, 4), (2, 4)])
        assert components(g).order == (0, 3, 1, 4, 2)

    def test_blocks_are_contiguous(self):
        rng = random.Random(7)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 12), 0.15)
            co = components(g)
            ids = [co.component_id[v] for v in co.order]
            assert ids == sorted(ids)
            assert len(co.blocks()) == nx.number_connected_components(to_networkx(g))


class TestComponentRank:
    def test_first(self):
        assert component_rank(components(_path3()), 0) == 0

    def test_last(self):
        assert component_rank(components(_path3()), 2) == 2

    def test_second_component(self):
        co = components(FiniteGraph.from_edges(4, [(2, 3), (0, 1)]))
        assert component_rank(co, 2) == 0
        assert component_rank(co, 3) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            component_rank(components(_path3()), 3)

    def test_ranks_number_each_component(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 14), 0.12)
            co = components(g)
            for block in co.blocks():
                ranks = [component_rank(co, v) for v in block]
                assert ranks == list(range(len(block)))

    def test_transversal(self):
        co = components(FiniteGraph.from_edges(5, [(3, 4), (1, 2)]))
        assert component_transversal(co) == [0, 1, 3]


class TestInducedSubgraph:
    def test_relabel(self):
        sub, original = induced_subgraph(_triangle(), [2, 0])
        assert original == [2, 0]
        assert sub.sorted_edges() == [(0, 1)]

    def test_drops_outside_edges(self):
        sub, _ = induced_subgraph(_path3(), [0, 2])
        assert sub.edge_count == 0


class TestHomomorphism:
    def test_colouring_is_homomorphism_to_complete_graph(self):
        c5 = FiniteGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        k3 = _triangle()
        witness = chromatic_number(c5).witness
        assert is_homomorphism(c5, k3, witness.colours)

    def test_collapsing_an_edge_fails(self):
        assert not is_homomorphism(_path3(), _triangle(), (0, 0, 1))

    def test_homomorphism_bounds_chi(self):
        rng = random.Random(11)
        target = _triangle()
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 7))
            mapping = chromatic_number(g).witness.colours
            if chromatic_number(g).chi <= 3:
                assert is_homomorphism(g, target, mapping)
                assert chromatic_number(g).chi <= chromatic_number(target).chi

    def test_mapping_must_be_total(self):
        with pytest.raises(ValueError, match="covers"):
            is_homomorphism(_path3(), _triangle(), (0, 1))

    def test_target_range(self):
        with pytest.raises(ValueError, match="outside"):
            is_homomorphism(_path3(), _triangle(), (0, 1, 5))


class TestCoveringFamily:
    def test_single_edge(self):
        spec = covering_family(FiniteGraph.from_edges(2, [(0, 1)]))
        assert spec.functions == ((1, 0),)

    def test_triangle_needs_three(self):
        spec = covering_family(_triangle())
        assert len(spec.functions) == 3
        for f in spec.functions:
            moved = [v for v in range(3) if f[v] != v]
            assert len(moved) == 2
            a, b = moved
            assert f[a] == b and f[b] == a

    def test_edgeless(self):
        assert covering_family(FiniteGraph(4)).functions == ()

    def test_at_most_max_degree_plus_one(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 14))
            spec = covering_family(g)
            assert len(spec.functions) <= g.max_degree + 1
            assert generate_graph(spec) == g

    def test_edge_colouring_is_proper(self):
        g = from_networkx(nx.petersen_graph())
        colour = _edge_colouring(g)
        assert set(colour) == g.edges
        for v in range(g.vertex_count):
            at_v = [colour[(min(v, w), max(v, w))] for w in g.adjacency[v]]
            assert len(at_v) == len(set(at_v))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_round_trip_all_small_graphs(self, n):
        for g in all_graphs(n):
            assert generate_graph(covering_family(g)) == g


class TestUniformize:
    def test_identities(self):
        spec = FunctionFamilySpec(3, ((0, 1, 2), (0, 1, 2)))
        assert uniformize(spec) == frozenset()

    def test_least_index_wins(self):
        spec = FunctionFamilySpec(3, ((1, 1, 2), (2, 1, 2)))
        assert uniformize(spec) == frozenset({(0, 1)})

    def test_later_function_fills_fixed_points(self):
        spec = FunctionFamilySpec(3, ((1, 1, 2), (0, 0, 0)))
        assert uniformize(spec) == frozenset({(0, 1), (1, 0), (2, 0)})

    def test_stages_are_cumulative(self):
        spec = FunctionFamilySpec(3, ((1, 1, 2), (0, 0, 0)))
        a0, a1 = uniformize_stages(spec)
        assert a0 == frozenset({(0, 1)})
        assert a0 <= a1

    def test_empty_family(self):
        assert uniformize(FunctionFamilySpec(3)) == frozenset()

    def test_random_families(self):
        rng = random.Random(5)
        for _ in range(100):
            spec = random_family(rng, rng.randint(1, 10), rng.randint(1, 4), fixed_share=0.4)
            pairs = uniformize(spec)
            domain = [x for x, _ in pairs]
            assert len(domain) == len(set(domain))
            assert all(any(f[x] == y for f in spec.functions) for x, y in pairs)
            moved = {x for x in range(spec.vertex_count)
                     if any(f[x] != x for f in spec.functions)}
            assert set(domain) == moved


class TestNetworkxBridge:
    def test_round_trip(self):
        g = _triangle()
        assert from_networkx(to_networkx(g)) == g

    def test_relabels_sorted(self):
        G = nx.Graph()
        G.add_edge("b", "c")
        G.add_node("a")
        g = from_networkx(G)
        assert g.vertex_count == 3
        assert g.sorted_edges() == [(1, 2)]
