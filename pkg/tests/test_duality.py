import itertools

import pytest

from conftest import ap
from ribbonmut.duality import (
    cycle_matroid_of,
    delta_matroid_of,
    is_bouquet,
    partial_dual,
    partial_dual_edgewise,
    partial_petrial,
    spanning_quasi_trees,
)
from ribbonmut.ribbon import isomorphic, subgraph_stats
from ribbonmut.setsystem import SetSystem, classify, loop_complement, twist

S = SetSystem.from_sets


def subsets(edges):
    return [c for r in range(len(edges) + 1) for c in itertools.combinations(edges, r)]


def quasi_tree_oracle(g):
    return S(g.edges, [a for a in subsets(g.edges) if subgraph_stats(g, a).b == subgraph_stats(g, g.edges).k])


class TestDeltaMatroid:
    def test_bridge(self):
        assert delta_matroid_of(ap("e+", "e+")) == S("e", [["e"]])

    def test_moebius(self):
        assert delta_matroid_of(ap("e+ e-")) == S("e", [[], ["e"]])

    def test_torus(self):
        assert delta_matroid_of(ap("a+ b+ a+ b+")) == S("ab", [[], "ab"])

    def test_matches_stats_oracle(self, small_population):
        for g in small_population:
            assert delta_matroid_of(g) == quasi_tree_oracle(g)


class TestCycleMatroid:
    def test_bridge(self):
        assert cycle_matroid_of(ap("e+", "e+")) == S("e", [["e"]])

    def test_digon(self):
        assert cycle_matroid_of(ap("1+ 2+", "2+ 1+")) == S([1, 2], [[1], [2]])

    def test_torus_loops(self):
        assert cycle_matroid_of(ap("a+ b+ a+ b+")) == S("ab", [[]])

    def test_is_matroid(self, small_population):
        for g in small_population:
            assert classify(cycle_matroid_of(g)).is_matroid


class TestPetrial:
    def test_loop(self):
        assert partial_petrial(ap("e+ e+"), ["e"]) == ap("e+ e-")

    def test_involution(self, small_population):
        for g in small_population:
            for a in subsets(g.edges):
                assert partial_petrial(partial_petrial(g, a), a) == g

    def test_loop_complement(self, small_population):
        for g in small_population:
            for a in subsets(g.edges):
                assert delta_matroid_of(partial_petrial(g, a)) == loop_complement(delta_matroid_of(g), a)

    def test_unknown_edge(self):
        with pytest.raises(ValueError):
            partial_petrial(ap("e+ e+"), ["f"])


class TestPartialDual:
    def test_orientable_loop_becomes_bridge(self):
        d = partial_dual(ap("e+ e+"), ["e"])
        assert d.num_vertices == 2 and [len(c) for c in d.curves] == [1, 1]
        assert isomorphic(d, ap("e+", "e+"))

    def test_empty_set_is_identity(self, small_population):
        for g in small_population:
            assert isomorphic(partial_dual(g, []), g)

    def test_moebius(self):
        d = partial_dual(ap("e+ e-"), ["e"])
        assert d.num_vertices == 1 and d.num_edges == 1
        assert delta_matroid_of(d) == S("e", [[], ["e"]])

    def test_twist(self, small_population):
        for g in small_population:
            for a in subsets(g.edges):
                assert delta_matroid_of(partial_dual(g, a)) == twist(delta_matroid_of(g), a)

    def test_vertex_count_is_boundary_count(self, small_population):
        for g in small_population:
            for a in subsets(g.edges):
                assert partial_dual(g, a).num_vertices == subgraph_stats(g, a).b

    def test_involution_and_edgewise(self, small_population):
        for g in small_population:
            for a in subsets(g.edges):
                d = partial_dual(g, a)
                assert isomorphic(partial_dual(d, a), g)
                assert isomorphic(partial_dual_edgewise(g, a), d)


class TestQuasiTrees:
    def test_torus(self):
        assert spanning_quasi_trees(ap("a+ b+ a+ b+")) == [frozenset(), frozenset("ab")]

    def test_loop(self):
        assert spanning_quasi_trees(ap("e+ e+")) == [frozenset()]

    def test_bridge(self):
        assert spanning_quasi_trees(ap("e+", "e-")) == [frozenset("e")]

    def test_disconnected(self):
        with pytest.raises(ValueError):
            spanning_quasi_trees(ap("e+ e+", "f+ f+"))

    def test_dual_along_quasi_tree_is_bouquet(self, small_population):
        for g in small_population:
            if subgraph_stats(g, g.edges).k == 1:
                for q in spanning_quasi_trees(g):
                    assert is_bouquet(partial_dual(g, q))
