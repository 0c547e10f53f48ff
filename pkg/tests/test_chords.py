import itertools

import pytest

from conftest import ap
from ribbonmut.chords import (
    SearchBudgetExceeded,
    SignedWord,
    bouquet_to_word,
    find_shares,
    intersection_graph,
    mutants_of_ribbon_graph,
    mutants_of_word,
    mutation_equivalent,
    mutation_neighbours,
    mutation_orbit,
    mutation_path,
    word_canonical,
    word_to_bouquet,
)
from ribbonmut.duality import delta_matroid_of
from ribbonmut.graphs import SimpleGraph, graph_isomorphic_bruteforce, graphs_isomorphic
from ribbonmut.harness import PopulationSpec, enumerate_bouquets, enumerate_ribbon_graphs, word_mutation_orbit
from ribbonmut.ribbon import canonical_form, is_connected
from ribbonmut.setsystem import isomorphic_dm

W = SignedWord.parse


def cyclic_intervals(n):
    out = {frozenset()}
    for start in range(n):
        for length in range(1, n + 1):
            out.add(frozenset((start + i) % n for i in range(length)))
    return out


def share_oracle(w):
    labels = [e.label for e in w.letters]
    n = len(labels)
    found = set()
    for a, b in itertools.product(cyclic_intervals(n), repeat=2):
        if a & b:
            continue
        counts = {}
        for p in a | b:
            counts[labels[p]] = counts.get(labels[p], 0) + 1
        if all(c == 2 for c in counts.values()):
            found.add(frozenset([a, b]))
    return found


class TestWords:
    def test_bouquet_round_trip(self):
        g = ap("a+ b+ a+ b+")
        assert str(bouquet_to_word(g)) == "a+ b+ a+ b+"
        assert word_to_bouquet(bouquet_to_word(g)) == g
        assert str(bouquet_to_word(ap("e+ e-"))) == "e+ e-"

    def test_not_a_bouquet(self):
        with pytest.raises(ValueError):
            bouquet_to_word(ap("e+", "e+"))

    def test_normalized(self):
        assert str(W("a- b+ a- b+").normalized()) == "a+ b+ a+ b+"
        assert str(W("a- b+ a+ b+").normalized()) == "a+ b+ a- b+"

    def test_invalid(self):
        with pytest.raises(ValueError):
            W("a+ b+ a+")


class TestIntersectionGraph:
    def test_interleaved(self):
        assert intersection_graph(W("a+ b+ a+ b+")) == SimpleGraph.from_pairs("ab", ["ab"])

    def test_nested(self):
        assert intersection_graph(W("a+ a+ b+ b+")) == SimpleGraph.from_pairs("ab", [])

    def test_triangle(self):
        assert intersection_graph(W("a+ b+ c+ a+ b+ c+")) == SimpleGraph.from_pairs("abc", ["ab", "bc", "ac"])

    def test_signed_rejected(self):
        with pytest.raises(ValueError):
            intersection_graph(W("e+ e-"))


class TestShares:
    def test_interleaved_halves(self):
        keys = {frozenset([frozenset(s.first), frozenset(s.second)]) for s in find_shares(W("a+ b+ a+ b+"))}
        assert frozenset([frozenset({0, 1}), frozenset({2, 3})]) in keys

    def test_nested_with_empty_arc(self):
        keys = {frozenset([frozenset(s.first), frozenset(s.second)]) for s in find_shares(W("a+ a+ b+ b+"))}
        assert frozenset([frozenset({0, 1}), frozenset({2, 3})]) in keys
        assert frozenset([frozenset({0, 1}), frozenset()]) in keys

    @pytest.mark.parametrize("word", ["a+ b+ c+ a+ b+ c+", "a+ b+ a+ b+", "a+ a+ b+ b+", "a+ b+ c+ b+ a+ c+"])
    def test_count_matches_interval_enumeration(self, word):
        w = W(word)
        keys = {frozenset([frozenset(s.first), frozenset(s.second)]) for s in find_shares(w)}
        assert keys == share_oracle(w)
        assert len(find_shares(w)) == len(share_oracle(w))


class TestWordMutation:
    def test_interleaved_pair_is_rigid(self):
        w = W("a+ b+ a+ b+")
        assert all(word_canonical(m) == word_canonical(w) for m in mutants_of_word(w))

    def test_intersection_graph_preserved(self):
        for b in enumerate_bouquets(4, orientable_only=True):
            w = bouquet_to_word(b)
            g = intersection_graph(w)
            for m in mutants_of_word(w):
                assert graph_isomorphic_bruteforce(intersection_graph(m), g)

    def test_symmetric(self):
        for b in enumerate_bouquets(4, orientable_only=True):
            w = bouquet_to_word(b)
            for m in mutants_of_word(w):
                assert canonical_form(b) in word_mutation_orbit(word_to_bouquet(m))

    def test_unsigned_stays_unsigned(self):
        # both arcs of a share are reversed together, so letter signs flip in pairs
        assert all(m.is_unsigned for m in mutants_of_word(W("a+ b+ a+ b+ c+ c+")))

    def test_signed_letters_keep_their_twist(self):
        for m in mutants_of_word(W("a+ b+ a+ b- c+ c+")):
            signs = {}
            for e in m.letters:
                signs.setdefault(e.label, []).append(e.sign)
            assert sorted(lab for lab, (s1, s2) in signs.items() if s1 != s2) == ["b"]


@pytest.fixture(scope="module")
def population():
    return [g for g in enumerate_ribbon_graphs(PopulationSpec(3, 3)) if is_connected(g)]


class TestRibbonMutation:
    def test_mutants_have_isomorphic_delta_matroids(self, population):
        for g in population:
            d = delta_matroid_of(g)
            for m in mutants_of_ribbon_graph(g):
                assert isomorphic_dm(delta_matroid_of(m), d) is not None

    def test_neighbour_relation_symmetric(self, population):
        for g in population:
            for n in mutation_neighbours(g):
                assert canonical_form(g) in mutation_neighbours(n)

    def test_torus_orbit(self):
        orbit = mutation_orbit(ap("a+ b+ a+ b+"))
        assert canonical_form(ap("a+ b+ a+ b+")) in orbit
        d = delta_matroid_of(ap("a+ b+ a+ b+"))
        assert all(isomorphic_dm(delta_matroid_of(o), d) is not None for o in orbit)
        assert all(o.num_edges == 2 and o.num_vertices == 1 for o in orbit if len(o.curves) == 1)

    def test_equivalent_reflexive(self):
        g = ap("a+ b- a+ c+", "b+ c-")
        assert mutation_equivalent(g, g)

    def test_different_delta_matroids_not_equivalent(self):
        assert not mutation_equivalent(ap("a+ a+ b+ b+"), ap("a+ b+ a+ b+"))

    def test_path_steps_are_neighbours(self):
        g, h = ap("1+ 1+ 2+ 2+ 3+ 3+ 4+ 4+"), ap("1+ 1+ 2+ 3+ 4+ 4+ 3+ 2+")
        assert not canonical_form(g) == canonical_form(h)
        path = mutation_path(g, h)
        assert path is not None and len(path) >= 2
        for a, b in zip(path, path[1:]):
            assert b in mutation_neighbours(a)

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            mutation_orbit(ap("1+ 1+ 2+ 2+ 3+ 3+ 4+ 4+"), budget=2)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            mutants_of_ribbon_graph(ap("e+ e+", "f+ f+"))


class TestGraphIsomorphism:
    def test_against_bruteforce(self):
        verts = "abcd"
        pairs = list(itertools.combinations(verts, 2))
        graphs = [SimpleGraph.from_pairs(verts, [p for i, p in enumerate(pairs) if bits >> i & 1]) for bits in range(64)]
        for g, h in itertools.combinations(graphs[::3], 2):
            assert graphs_isomorphic(g, h) == graph_isomorphic_bruteforce(g, h)
