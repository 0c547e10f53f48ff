import itertools

import pytest

from conftest import ap
from ribbonmut.ribbon import (
    ArrowEnd,
    ArrowPresentation,
    ParseError,
    canonical_form,
    components,
    disjoint_union,
    isomorphic,
    orientability_and_genus,
    parse,
    serialize,
    subgraph_stats,
    vertex_cuts,
    vertex_join,
)


class TestParse:
    def test_bouquet(self):
        g = parse("vertex e+ e+")
        assert g.num_vertices == 1
        assert g.edges == ("e",)
        assert g.curves[0] == (ArrowEnd("e", 1), ArrowEnd("e", 1))

    def test_two_curves(self):
        g = parse("ribbon v1\nvertex a+ b- a+ c+\nvertex b+ c-\n")
        assert g.num_vertices == 2
        assert g.edges == ("a", "b", "c")

    def test_label_three_times(self):
        with pytest.raises(ParseError, match="label e occurs 3 times") as exc:
            parse("vertex e+ e+ e+")
        assert exc.value.lineno == 1

    def test_label_once_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse("ribbon v1\nvertex a+ a+\nvertex b+\n")
        assert exc.value.lineno == 3

    def test_malformed_token(self):
        with pytest.raises(ParseError, match="line 2"):
            parse("ribbon v1\nvertex a* a+\n")

    def test_duplicate_header(self):
        with pytest.raises(ParseError, match="line 2"):
            parse("ribbon v1\nribbon v1\nvertex e+ e+\n")

    def test_empty_curve_and_comments(self):
        g = parse("# isolated vertex\nvertex\n")
        assert g.num_vertices == 1 and g.num_edges == 0


class TestSerialize:
    def test_bouquet(self):
        assert serialize(ap("e+ e+")).splitlines()[1:] == ["vertex e+ e+"]

    def test_empty_presentation_is_header_only(self):
        assert serialize(ArrowPresentation()).strip() == "ribbon v1"

    def test_round_trip(self, small_population):
        for g in small_population:
            assert parse(serialize(g)) == g


class TestStats:
    @pytest.mark.parametrize(
        "words, a, k, b",
        [
            (("",), (), 1, 1),
            (("e+ e+",), ("e",), 1, 2),
            (("e+ e-",), ("e",), 1, 1),
            (("a+ b+ a+ b+",), ("a", "b"), 1, 1),
            (("a+ a+ b+ b+",), ("a", "b"), 1, 3),
            (("e+", "e+"), (), 2, 2),
            (("e+", "e+"), ("e",), 1, 1),
        ],
    )
    def test_values(self, words, a, k, b):
        st = subgraph_stats(ap(*words), a)
        assert (st.k, st.b) == (k, b)
        assert len(st.boundary_traces) == b

    def test_subset_outside_edge_set(self):
        with pytest.raises(ValueError):
            subgraph_stats(ap("e+ e+"), ["f"])

    def test_traces_cover_every_flank_once(self, small_population):
        for g in small_population:
            for r in range(g.num_edges + 1):
                for a in itertools.combinations(g.edges, r):
                    traces = subgraph_stats(g, a).boundary_traces
                    flat = [f for t in traces for f in t]
                    assert len(flat) == len(set(flat))


class TestTopology:
    @pytest.mark.parametrize(
        "word, orientable, genus, plane",
        [
            ("e+ e+", True, 0, True),
            ("e+ e-", False, 1, False),
            ("a+ b+ a+ b+", True, 2, False),
            ("a+ a- b+ b-", False, 2, False),
        ],
    )
    def test_examples(self, word, orientable, genus, plane):
        t = orientability_and_genus(ap(word))
        assert (t.orientable, t.euler_genus, t.is_plane) == (orientable, genus, plane)

    def test_bridge_is_plane(self):
        t = orientability_and_genus(ap("e+", "e-"))
        assert t.orientable and t.is_plane

    def test_genus_formula_matches_stats(self, small_population):
        for g in small_population:
            st = subgraph_stats(g, g.edges)
            assert orientability_and_genus(g).euler_genus == 2 * st.k - (g.num_vertices - g.num_edges + st.b)


class TestCanonicalForm:
    def test_rotation(self):
        assert canonical_form(ap("e+ e-")) == canonical_form(ap("e- e+"))

    def test_relabelling(self):
        assert canonical_form(ap("a+ b+ a+ b+")) == canonical_form(ap("b+ a+ b+ a+"))

    def test_twist_distinguished(self):
        # b({e}) is 2 for the annulus and 1 for the Moebius band
        assert subgraph_stats(ap("e+ e+"), ["e"]).b != subgraph_stats(ap("e+ e-"), ["e"]).b
        assert canonical_form(ap("e+ e+")) != canonical_form(ap("e+ e-"))

    def test_curve_order_and_reversal(self):
        g = ap("a+ b- a+ c+", "b+ c-")
        h = ap("b+ c-", "c- a- b+ a-")  # curves swapped, one reversed with signs flipped
        assert canonical_form(g) == canonical_form(h)

    def test_double_flip_is_invisible(self):
        assert isomorphic(ap("a+ b+ a+ b+"), ap("a- b+ a- b+"))

    def test_idempotent(self, small_population):
        for g in small_population:
            c = canonical_form(g)
            assert canonical_form(c) == c
            assert subgraph_stats(c, c.edges)[:2] == subgraph_stats(g, g.edges)[:2]


class TestIsomorphic:
    def test_reflexive(self):
        g = ap("a+ b- a+ c+", "b+ c-")
        assert isomorphic(g, g)

    def test_edge_count_differs(self):
        assert not isomorphic(ap("e+ e+"), ap("e+ e+ f+ f+"))

    def test_nested_vs_interleaved(self):
        assert subgraph_stats(ap("a+ a+ b+ b+"), ["a", "b"]).b == 3
        assert subgraph_stats(ap("a+ b+ a+ b+"), ["a", "b"]).b == 1
        assert not isomorphic(ap("a+ a+ b+ b+"), ap("a+ b+ a+ b+"))


class TestJoinCut:
    def test_join_two_loops(self):
        assert vertex_join(ap("e+ e+"), (0, 0), ap("f+ f+"), (0, 0)) == ap("e+ e+ f+ f+")

    def test_join_with_isolated_vertex(self):
        g = ap("a+ b+ a+ b+")
        assert vertex_join(g, (0, 1), ArrowPresentation(((),)), (0, 0)) == ap("b+ a+ b+ a+")

    def test_join_label_collision(self):
        with pytest.raises(ValueError):
            vertex_join(ap("e+ e+"), (0, 0), ap("e+ e+"), (0, 0))

    def test_torus_is_not_a_join(self):
        target = ap("a+ b+ a+ b+")
        # only one-edge pieces could combine to it; try every gap and sign
        pieces = [ap("a+ a+"), ap("a+ a-"), ap("b+ b+"), ap("b+ b-")]
        for p, q in itertools.product(pieces[:2], pieces[2:]):
            for g1, g2 in itertools.product(range(2), range(2)):
                assert not isomorphic(vertex_join(p, (0, g1), q, (0, g2)), target)
        assert vertex_cuts(target) == []

    def test_cut_two_loops(self):
        cuts = vertex_cuts(ap("e+ e+ f+ f+"))
        assert len(cuts) == 1
        left, right = cuts[0]
        assert {canonical_form(left), canonical_form(right)} == {canonical_form(ap("e+ e+")), canonical_form(ap("f+ f+"))}

    def test_cuts_rebuild_by_join(self, small_population):
        for g in small_population:
            if len(components(g)) != 1:
                continue
            for left, right in vertex_cuts(g):
                joined = vertex_join(left, (0, 0), right, (0, 0))
                assert isomorphic(joined, g)
                assert sorted(map(len, joined.curves)) == sorted(map(len, g.curves))

    def test_isolated_vertex_cut(self):
        g = ap("a+ b+ a+ b+")
        trivial = [c for c in vertex_cuts(g, include_trivial=True) if c not in vertex_cuts(g)]
        assert len(trivial) == 1
        left, right = trivial[0]
        assert left == ArrowPresentation(((),)) and vertex_join(left, (0, 0), right, (0, 0)) == g

    def test_disconnected_cut(self):
        g = ap("e+ e+", "f+ f+")
        cuts = vertex_cuts(g)
        assert cuts
        for left, right in cuts:
            assert isomorphic(disjoint_union(left, right), g)


class TestDisjointUnion:
    def test_identity(self):
        g = ap("e+ e-")
        assert disjoint_union(ArrowPresentation(), g) == g

    def test_two_loops(self):
        u = disjoint_union(ap("e+ e+"), ap("f+ f-"))
        assert u.num_vertices == 2 and subgraph_stats(u, u.edges).k == 2

    def test_stats_add(self, small_population):
        g, h = ap("x+ y+ x+ y+"), ap("z+", "z-")
        u = disjoint_union(g, h)
        sg, sh, su = (subgraph_stats(t, t.edges) for t in (g, h, u))
        assert (su.k, su.b) == (sg.k + sh.k, sg.b + sh.b)

    def test_collision(self):
        with pytest.raises(ValueError):
            disjoint_union(ap("e+ e+"), ap("e+ e-"))
