from fractions import Fraction

import pytest

from pmgraph import (
    InvalidGraphError,
    PmGraph,
    canonical_divisor,
    connected_components,
    genus,
    normalize,
    one_point_union,
    require_valid,
    scaled,
    subdivide,
    validate,
)

from conftest import build_circle, build_k4, build_loop, build_path, build_theta


class TestConstruction:
    def test_build_coerces_lengths(self):
        g = PmGraph.build(["A", "B"], [("e", "A", "B", "1/3")])
        assert g.edge("e").length == Fraction(1, 3)

    def test_vertex_weights(self):
        g = PmGraph.build([("A", 2), "B"], [("e", "A", "B", 1)])
        assert g.q("A") == 2
        assert g.q("B") == 0

    def test_loop_valence_counts_twice(self):
        g = build_loop(length=5, q=2)
        assert g.valence("X") == 2

    def test_total_length(self):
        g = build_path((1, 2, 3))
        assert g.total_length == 6

    def test_immutable(self):
        g = build_loop()
        with pytest.raises(Exception):
            g.vertices = ()


class TestValidate:
    def test_leaf_with_zero_weight_fails(self):
        g = PmGraph.build(["A", ("B", 1)], [("e", "A", "B", 1)])
        report = validate(g)
        assert not report.passed
        assert any("canonical divisor" in p for p in report.problems)

    def test_isolated_weight3_vertex_passes(self):
        g = PmGraph.build([("A", 3)], [])
        assert validate(g).passed

    def test_disconnected_fails(self):
        g = PmGraph.build(
            [("A", 2), ("B", 2)],
            [("l1", "A", "A", 1), ("l2", "B", "B", 1)],
        )
        report = validate(g)
        assert not report.passed
        assert any("connected" in p for p in report.problems)

    def test_nonpositive_length_fails(self):
        g = PmGraph(
            (PmGraph.build([("A", 3)], []).vertices),
            (),
        )
        assert validate(g).passed
        bad = PmGraph.build([("A", 2)], [("l", "A", "A", 1)])
        hacked = PmGraph(
            bad.vertices,
            tuple(type(e)(e.id, e.u, e.v, Fraction(0)) for e in bad.edges),
        )
        assert not validate(hacked).passed

    def test_require_valid_raises(self):
        g = PmGraph.build(["A", ("B", 1)], [("e", "A", "B", 1)])
        with pytest.raises(InvalidGraphError):
            require_valid(g)

    def test_empty_vertex_set_fails(self):
        assert not validate(PmGraph((), ())).passed


class TestGenus:
    def test_k4(self, k4_unit):
        data = genus(k4_unit)
        assert (data.g, data.gbar) == (3, 3)

    def test_weighted_path(self):
        g = PmGraph.build(
            [("A", 1), ("B", 1), ("C", 1)],
            [("e1", "A", "B", 1), ("e2", "B", "C", 1)],
        )
        data = genus(g)
        assert (data.g, data.gbar) == (0, 3)

    def test_loop_at_weighted_vertex(self):
        data = genus(build_loop(q=2))
        assert (data.g, data.gbar) == (1, 3)


class TestCanonicalDivisor:
    def test_isolated_vertex(self):
        g = PmGraph.build([("A", 3)], [])
        assert canonical_divisor(g) == {"A": 4}

    def test_degree_three_unweighted(self, theta_unit):
        K = canonical_divisor(theta_unit)
        assert K["S"] == 1  # valence 3, q = 0
        assert K["P"] == 3  # valence 3, q = 1

    def test_weighted_leaf(self):
        g = PmGraph.build(
            [("A", 2), ("B", 2)],
            [("e", "A", "B", 1)],
        )
        assert canonical_divisor(g)["A"] == 3


class TestNormalize:
    def test_removes_flat_vertex(self):
        square = build_circle((1, 2, 3, 4))
        slim = normalize(square)
        # one vertex survives per weight/valence rule: all are q=0 valence 2,
        # but the last survivor cannot be removed (vertex set must stay nonempty)
        assert len(slim.vertices) == 1
        assert slim.total_length == 10
        assert slim.edges[0].is_loop

    def test_weighted_vertex_not_removed(self):
        g = build_loop(q=2)
        assert normalize(g) is g or normalize(g) == g

    def test_triangle_with_split_edge(self):
        g = PmGraph.build(
            [("A", 1), ("B", 1), ("C", 1), "M"],
            [
                ("ab", "A", "B", 2),
                ("bc", "B", "C", 3),
                ("cm", "C", "M", 1),
                ("ma", "M", "A", 1),
            ],
        )
        slim = normalize(g)
        assert len(slim.vertices) == 3
        assert slim.total_length == 7
        lengths = sorted(e.length for e in slim.edges)
        assert lengths == [2, 2, 3]

    def test_idempotent(self):
        g = build_circle((1, 1, 1), q_first=2)
        once = normalize(g)
        twice = normalize(once)
        assert once == twice


class TestSubdivide:
    def test_loop_becomes_parallel_pair(self):
        g = build_loop(length=4, q=2)
        cut = subdivide(g, "l", Fraction(1, 2))
        assert len(cut.vertices) == 2
        assert sorted(e.length for e in cut.edges) == [2, 2]
        assert not any(e.is_loop for e in cut.edges)

    def test_lengths_split_exactly(self):
        g = build_path((5,))
        cut = subdivide(g, "e0", Fraction(2, 5))
        assert sorted(e.length for e in cut.edges) == [2, 3]

    def test_fraction_bounds(self):
        g = build_loop()
        with pytest.raises(ValueError):
            subdivide(g, "l", 0)
        with pytest.raises(ValueError):
            subdivide(g, "l", 1)

    def test_normalize_undoes_subdivide(self):
        g = build_theta()
        cut = subdivide(g, "b", Fraction(1, 3))
        slim = normalize(cut)
        assert len(slim.vertices) == 2
        assert sorted(e.length for e in slim.edges) == sorted(
            e.length for e in g.edges
        )

    def test_genus_invariant(self, k4_unit):
        cut = subdivide(k4_unit, "a", Fraction(1, 2))
        assert genus(cut) == genus(k4_unit)


class TestScaledAndUnion:
    def test_scaled(self):
        g = build_path((1, 2, 3))
        doubled = scaled(g, 2)
        assert doubled.total_length == 12
        with pytest.raises(ValueError):
            scaled(g, 0)

    def test_one_point_union_weights_add(self):
        g1 = build_loop(length=3, q=1)
        g2 = build_loop(length=5, q=1)
        union = one_point_union(g1, g2, "X", "X")
        assert len(union.vertices) == 1
        assert union.q("X") == 2
        assert union.total_length == 8
        data = genus(union)
        assert (data.g, data.gbar) == (2, 4)

    def test_one_point_union_renames_collisions(self):
        g = build_theta()
        union = one_point_union(g, g, "P", "P")
        assert len(union.vertices) == 3
        assert len(union.edges) == 6
        assert len({e.id for e in union.edges}) == 6


class TestComponents:
    def test_skip_edges(self, k4_unit):
        assert len(connected_components(k4_unit)) == 1
        parts = connected_components(
            k4_unit, skip_edges=frozenset({"a", "b", "c"})
        )
        assert {frozenset(p) for p in parts} == {
            frozenset({"1"}),
            frozenset({"2", "3", "4"}),
        }
