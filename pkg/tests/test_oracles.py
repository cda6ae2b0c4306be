import random

import pytest

from acymatch.graph import MultiGraph, is_forest
from acymatch.matchings import (
    is_acyclic_matching,
    is_induced_matching,
    is_matching,
    is_ur_matching,
)
from acymatch.oracles import (
    OracleLimitError,
    all_fvs,
    all_maximum_matchings,
    brute_force_mwm,
    max_independent_set,
    max_matching,
    max_restricted_matching,
    min_fvs,
    solve_x3c,
)
from acymatch.weighted import WeightedInstance
from util import (
    atlas_graphs,
    complete_graph,
    cycle_graph,
    independent_in,
    path_graph,
    star_graph,
)

CHECKERS = {
    "acyclic": is_acyclic_matching,
    "induced": is_induced_matching,
    "ur": is_ur_matching,
    "any": is_matching,
}


class TestRestrictedMatchingOracle:
    @pytest.mark.parametrize(
        "kind,expect", [("acyclic", 1), ("induced", 1), ("ur", 1), ("any", 2)]
    )
    def test_c4(self, kind, expect):
        assert max_restricted_matching(cycle_graph(4), kind).value == expect

    @pytest.mark.parametrize(
        "kind,expect", [("acyclic", 2), ("induced", 1), ("ur", 2), ("any", 2)]
    )
    def test_p4(self, kind, expect):
        assert max_restricted_matching(path_graph(4), kind).value == expect

    @pytest.mark.parametrize("kind,expect", [("acyclic", 2), ("induced", 2)])
    def test_c6(self, kind, expect):
        assert max_restricted_matching(cycle_graph(6), kind).value == expect

    def test_witness_verifies(self):
        for g in atlas_graphs(min_n=2, max_n=5):
            for kind, checker in CHECKERS.items():
                report = max_restricted_matching(g, kind)
                assert checker(g, report.witness)
                assert len(report.witness) == report.value

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            max_restricted_matching(path_graph(2), "perfect")

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            max_restricted_matching(path_graph(15), "acyclic")

    def test_all_maximum_matchings(self):
        # C4 has exactly 4 maximum acyclic matchings (each single edge)
        sets = all_maximum_matchings(cycle_graph(4), "acyclic")
        assert len(sets) == 4
        assert all(len(m) == 1 for m in sets)

    def test_all_maximum_matchings_empty_graph(self):
        g = MultiGraph()
        g.add_vertex(1)
        assert all_maximum_matchings(g, "any") == [frozenset()]


class TestChainOfOptima:
    def test_small_graphs(self):
        for g in atlas_graphs(min_n=2, max_n=6):
            im = max_restricted_matching(g, "induced").value
            am = max_restricted_matching(g, "acyclic").value
            urm = max_restricted_matching(g, "ur").value
            mm = max_restricted_matching(g, "any").value
            iset = max_independent_set(g).value
            assert im <= am <= urm <= mm
            assert am <= iset
            assert urm <= 2 * iset - 1 or urm == 0


class TestIndependentSet:
    def test_c4(self):
        assert max_independent_set(cycle_graph(4)).value == 2

    def test_k4(self):
        assert max_independent_set(complete_graph(4)).value == 1

    def test_p4(self):
        report = max_independent_set(path_graph(4))
        assert report.value == 2
        assert independent_in(path_graph(4), report.witness)


class TestFvs:
    def test_c4(self):
        assert min_fvs(cycle_graph(4)).value == 1

    def test_forest(self):
        assert min_fvs(path_graph(5)).value == 0

    def test_two_disjoint_triangles(self):
        g = MultiGraph.from_edges(
            [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
        )
        report = min_fvs(g)
        assert report.value == 2
        assert is_forest(g, g.vertices - report.witness)

    def test_all_fvs(self):
        g = cycle_graph(3)
        singles = [s for s in all_fvs(g, size_cap=1) if len(s) == 1]
        assert len(singles) == 3
        for s in all_fvs(g):
            assert is_forest(g, g.vertices - s)


class TestMaxMatching:
    def test_c6(self):
        assert max_matching(cycle_graph(6)).value == 3

    def test_k4(self):
        assert max_matching(complete_graph(4)).value == 2

    def test_star(self):
        assert max_matching(star_graph(5)).value == 1


class TestX3C:
    def test_single_triple(self):
        assert solve_x3c(3, [frozenset({1, 2, 3})]) == [frozenset({1, 2, 3})]

    def test_six_elements(self):
        sol = solve_x3c(
            6, [frozenset({1, 2, 3}), frozenset({4, 5, 6}), frozenset({2, 3, 4})]
        )
        assert sol is not None
        assert set(map(frozenset, sol)) == {frozenset({1, 2, 3}), frozenset({4, 5, 6})}

    def test_uncoverable(self):
        assert solve_x3c(6, [frozenset({1, 2, 3}), frozenset({2, 3, 4})]) is None

    def test_bad_universe(self):
        with pytest.raises(ValueError):
            solve_x3c(4, [])

    def test_bad_triple(self):
        with pytest.raises(ValueError):
            solve_x3c(3, [frozenset({1, 2})])


class TestBruteForceMwm:
    def test_single_edge(self):
        g = path_graph(2)
        assert brute_force_mwm(WeightedInstance(g, {0: 7}, 0)).value == 7

    def test_triangle(self):
        g = cycle_graph(3)
        w = dict(zip(sorted(g.edge_ids), (5, 1, 1)))
        assert brute_force_mwm(WeightedInstance(g, w, 0)).value == 5


class TestRandomizedCrossCheck:
    def test_optimum_moves_by_at_most_one_under_vertex_deletion(self):
        # a restricted matching of g - v is one of g (the deleted vertex
        # is unsaturated), and deleting v breaks at most one edge of any
        # optimum of g
        rng = random.Random(1)
        for _ in range(20):
            edges = set()
            n = rng.randrange(4, 8)
            for u in range(1, n + 1):
                for v in range(u + 1, n + 1):
                    if rng.random() < 0.4:
                        edges.add((u, v))
            g = MultiGraph.from_edges(edges, vertices=range(1, n + 1))
            sub = g.copy()
            sub.remove_vertex(n)
            for kind in CHECKERS:
                full = max_restricted_matching(g, kind).value
                less = max_restricted_matching(sub, kind).value
                assert less <= full <= less + 1
