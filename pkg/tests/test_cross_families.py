import networkx as nx
import numpy as np
import pytest

from symmetric_systems.analysis.cross_families import (
    ABOVE,
    AT,
    BELOW,
    CASE_COMMON_MAXIMUM,
    CASE_FULL,
    CASE_THRESHOLD_IMPRIMITIVE,
    CASE_THRESHOLD_TRIVIAL,
    CrossFamily,
    alpha_m_bound,
    brute_force_alpha_m,
    check_star_decomposition,
    classify_optimal,
    enumerate_optimal_families,
    is_cross_family,
    random_cross_family,
    star_decomposition,
    unreduced_alpha_m,
)
from symmetric_systems.analysis.report import CheckStatus
from symmetric_systems.core.errors import PreconditionError, SearchCapExceeded
from symmetric_systems.core.graph import SystemGraph, VertexSet
from symmetric_systems.systems import build_system
from tests.support import cycle_graph, graph_from_networkx


def family(n, *parts):
    return CrossFamily.of([VertexSet.of(n, p) for p in parts])


def atlas(max_n):
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= max_n:
            yield graph_from_networkx(G)


class TestCrossFamily:
    def test_parts_must_match_m(self):
        with pytest.raises(PreconditionError):
            CrossFamily(2, (VertexSet.empty(3),))

    def test_parts_share_a_universe(self):
        with pytest.raises(PreconditionError):
            CrossFamily.of([VertexSet.empty(3), VertexSet.empty(4)])

    def test_nonempty_first(self):
        F = family(4, [], [2], [1])
        assert F.with_nonempty_first().to_list() == [[2], [], [1]]
        assert F.total == 2

    def test_validity(self, k42):
        g = k42.graph
        assert not is_cross_family(g, family(6, [0], [5]))
        assert is_cross_family(g, family(6, [0, 5], []))
        assert is_cross_family(g, family(6, [0], [0]))
        assert is_cross_family(g, family(6, [0, 1, 4], [0, 2, 3]))


@pytest.mark.parametrize("n, alpha, m, regime, bound", [
    (10, 4, 1, BELOW, 10),
    (10, 4, 2, BELOW, 10),
    (10, 4, 3, ABOVE, 12),
    (6, 3, 2, AT, 6),
    (5, 2, 3, ABOVE, 6),
])
def test_alpha_m_bound(n, alpha, m, regime, bound):
    report = alpha_m_bound(n, alpha, m)
    assert (report.regime, report.bound) == (regime, bound)


def test_alpha_m_bound_preconditions():
    with pytest.raises(PreconditionError):
        alpha_m_bound(5, 2, 0)
    with pytest.raises(PreconditionError):
        alpha_m_bound(5, 0, 2)


class TestOracle:
    @pytest.mark.parametrize("m, expected", [(1, 5), (2, 5), (3, 6)])
    def test_five_cycle(self, c5, m, expected):
        value, witness = brute_force_alpha_m(c5[0], m)
        assert value == expected
        assert witness.total == expected
        assert is_cross_family(c5[0], witness)

    @pytest.mark.parametrize("m, expected", [(1, 10), (2, 10), (3, 12)])
    def test_petersen(self, petersen, m, expected):
        assert brute_force_alpha_m(petersen.graph, m)[0] == expected

    def test_three_matching(self, k42):
        assert brute_force_alpha_m(k42.graph, 2)[0] == 6

    @pytest.mark.slow
    def test_kneser_seven_three(self):
        g = build_system("subsets:n=7,k=3,t=1").graph
        assert [brute_force_alpha_m(g, m)[0] for m in (1, 2, 3, 4)] == [35, 35, 45, 60]

    @pytest.mark.slow
    def test_derangement_graph_of_s4(self):
        g = build_system("perms:n=4,t=1").graph
        assert [brute_force_alpha_m(g, m)[0] for m in (2, 3, 4, 5)] == [24, 24, 24, 30]

    def test_node_cap(self, petersen):
        with pytest.raises(SearchCapExceeded):
            brute_force_alpha_m(petersen.graph, 2, node_cap=3)

    def test_m_must_be_positive(self, c5):
        with pytest.raises(PreconditionError):
            brute_force_alpha_m(c5[0], 0)

    def test_agrees_with_unreduced_search(self):
        for g in atlas(5):
            for m in (1, 2, 3):
                assert brute_force_alpha_m(g, m)[0] == unreduced_alpha_m(g, m)[0], (list(g.edges()), m)

    @pytest.mark.slow
    def test_agrees_with_unreduced_search_on_six_vertices(self):
        for g in atlas(6):
            for m in (1, 2, 3):
                assert brute_force_alpha_m(g, m)[0] == unreduced_alpha_m(g, m)[0], (list(g.edges()), m)

    def test_unreduced_witness_is_a_cross_family(self, c5):
        value, witness = unreduced_alpha_m(c5[0], 2)
        assert value == witness.total == 5
        assert is_cross_family(c5[0], witness)


class TestClassification:
    def test_petersen_below_threshold(self, petersen):
        families = enumerate_optimal_families(petersen.graph, 2)
        assert [F.to_list() for F in families] == [[list(range(10)), []]]
        report = classify_optimal(petersen.graph, petersen.generators, families[0], 4)
        assert report.case_tag == CASE_FULL
        assert not report.falsified
        assert report.warnings == ()

    def test_petersen_above_threshold(self, petersen):
        families = enumerate_optimal_families(petersen.graph, 3)
        assert len(families) == 5
        for F in families:
            assert F.parts[0] == F.parts[1] == F.parts[2]
            assert classify_optimal(petersen.graph, petersen.generators, F, 4).case_tag == CASE_COMMON_MAXIMUM

    def test_three_matching_at_threshold(self, k42):
        g = k42.graph
        report = classify_optimal(g, k42.generators, family(6, [0, 1, 4], [0, 2, 3]), 3)
        assert report.regime == AT
        assert report.case_tag == CASE_THRESHOLD_IMPRIMITIVE
        assert any("disconnected" in w for w in report.warnings)
        assert not report.falsified

    def test_three_matching_trivial_families(self, k42):
        g = k42.graph
        tags = {classify_optimal(g, k42.generators, F, 3).case_tag for F in enumerate_optimal_families(g, 2)}
        assert {CASE_THRESHOLD_TRIVIAL, CASE_THRESHOLD_IMPRIMITIVE} <= tags

    def test_review_note_for_half_size_subsets(self, k42):
        report = classify_optimal(k42.graph, k42.generators, family(6, range(6), []), 3)
        assert report.case_tag == CASE_THRESHOLD_TRIVIAL
        assert len(report.notes) == 1

    def test_missing_generators_are_a_warning(self, c5):
        g, _ = c5
        report = classify_optimal(g, None, family(5, range(5), []), 2)
        assert report.case_tag == CASE_FULL
        assert any("generator" in w for w in report.warnings)

    def test_non_optimal_family(self, petersen):
        with pytest.raises(PreconditionError):
            classify_optimal(petersen.graph, petersen.generators, family(10, [0], []), 4)

    def test_not_a_cross_family(self, k42):
        with pytest.raises(PreconditionError):
            classify_optimal(k42.graph, k42.generators, family(6, [0, 1, 2], [5, 4, 3]), 3)

    def test_enumeration_cap(self, petersen):
        assert len(enumerate_optimal_families(petersen.graph, 3, cap=2)) == 2

    def test_report_as_dict(self):
        data = alpha_m_bound(10, 4, 3).to_dict()
        assert data == {
            "m": 3, "regime": ABOVE, "bound": 12, "case": None,
            "falsified": False, "warnings": [], "notes": [],
        }


class TestStarDecomposition:
    def test_common_star(self, k42):
        d = star_decomposition(k42.graph, family(6, [0, 1, 4], [0, 2, 3]))
        assert [S.members() for S in d.stars] == [(0,), (0,)]
        assert [P.members() for P in d.primes] == [(1, 4), (2, 3)]
        assert d.star_union.members() == (0,)
        assert d.prime_union.members() == (1, 2, 3, 4)

    def test_independent_parts_are_all_star(self, petersen):
        g = petersen.graph
        d = star_decomposition(g, family(10, [0, 1, 3, 6], [0, 1, 3, 6]))
        assert not d.prime_union

    def test_needs_a_cross_family(self, k42):
        with pytest.raises(PreconditionError):
            star_decomposition(k42.graph, family(6, [0], [5]))

    @pytest.mark.parametrize("seed", range(5))
    def test_random_families(self, petersen, seed):
        rng = np.random.default_rng(seed)
        g = petersen.graph
        for _ in range(40):
            F = random_cross_family(g, int(rng.integers(1, 5)), rng)
            assert is_cross_family(g, F)
            assert check_star_decomposition(g, F).status is CheckStatus.PASS

    def test_random_family_on_an_edgeless_graph(self):
        g = SystemGraph.from_edges(4, [])
        F = random_cross_family(g, 3, np.random.default_rng(0))
        assert F.m == 3
        assert is_cross_family(g, F)


def test_oracle_respects_the_bound_on_vertex_transitive_graphs():
    for n in (5, 6, 7, 8):
        g, _ = cycle_graph(n)
        alpha = n // 2
        for m in (1, 2, 3):
            assert brute_force_alpha_m(g, m)[0] <= alpha_m_bound(n, alpha, m).bound
