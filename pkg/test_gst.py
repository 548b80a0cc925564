"""
Tests for the G_{s,t} view, the closed forms and the rule-based classifier
"""
import pytest

from src.game import GameSolver, Player
from src.graphs import GstDescriptor, all_labeled_h
from src.gst import (
    Fallback,
    Rule,
    classify,
    closed_neighborhood_pebbled,
    esg_sets,
    eta_gst_formula,
    eta_multipartite_formula,
    four_pebble_defender_literal,
    four_pebble_defender_working,
    four_pebble_mover_condition,
    gin_g_witness,
    is_boundary,
    literal_clause_disagrees,
    multipartite_boundary_winner,
    multipartite_max_over_roots,
    multipartite_parts,
    nontrivial_configurations,
    view
)
from src.utils import InvalidGraphError, OutOfScopeError


class TestView:

    def test_quantities(self, g32):
        cv = view(g32, (0, 3, 2, 1, 1, 0))
        assert (cv.k, cv.c_t, cv.t_evens, cv.trivial) == (1, 2, (2,), False)
        assert cv.s0 == frozenset({5}) and cv.s1 == frozenset({3, 4})
        assert cv.to_dict() == {"k": 1, "C_T": 2, "T_parities": [1, 0], "trivial": False, "x": 2}

    def test_trivial(self, g32):
        assert view(g32, (1, 0, 0, 0, 0, 0)).trivial
        assert view(g32, (0, 0, 0, 2, 0, 0)).trivial

    def test_boundary(self, g22_edge):
        assert view(g22_edge, (0, 7, 2, 0, 0)).is_boundary
        assert is_boundary(g22_edge, (0, 7, 2, 0, 0))
        assert not is_boundary(g22_edge, (0, 7, 3, 0, 0))
        assert not is_boundary(g22_edge, (0, 8, 0, 0, 0))

    def test_wrong_length(self, g32):
        with pytest.raises(InvalidGraphError):
            view(g32, (0, 1, 2))

    def test_nontrivial_configurations(self):
        descriptor = GstDescriptor(s=1, t=2)
        configs = list(nontrivial_configurations(descriptor, 2))
        assert len(configs) == 9
        assert all(c[0] == 0 and c[3] <= 1 and sum(c) <= 2 for c in configs)
        assert len(set(configs)) == 9


class TestFormulas:

    @pytest.mark.parametrize("s,t,expected", [(4, 2, 14), (3, 2, 11), (1, 2, 7), (2, 3, 11)])
    def test_gst(self, s, t, expected):
        assert eta_gst_formula(s, t) == expected

    def test_gst_scope(self):
        with pytest.raises(OutOfScopeError):
            eta_gst_formula(2, 1)
        with pytest.raises(OutOfScopeError):
            eta_gst_formula(0, 2)

    @pytest.mark.parametrize("parts,expected", [([3, 3], 11), ([3, 3, 3], 18), ([3, 4], 14), ([4, 3], 14)])
    def test_multipartite(self, parts, expected):
        assert eta_multipartite_formula(parts) == expected
        assert multipartite_max_over_roots(parts) == expected

    def test_multipartite_scope(self):
        with pytest.raises(OutOfScopeError):
            eta_multipartite_formula([2, 3])
        with pytest.raises(OutOfScopeError):
            eta_multipartite_formula([5])

    @pytest.mark.parametrize("counts,c_x,expected", [
        ((2, 2), 6, Player.MOVER),
        ((2, 2), 4, Player.DEFENDER),
        ((1, 1, 1, 1), 4, Player.DEFENDER),
        ((1, 1, 1, 1), 6, Player.MOVER),
        ((4, 2), 6, Player.MOVER),
        ((4, 2), 4, Player.DEFENDER),
    ])
    def test_multipartite_boundary(self, counts, c_x, expected):
        assert multipartite_boundary_winner(counts, c_x) is expected

    def test_multipartite_boundary_scope(self):
        with pytest.raises(OutOfScopeError):
            multipartite_boundary_winner((1, 2), 4)
        with pytest.raises(OutOfScopeError):
            multipartite_boundary_winner((2, 2), 5)

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    @pytest.mark.parametrize("t", [2, 3])
    def test_witness_size(self, s, t):
        witness = gin_g_witness(s, t)
        assert len(witness) == 1 + t + s
        assert sum(witness) == eta_gst_formula(s, t) - 1
        assert witness[0] == 0

    def test_witness_shapes(self):
        assert gin_g_witness(2, 2) == (0, 0, 9, 0, 0)
        assert gin_g_witness(1, 3) == (0, 0, 1, 5, 1)

    def test_odd_witness_is_a_defender_win(self):
        descriptor = GstDescriptor(s=1, t=2)
        solver = GameSolver(descriptor.to_graph())
        assert solver.solve_config(gin_g_witness(1, 2)) is Player.DEFENDER


class TestClassifier:

    def test_t_below_two(self):
        with pytest.raises(OutOfScopeError):
            classify(GstDescriptor(s=2, t=1), (0, 3, 0, 0))

    @pytest.mark.parametrize("config,winner,rule", [
        ((1, 0, 0, 0, 0), Player.MOVER, Rule.TRIVIAL),
        ((0, 1, 1, 0, 0), Player.DEFENDER, Rule.K_EVEN_TABLE),
        ((0, 11, 0, 0, 0), Player.MOVER, Rule.K_EVEN_TABLE),
        ((0, 7, 3, 0, 0), Player.MOVER, Rule.ALL_ODD_T),
        ((0, 8, 0, 0, 0), Player.DEFENDER, Rule.MULTI_EVEN_T),
        ((0, 4, 4, 0, 0), Player.DEFENDER, Rule.MULTI_EVEN_T),
        ((0, 5, 4, 0, 0), Player.MOVER, Rule.CX_AT_LEAST_K_PLUS_2),
        ((0, 7, 2, 0, 0), Player.DEFENDER, Rule.CX_TWO_DEFENDER),
    ])
    def test_rules_on_g22(self, g22_edge, config, winner, rule):
        outcome = classify(g22_edge, config)
        assert (outcome.winner, outcome.rule) == (winner, rule)

    def test_k_odd_table(self, g32):
        assert classify(g32, (0, 3, 2, 1, 1, 0)).rule is Rule.K_ODD_TABLE
        assert classify(g32, (0, 3, 2, 1, 1, 0)).winner is Player.MOVER
        assert classify(g32, (0, 1, 2, 1, 1, 0)).winner is Player.DEFENDER

    def test_closed_neighborhood_pebbled(self, g32):
        outcome = classify(g32, (0, 7, 2, 1, 0, 0))
        assert (outcome.winner, outcome.rule) == (Player.MOVER, Rule.CLOSED_NEIGHBORHOOD_PEBBLED)
        assert closed_neighborhood_pebbled(outcome.view)

    def test_four_pebbles_matching_is_defender(self):
        descriptor = GstDescriptor(s=4, t=2, h_edges=frozenset({(0, 1), (2, 3)}))
        outcome = classify(descriptor, (0, 9, 4, 0, 0, 0, 0))
        assert (outcome.winner, outcome.rule) == (Player.DEFENDER, Rule.CX_FOUR_COROLLARY)
        assert not four_pebble_mover_condition(outcome.view)
        assert four_pebble_defender_working(outcome.view)

    def test_four_pebbles_star_is_mover(self):
        descriptor = GstDescriptor(s=4, t=2, h_edges=frozenset({(0, 1), (0, 2), (0, 3)}))
        outcome = classify(descriptor, (0, 9, 4, 0, 0, 0, 0))
        assert (outcome.winner, outcome.rule) == (Player.MOVER, Rule.CX_FOUR_COROLLARY)
        assert four_pebble_mover_condition(outcome.view)

    def test_literal_clause_misses_a_singleton_set(self):
        descriptor = GstDescriptor(s=4, t=2, h_edges=frozenset({(0, 1)}))
        outcome = classify(descriptor, (0, 9, 4, 0, 0, 0, 0))
        cv = outcome.view
        assert frozenset({5}) in esg_sets(cv)
        assert four_pebble_defender_literal(cv)
        assert not four_pebble_defender_working(cv)
        assert outcome.winner is Player.MOVER
        assert literal_clause_disagrees(cv, Player.MOVER)
        assert not literal_clause_disagrees(cv, Player.DEFENDER)

    def test_outcome_to_dict(self, g22_edge):
        data = classify(g22_edge, (0, 7, 2, 0, 0)).to_dict()
        assert data["rule"] == "C(x)=2-defender"
        assert data["winner"] == "defender"
        assert data["k"] == 2 and data["C_T"] == 4 and data["T_parities"] == [1, 0]

    @pytest.mark.parametrize("s", [1, 2])
    @pytest.mark.parametrize("t", [2, 3])
    def test_agrees_with_brute_force(self, s, t):
        for h in all_labeled_h(s):
            descriptor = GstDescriptor(s=s, t=t, h_edges=h)
            solver = GameSolver(descriptor.to_graph())
            for config in nontrivial_configurations(descriptor, 8):
                outcome = classify(descriptor, config, Fallback.BRUTE_FORCE, solver=solver)
                assert outcome.winner is solver.solve_config(config), (descriptor.label(), config, outcome.rule)


class TestMultipartiteParts:

    def test_edgeless_is_one_part(self, g32):
        assert multipartite_parts(g32) == [frozenset({3, 4, 5})]

    def test_complete_h(self, g22_edge):
        assert multipartite_parts(g22_edge) == [frozenset({3}), frozenset({4})]

    def test_path_of_three(self):
        descriptor = GstDescriptor(s=3, t=2, h_edges=frozenset({(0, 1), (1, 2)}))
        assert multipartite_parts(descriptor) == [frozenset({3, 5}), frozenset({4})]

    def test_path_of_four_is_not_multipartite(self):
        descriptor = GstDescriptor(s=4, t=2, h_edges=frozenset({(0, 1), (1, 2), (2, 3)}))
        assert multipartite_parts(descriptor) is None


class TestLargeRulesAgainstBruteForce:
    """Rules that only fire from 13 pebbles up, solved exhaustively"""

    @pytest.mark.slow
    @pytest.mark.parametrize("h_edges", [
        {(0, 1), (2, 3)},
        {(0, 1), (0, 2), (0, 3)},
        {(0, 1)},
    ])
    def test_four_pebble_rule(self, h_edges):
        descriptor = GstDescriptor(s=4, t=2, h_edges=frozenset(h_edges))
        config = (0, 9, 4, 0, 0, 0, 0)
        outcome = classify(descriptor, config)
        assert outcome.rule is Rule.CX_FOUR_COROLLARY
        assert outcome.winner is GameSolver(descriptor.to_graph()).solve_config(config)

    @pytest.mark.slow
    @pytest.mark.parametrize("h_edges,winner", [
        ({(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)}, Player.DEFENDER),
        ({(0, 1)}, Player.MOVER),
    ])
    def test_esg_fallback(self, h_edges, winner):
        descriptor = GstDescriptor(s=6, t=2, h_edges=frozenset(h_edges))
        config = (0, 11, 6, 0, 0, 0, 0, 0, 0)
        outcome = classify(descriptor, config)
        assert (outcome.winner, outcome.rule) == (winner, Rule.ESG_FALLBACK)
        assert outcome.winner is GameSolver(descriptor.to_graph()).solve_config(config)

    @pytest.mark.slow
    @pytest.mark.parametrize("h_edges,winner", [
        (set(), Player.MOVER),
        ({(a, b) for a in range(3) for b in range(3, 6)}, Player.DEFENDER),
    ])
    def test_multipartite_rule(self, h_edges, winner):
        descriptor = GstDescriptor(s=6, t=2, h_edges=frozenset(h_edges))
        config = (0, 11, 6, 0, 0, 0, 0, 0, 0)
        outcome = classify(descriptor, config)
        assert (outcome.winner, outcome.rule) == (winner, Rule.MULTIPARTITE_S)
        assert outcome.winner is GameSolver(descriptor.to_graph()).solve_config(config)
