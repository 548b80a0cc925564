"""
Tests for the Element Selecting Game, its builder and the text format
"""
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from src.esg import (
    ESGInstance,
    ESGState,
    EquivalenceReport,
    JRule,
    Picker,
    build_esg,
    completed,
    consistent_rules,
    format_esg_text,
    parse_esg_text,
    select_j_rule,
    solve_esg,
    verify_equivalence
)
from src.game import Player
from src.gst import Fallback, classify
from src.utils import MalformedInputError, UnsupportedConfigurationError


def _instance(sets, rounds, universe="abcd"):
    return ESGInstance(universe=tuple(universe), sets=tuple(frozenset(s) for s in sets), rounds=rounds)


class TestSolve:

    def test_two_pairs(self):
        assert solve_esg(_instance(["ab", "cd"], 1)) is Picker.DAN
        assert solve_esg(_instance(["ab", "cd"], 2)) is Picker.MARY

    def test_forced_completion_by_dan(self):
        assert solve_esg(_instance(["ab"], 1, universe="ab")) is Picker.MARY

    def test_empty_set_is_an_immediate_win(self):
        assert solve_esg(_instance(["ab", ""], 0)) is Picker.MARY

    def test_no_rounds(self):
        assert solve_esg(_instance(["a"], 0)) is Picker.DAN

    def test_singleton_set(self):
        assert solve_esg(_instance(["a", "bcd"], 1)) is Picker.MARY

    def test_no_sets(self):
        assert solve_esg(_instance([], 3)) is Picker.DAN

    def test_state(self):
        state = ESGState(selected=frozenset("ab"), rounds=2)
        assert state.picks == 2
        assert state.next_picker is Picker.MARY
        assert state.rounds_remaining == 1
        assert completed(_instance(["ab"], 2), state.selected)

    def test_state_select(self):
        state = ESGState(rounds=1).select("a")
        assert state.next_picker is Picker.DAN
        assert state.select("b").rounds_remaining == 0
        with pytest.raises(ValueError, match="already selected"):
            state.select("a")

    def test_validation(self):
        with pytest.raises(ValueError):
            _instance(["ax"], 1)
        with pytest.raises(ValueError):
            _instance(["ab"], -1)
        with pytest.raises(ValueError):
            ESGInstance(universe=("a", "a"), sets=(), rounds=1)

    @given(
        st.lists(st.sets(st.sampled_from("abcde"), min_size=1, max_size=3), min_size=1, max_size=4),
        st.integers(min_value=0, max_value=3)
    )
    @hyp_settings(max_examples=60, deadline=None)
    def test_more_rounds_never_hurt_mary(self, sets, rounds):
        instance = _instance(sets, rounds, universe="abcde")
        if solve_esg(instance) is Picker.MARY:
            assert solve_esg(instance.with_rounds(rounds + 1)) is Picker.MARY

    @given(
        st.lists(st.sets(st.sampled_from("abcd"), min_size=1, max_size=3), min_size=1, max_size=3),
        st.sets(st.sampled_from("abcd"), min_size=1, max_size=2),
        st.integers(min_value=0, max_value=2)
    )
    @hyp_settings(max_examples=60, deadline=None)
    def test_extra_set_never_hurts_mary(self, sets, extra, rounds):
        instance = _instance(sets, rounds)
        if solve_esg(instance) is Picker.MARY:
            assert solve_esg(instance.with_set(extra)) is Picker.MARY


class TestBuilder:

    def test_two_pebbles_on_x(self, g22_edge):
        instance = build_esg(g22_edge, (0, 7, 2, 0, 0), JRule.CAPPED_BY_X)
        assert instance.universe == (3, 4)
        assert instance.sets == (frozenset({3, 4}), frozenset({3, 4}))
        assert instance.rounds == 0
        assert solve_esg(instance) is Picker.DAN

    def test_paper_k_rounds(self, g22_edge):
        instance = build_esg(g22_edge, (0, 7, 2, 0, 0), JRule.PAPER_K)
        assert instance.rounds == 1
        assert solve_esg(instance) is Picker.MARY

    def test_pebbled_vertex_contributes_its_free_neighbors(self, g32):
        instance = build_esg(g32, (0, 7, 2, 1, 0, 0), JRule.PAPER_K)
        assert instance.universe == (4, 5)
        assert instance.sets == (frozenset(), frozenset({4}), frozenset({5}))

    def test_rounds_rule(self):
        assert JRule.PAPER_K.rounds(4, 2) == 2
        assert JRule.CAPPED_BY_X.rounds(4, 2) == 0
        assert JRule.CAPPED_BY_X.rounds(4, 4) == 1
        assert JRule.CAPPED_BY_X.rounds(4, 12) == 2

    def test_six_cycle_rounds_decide_the_picker(self):
        from src.graphs import GstDescriptor

        c6 = GstDescriptor(s=6, t=2, h_edges=frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)}))
        config = (0, 11, 6, 0, 0, 0, 0, 0, 0)
        capped = build_esg(c6, config, JRule.CAPPED_BY_X)
        assert capped.rounds == 2
        assert all(len(s) == 3 for s in capped.sets)
        assert solve_esg(capped) is Picker.DAN
        assert solve_esg(build_esg(c6, config, JRule.PAPER_K)) is Picker.MARY

    def test_default_rule(self):
        assert JRule.default() is JRule.CAPPED_BY_X

    def test_not_boundary(self, g22_edge):
        with pytest.raises(UnsupportedConfigurationError):
            build_esg(g22_edge, (0, 7, 3, 0, 0))


class TestEquivalence:

    def test_report_matches_classifier(self, g22_edge):
        config = (0, 7, 2, 0, 0)
        report = verify_equivalence(g22_edge, config)
        assert report.brute is classify(g22_edge, config, Fallback.BRUTE_FORCE).winner
        assert set(report.esg) == set(JRule)
        assert report.to_dict()["config"] == list(config)

    def _report(self, g22_edge, brute, half_k, capped):
        return EquivalenceReport(
            descriptor=g22_edge, config=(0, 7, 2, 0, 0), brute=brute,
            esg={JRule.PAPER_K: half_k, JRule.CAPPED_BY_X: capped}
        )

    def test_agreeing(self, g22_edge):
        report = self._report(g22_edge, Player.DEFENDER, Picker.MARY, Picker.DAN)
        assert report.agreeing == [JRule.CAPPED_BY_X]

    def test_rule_selection(self, g22_edge):
        both = self._report(g22_edge, Player.MOVER, Picker.MARY, Picker.MARY)
        paper_only = self._report(g22_edge, Player.MOVER, Picker.MARY, Picker.DAN)
        assert consistent_rules([both]) == (JRule.PAPER_K, JRule.CAPPED_BY_X)
        assert select_j_rule([both]) is JRule.CAPPED_BY_X
        assert consistent_rules([both, paper_only]) == (JRule.PAPER_K,)
        assert select_j_rule([both, paper_only]) is JRule.PAPER_K

    def test_no_consistent_rule(self, g22_edge):
        neither = self._report(g22_edge, Player.MOVER, Picker.DAN, Picker.DAN)
        assert consistent_rules([neither]) == ()
        assert select_j_rule([neither]) is None


class TestTextFormat:

    def test_parse(self):
        instance = parse_esg_text("4 2 1\na b c d\na b\nc d\n")
        assert instance == _instance(["ab", "cd"], 1)

    def test_blank_line_is_an_empty_set(self):
        instance = parse_esg_text("2 2 0\na b\na\n\n")
        assert instance.sets == (frozenset({"a"}), frozenset())

    def test_trailing_empty_set_needs_its_line(self):
        assert parse_esg_text("1 1 0\na\n\n").sets == (frozenset(),)
        with pytest.raises(MalformedInputError, match="declares 1 sets but has 0"):
            parse_esg_text("1 1 0\na\n")

    def test_format_with_empty_set_parses_back(self):
        instance = _instance(["ab", ""], 2)
        assert parse_esg_text(format_esg_text(instance)) == instance

    def test_format(self):
        assert format_esg_text(_instance(["ba", "cd"], 1)) == "4 2 1\na b c d\na b\nc d\n"

    @pytest.mark.parametrize("text", [
        "",
        "4 2\na b c d\n",
        "2 1 1\na\na\n",
        "2 1 1\na a\na\n",
        "2 3 1\na b\na\n",
        "2 1 1\na b\nz\n",
        "2 1 1\na b\na\nb\n",
        "2 1 -1\na b\na\n",
        "2 2 1\na b\na\n",
        "1 1 0\na\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(MalformedInputError):
            parse_esg_text(text)
