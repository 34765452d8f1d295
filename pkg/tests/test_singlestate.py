from collections import Counter

import pytest
from hypothesis import given

from pdacfg import (
    P1_TEXT,
    QM,
    START,
    Pda,
    Transition,
    Triple,
    expand_push,
    make_triple,
    parse_pda,
    size_stats,
    to_single_state,
    transition_from_provenance,
)
from pdacfg.model import SsTransition

from strategies import pdas


@pytest.fixture()
def p1():
    return parse_pda(P1_TEXT)


def test_make_triple_renders_bracketed(p1):
    assert str(make_triple(p1, "q0", "Z", "q1")) == "[q0,Z,q1]"


def test_triples_compare_by_components(p1):
    assert make_triple(p1, "q0", "Z", "q0") != make_triple(p1, "q0", "Z", "q1")


def test_make_triple_rejects_undeclared_components(p1):
    with pytest.raises(ValueError):
        make_triple(p1, "q9", "Z", "q0")
    with pytest.raises(ValueError):
        make_triple(p1, "q0", "W", "q0")


def test_single_symbol_push_has_exactly_one_chain():
    assert expand_push("t", ["B"], "q", {"p", "q", "t"}) == {(Triple("t", "B", "q"),)}


def test_two_symbol_push_enumerates_the_intermediate_state():
    assert expand_push("q0", ["A", "Z"], "q1", {"q0", "q1"}) == {
        (Triple("q0", "A", "q0"), Triple("q0", "Z", "q1")),
        (Triple("q0", "A", "q1"), Triple("q1", "Z", "q1")),
    }


def test_three_symbol_push_over_two_states_gives_four_chains():
    chains = expand_push("p", ["A", "B", "C"], "q", {"p", "q"})
    assert len(chains) == 4
    for chain in chains:
        assert chain[0].from_state == "p"
        assert chain[-1].to_state == "q"
        assert [t.base for t in chain] == ["A", "B", "C"]
        for left, right in zip(chain, chain[1:]):
            assert left.to_state == right.from_state


def test_empty_push_has_no_chain():
    with pytest.raises(ValueError):
        expand_push("p", [], "q", {"p", "q"})


def test_one_state_one_pop_move_gives_exactly_two_transitions():
    p0 = Pda.make({"p"}, {"a"}, {"Z"}, {Transition("p", "a", "Z", "p", ())},
                  "p", "Z")
    sspda = to_single_state(p0)
    assert sspda.transitions == {
        SsTransition("a", Triple("p", "Z", "p"), ()),
        SsTransition(None, START, (Triple("p", "Z", "p"),)),
    }


def test_p1_count_matches_the_hand_formula(p1):
    # independent oracle: |Q| start seedings plus |Q|**push_len per move;
    # P1 has two push-2 moves (4 each), four pops (1 each), |Q| = 2
    n = len(p1.states)
    predicted = n + sum(n ** len(t.push) for t in p1.transitions)
    assert predicted == 14
    assert len(to_single_state(p1).transitions) == 14


def test_no_moves_leaves_only_start_seeding():
    pda = Pda.make({"p", "q"}, {"a", "b"}, {"Z"}, set(), "p", "Z")
    assert to_single_state(pda).transitions == {
        SsTransition(None, START, (Triple("p", "Z", "p"),)),
        SsTransition(None, START, (Triple("p", "Z", "q"),)),
    }


def test_declared_stack_alphabet_is_every_triple_plus_marker(p1):
    sspda = to_single_state(p1)
    assert len(sspda.stack_alphabet) == 2 * 2 * 2 + 1
    assert START in sspda.stack_alphabet


def test_transitions_stay_in_the_single_state(p1):
    for tr in to_single_state(p1).transitions:
        assert tr.from_state == QM
        assert tr.to_state == QM


def test_invalid_automata_are_refused():
    bad = Pda.make({"p"}, {"a"}, {"Z"}, set(), "missing", "Z")
    with pytest.raises(ValueError):
        to_single_state(bad)


def test_size_stats_on_p1(p1):
    stats = size_stats(p1)
    assert stats.q_count == 2
    assert stats.gamma_count == 2
    assert stats.source_transition_count == 6
    assert stats.triple_count == 8
    assert stats.ss_symbol_count == 9
    assert stats.predicted_ss_transitions == 14
    assert stats.actual_ss_transitions == 14
    assert stats.collision_count == 0


def test_size_stats_without_moves():
    pda = Pda.make({"p", "q"}, {"a", "b"}, {"Z"}, set(), "p", "Z")
    stats = size_stats(pda)
    assert stats.predicted_ss_transitions == 2
    assert stats.actual_ss_transitions == 2


@given(pdas())
def test_rule2_chains_are_well_formed(pda):
    sspda = to_single_state(pda)
    for tr, records in sspda.provenance.items():
        for record in records:
            if record.rule != 2:
                continue
            chain = tr.push
            assert len(chain) == len(record.source.push)
            assert chain[0].from_state == record.source.to_state
            assert chain[-1].to_state == tr.pop.to_state
            assert tuple(t.base for t in chain) == record.source.push
            for left, right in zip(chain, chain[1:]):
                assert left.to_state == right.from_state


@given(pdas())
def test_per_move_cardinalities(pda):
    sspda = to_single_state(pda)
    n = len(pda.states)
    per_move = Counter()
    seeded = 0
    for records in sspda.provenance.values():
        for record in records:
            if record.rule == 3:
                seeded += 1
            else:
                per_move[record.source] += 1
    assert seeded == n
    for move in pda.transitions:
        assert per_move[move] == n ** len(move.push)


@given(pdas())
def test_provenance_is_total_and_replays(pda):
    sspda = to_single_state(pda)
    assert set(sspda.provenance) == set(sspda.transitions)
    for tr, records in sspda.provenance.items():
        assert len(records) == 1
        assert transition_from_provenance(pda, records[0]) == tr


@given(pdas())
def test_start_marker_only_pops_in_rule3(pda):
    sspda = to_single_state(pda)
    for tr, records in sspda.provenance.items():
        assert START not in tr.push
        if tr.pop == START:
            assert all(record.rule == 3 for record in records)
        else:
            assert all(record.rule != 3 for record in records)


@given(pdas())
def test_predicted_count_decomposes_into_actual_plus_collisions(pda):
    stats = size_stats(pda)
    assert stats.predicted_ss_transitions == (
        stats.actual_ss_transitions + stats.collision_count)
