import pytest
from hypothesis import given

from pdacfg import (
    Cfg,
    P1_TEXT,
    ParseError,
    Pda,
    Transition,
    builtin_corpus,
    parse_cfg,
    parse_pda,
    parse_source,
    parse_sspda,
    render,
    to_single_state,
)

from strategies import cfgs, pdas


def test_p1_file_counts():
    pda = parse_pda(P1_TEXT)
    assert len(pda.states) == 2
    assert len(pda.input_alphabet) == 2
    assert len(pda.stack_alphabet) == 2
    assert len(pda.transitions) == 6
    assert pda.start_state == "q0"
    assert pda.start_stack == "Z"


def test_eps_keyword_makes_epsilon_move_with_empty_push():
    pda = parse_pda("states: q0\ninput: a\nstack: Z\nstart: q0\nstartstack: Z\n"
                    "q0 eps Z -> q0 eps\n")
    assert pda.transitions == {Transition("q0", None, "Z", "q0", ())}


def test_undeclared_state_reports_line_and_token():
    text = P1_TEXT.replace("q0 b A -> q1 eps", "q0 b A -> q9 eps")
    with pytest.raises(ParseError) as err:
        parse_pda(text)
    assert "q9" in str(err.value)
    assert err.value.line == 8


def test_comments_and_blank_lines_are_ignored():
    text = "# automaton\n\n" + P1_TEXT.replace(
        "q0 a Z -> q0 A Z", "q0 a Z -> q0 A Z  # push")
    assert parse_pda(text) == parse_pda(P1_TEXT)


@pytest.mark.parametrize("text, fragment", [
    ("states: q0 q1\n" + P1_TEXT, "duplicate header"),
    (P1_TEXT.replace("startstack: Z\n", ""), "missing header"),
    (P1_TEXT + "q0 a\n", "malformed transition"),
    (P1_TEXT.replace("states: q0 q1", "states:"), "empty state set"),
    (P1_TEXT + "q0 a Z -> q0 W\n", "undeclared stack symbol"),
    (P1_TEXT.replace("start: q0", "begin: q0"), "unknown header"),
])
def test_parse_pda_failures(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_pda(text)
    assert fragment in str(err.value)


def test_render_is_idempotent_on_the_corpus():
    for entry in builtin_corpus():
        once = render(entry.pda)
        assert render(parse_pda(once)) == once


def test_render_ignores_construction_order():
    moves = [Transition("q0", "a", "Z", "q0", ("A", "Z")),
             Transition("q0", None, "Z", "q0", ())]
    one = Pda.make(["q0"], ["a"], ["Z", "A"], moves, "q0", "Z")
    other = Pda.make(["q0"], ["a"], ["A", "Z"], reversed(moves), "q0", "Z")
    assert one == other
    assert render(one) == render(other)


def test_epsilon_production_renders_as_eps():
    assert render(Cfg.make({"S"}, set(), {("S", ())}, "S")) == "S -> eps\n"


def test_parse_cfg_expands_alternatives():
    cfg = parse_cfg("S -> a S b | eps\n")
    assert cfg.start == "S"
    assert cfg.productions == {("S", ("a", "S", "b")), ("S", ())}
    assert cfg.terminals == {"a", "b"}
    assert cfg.variables == {"S"}


def test_bracketed_tokens_are_always_variables():
    cfg = parse_cfg("S -> [q0,Z,q1] a\n")
    assert "[q0,Z,q1]" in cfg.variables
    assert cfg.terminals == {"a"}


def test_undeclared_terminal_with_explicit_header_fails():
    with pytest.raises(ParseError) as err:
        parse_cfg("terminals: a\nS -> a b\n")
    assert "'b'" in str(err.value)


def test_undeclared_variable_with_explicit_header_fails():
    # single-character body tokens fall back to terminals, so the undeclared
    # reference must be a head or a multi-character token
    with pytest.raises(ParseError):
        parse_cfg("variables: S\nS -> Loop a\n")
    with pytest.raises(ParseError):
        parse_cfg("variables: S\nA -> a\n")


def test_cfg_headers_cover_unreferenced_symbols():
    cfg = Cfg.make({"S", "Dead"}, {"a", "b"}, {("S", ("a",))}, "S")
    text = render(cfg)
    assert "variables:" in text and "terminals:" in text
    assert parse_cfg(text) == cfg


def test_grammar_without_productions_needs_a_start_header():
    with pytest.raises(ParseError):
        parse_cfg("# nothing here\n")
    cfg = parse_cfg("variables: S\nstart: S\n")
    assert cfg.start == "S"
    assert cfg.productions == frozenset()


def test_verbose_sspda_render_carries_provenance_comments():
    sspda = to_single_state(parse_pda(P1_TEXT))
    text = render(sspda, verbose=True)
    assert "# from: rule2 q0 a Z -> q0 A Z" in text
    assert "# from: rule3" in text
    assert parse_sspda(text) == sspda


def test_verbose_cfg_render_carries_provenance_comments():
    from pdacfg import pda_to_cfg

    cfg = pda_to_cfg(parse_pda(P1_TEXT))
    text = render(cfg, verbose=True)
    assert "# from: qm" in text
    assert parse_cfg(text) == cfg


def test_parse_source_distinguishes_the_three_formats():
    pda = parse_pda(P1_TEXT)
    assert parse_source(P1_TEXT) == pda
    sspda = to_single_state(pda)
    assert parse_source(render(sspda)) == sspda
    cfg = parse_cfg("S -> a\n")
    assert parse_source(render(cfg)) == cfg


def test_sspda_parser_rejects_pushing_the_start_marker():
    pda = Pda.make({"p"}, {"a"}, {"Z"}, {Transition("p", "a", "Z", "p", ())},
                   "p", "Z")
    text = render(to_single_state(pda))
    broken = text.replace("qm eps Zs -> qm [p,Z,p]", "qm eps Zs -> qm Zs")
    with pytest.raises(ParseError) as err:
        parse_sspda(broken)
    assert "Zs" in str(err.value)


@given(pdas())
def test_pda_round_trip(pda):
    assert parse_pda(render(pda)) == pda


@given(pdas())
def test_sspda_round_trip(pda):
    sspda = to_single_state(pda)
    assert parse_sspda(render(sspda)) == sspda


@given(cfgs())
def test_cfg_round_trip(cfg):
    assert parse_cfg(render(cfg)) == cfg
