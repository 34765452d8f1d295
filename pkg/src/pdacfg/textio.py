"""Line-oriented text formats for automata and grammars.

Both formats are UTF-8; ``#`` starts a comment running to end of line and
blank lines are ignored.  Rendering is canonical: symbols and rules come out
in lexicographic order of their textual form, so structurally equal objects
render byte-identically and ``parse(render(x)) == x``.

PDA files carry five headers (states, input, stack, start, startstack)
followed by transition lines ``FROM INPUT POP -> TO PUSH...`` where INPUT is
one character or ``eps`` and PUSH is a top-first symbol sequence or the
single token ``eps``.  Grammar files carry optional headers (variables,
terminals, start) and production lines ``HEAD -> BODY | BODY ...``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from pathlib import Path
from typing import Optional, Union

from .model import (
    QM,
    START,
    Cfg,
    Pda,
    SingleStatePda,
    SsSymbol,
    SsTransition,
    Transition,
    Triple,
    is_input_symbol,
    is_token,
)

PDA_HEADERS = ("states", "input", "stack", "start", "startstack")
CFG_HEADERS = ("variables", "terminals", "start")

_TRIPLE_RE = re.compile(r"\[([^,\s\[\]]+),([^,\s\[\]]+),([^,\s\[\]]+)\]")


class ParseError(Exception):
    """Input text could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        cut = raw.find("#")
        line = raw[:cut] if cut >= 0 else raw
        tokens = line.split()
        if tokens:
            yield lineno, tokens


def _split_headers(text: str, known: tuple[str, ...]):
    headers: dict[str, tuple[int, list[str]]] = {}
    body: list[tuple[int, list[str]]] = []
    for lineno, tokens in _content_lines(text):
        first = tokens[0]
        if first.endswith(":") and len(first) > 1:
            name = first[:-1]
            if name not in known:
                raise ParseError(lineno, f"unknown header {name!r}")
            if name in headers:
                raise ParseError(lineno, f"duplicate header {name!r}")
            headers[name] = (lineno, tokens[1:])
        else:
            body.append((lineno, tokens))
    return headers, body


def _require_headers(headers, wanted):
    for name in wanted:
        if name not in headers:
            raise ParseError(None, f"missing header {name!r}")


def _single_header_token(headers, name):
    lineno, tokens = headers[name]
    if len(tokens) != 1:
        raise ParseError(lineno, f"header {name!r} needs exactly one symbol")
    return lineno, tokens[0]


def parse_ss_symbol(token: str) -> Optional[SsSymbol]:
    """Decode ``Zs`` or a ``[p,X,q]`` triple token; None if neither."""
    if token == "Zs":
        return START
    match = _TRIPLE_RE.fullmatch(token)
    if match and all(is_token(part) for part in match.groups()):
        return Triple(*match.groups())
    return None


def parse_pda(text: str) -> Pda:
    """Parse the multistate PDA file format.

    Headers may appear in any order and anywhere in the file; references are
    validated against the declared sets, with errors reported at the line
    that made them.
    """
    headers, move_lines = _split_headers(text, PDA_HEADERS)
    _require_headers(headers, PDA_HEADERS)

    lineno, tokens = headers["states"]
    if not tokens:
        raise ParseError(lineno, "empty state set")
    states = set()
    for tok in tokens:
        if not is_token(tok):
            raise ParseError(lineno, f"invalid state name {tok!r}")
        states.add(tok)

    lineno, tokens = headers["input"]
    input_alphabet = set()
    for tok in tokens:
        if not is_input_symbol(tok):
            raise ParseError(lineno, f"invalid input symbol {tok!r}")
        input_alphabet.add(tok)

    lineno, tokens = headers["stack"]
    stack_alphabet = set()
    for tok in tokens:
        if not is_token(tok):
            raise ParseError(lineno, f"invalid stack symbol {tok!r}")
        stack_alphabet.add(tok)

    lineno, start_state = _single_header_token(headers, "start")
    if start_state not in states:
        raise ParseError(lineno, f"undeclared state {start_state!r}")
    lineno, start_stack = _single_header_token(headers, "startstack")
    if start_stack not in stack_alphabet:
        raise ParseError(lineno, f"undeclared stack symbol {start_stack!r}")

    transitions = set()
    for lineno, tokens in move_lines:
        transitions.add(
            _parse_move(lineno, tokens, states, input_alphabet, stack_alphabet))
    return Pda.make(states, input_alphabet, stack_alphabet, transitions,
                    start_state, start_stack)


def _parse_move(lineno, tokens, states, input_alphabet, stack_alphabet):
    if len(tokens) < 6 or tokens[3] != "->":
        raise ParseError(
            lineno, "malformed transition line (want: FROM INPUT POP -> TO PUSH...)")
    frm, inp_tok, pop, to = tokens[0], tokens[1], tokens[2], tokens[4]
    push_toks = tokens[5:]
    if frm not in states:
        raise ParseError(lineno, f"undeclared state {frm!r}")
    if to not in states:
        raise ParseError(lineno, f"undeclared state {to!r}")
    if inp_tok == "eps":
        inp = None
    else:
        if not is_input_symbol(inp_tok):
            raise ParseError(lineno, f"invalid input symbol {inp_tok!r}")
        if inp_tok not in input_alphabet:
            raise ParseError(lineno, f"undeclared input symbol {inp_tok!r}")
        inp = inp_tok
    if pop not in stack_alphabet:
        raise ParseError(lineno, f"undeclared stack symbol {pop!r}")
    if push_toks == ["eps"]:
        push: tuple[str, ...] = ()
    else:
        if "eps" in push_toks:
            raise ParseError(lineno, "eps cannot appear inside a push sequence")
        for tok in push_toks:
            if tok not in stack_alphabet:
                raise ParseError(lineno, f"undeclared stack symbol {tok!r}")
        push = tuple(push_toks)
    return Transition(frm, inp, pop, to, push)


def parse_sspda(text: str) -> SingleStatePda:
    """Parse a single-state PDA file: same line format; the state must be
    ``qm``, the start stack ``Zs``, and stack symbols Zs or triple tokens."""
    headers, move_lines = _split_headers(text, PDA_HEADERS)
    _require_headers(headers, PDA_HEADERS)

    lineno, tokens = headers["states"]
    if tokens != [QM]:
        raise ParseError(lineno, f"single-state automaton must declare exactly the state {QM!r}")
    lineno, tokens = headers["input"]
    input_alphabet = set()
    for tok in tokens:
        if not is_input_symbol(tok):
            raise ParseError(lineno, f"invalid input symbol {tok!r}")
        input_alphabet.add(tok)

    lineno, tokens = headers["stack"]
    stack_alphabet: set[SsSymbol] = set()
    for tok in tokens:
        sym = parse_ss_symbol(tok)
        if sym is None:
            raise ParseError(lineno, f"invalid stack symbol {tok!r} (want Zs or [p,X,q])")
        stack_alphabet.add(sym)
    if START not in stack_alphabet:
        raise ParseError(lineno, "stack alphabet must contain Zs")

    lineno, tok = _single_header_token(headers, "start")
    if tok != QM:
        raise ParseError(lineno, f"start state must be {QM!r}")
    lineno, tok = _single_header_token(headers, "startstack")
    if tok != "Zs":
        raise ParseError(lineno, "start stack symbol must be Zs")

    transitions = set()
    for lineno, tokens in move_lines:
        if len(tokens) < 6 or tokens[3] != "->":
            raise ParseError(
                lineno, "malformed transition line (want: FROM INPUT POP -> TO PUSH...)")
        if tokens[0] != QM or tokens[4] != QM:
            raise ParseError(lineno, f"transitions must stay in state {QM!r}")
        inp_tok = tokens[1]
        if inp_tok == "eps":
            inp = None
        else:
            if not is_input_symbol(inp_tok):
                raise ParseError(lineno, f"invalid input symbol {inp_tok!r}")
            if inp_tok not in input_alphabet:
                raise ParseError(lineno, f"undeclared input symbol {inp_tok!r}")
            inp = inp_tok
        pop = parse_ss_symbol(tokens[2])
        if pop is None or pop not in stack_alphabet:
            raise ParseError(lineno, f"undeclared stack symbol {tokens[2]!r}")
        push_toks = tokens[5:]
        if push_toks == ["eps"]:
            push: tuple[SsSymbol, ...] = ()
        else:
            if "eps" in push_toks:
                raise ParseError(lineno, "eps cannot appear inside a push sequence")
            decoded = []
            for tok in push_toks:
                sym = parse_ss_symbol(tok)
                if sym is None or sym not in stack_alphabet:
                    raise ParseError(lineno, f"undeclared stack symbol {tok!r}")
                if sym == START:
                    raise ParseError(lineno, "Zs cannot be pushed")
                decoded.append(sym)
            push = tuple(decoded)
        transitions.add(SsTransition(inp, pop, push))
    return SingleStatePda(
        input_alphabet=frozenset(input_alphabet),
        stack_alphabet=frozenset(stack_alphabet),
        transitions=frozenset(transitions),
    )


def _is_variable_token(tok: str) -> bool:
    return is_token(tok) or parse_ss_symbol(tok) is not None


def parse_cfg(text: str) -> Cfg:
    """Parse the grammar file format, expanding ``|`` alternatives.

    Bracketed tokens and ``Zs`` are always variables; with no headers the
    variables are the production heads plus every multi-character body token,
    remaining single-character tokens are terminals, and the start symbol is
    the head of the first production line.
    """
    headers, prod_lines = _split_headers(text, CFG_HEADERS)

    declared_vars = None
    if "variables" in headers:
        lineno, tokens = headers["variables"]
        declared_vars = set()
        for tok in tokens:
            if not _is_variable_token(tok):
                raise ParseError(lineno, f"invalid variable {tok!r}")
            declared_vars.add(tok)
    declared_terms = None
    if "terminals" in headers:
        lineno, tokens = headers["terminals"]
        declared_terms = set()
        for tok in tokens:
            if not is_input_symbol(tok):
                raise ParseError(lineno, f"invalid terminal {tok!r}")
            declared_terms.add(tok)

    raw_prods: list[tuple[int, str, tuple[str, ...]]] = []
    first_head = None
    for lineno, tokens in prod_lines:
        if len(tokens) < 3 or tokens[1] != "->":
            raise ParseError(lineno, "malformed production line (want: HEAD -> BODY | BODY ...)")
        head = tokens[0]
        if not _is_variable_token(head):
            raise ParseError(lineno, f"invalid variable {head!r}")
        if first_head is None:
            first_head = head
        alt: list[str] = []
        for tok in tokens[2:] + ["|"]:
            if tok != "|":
                alt.append(tok)
                continue
            if alt == ["eps"]:
                body: tuple[str, ...] = ()
            else:
                if not alt:
                    raise ParseError(lineno, "empty alternative")
                if "eps" in alt:
                    raise ParseError(lineno, "eps cannot appear inside a body")
                for sym in alt:
                    if not (_is_variable_token(sym) or is_input_symbol(sym)):
                        raise ParseError(lineno, f"invalid symbol {sym!r}")
                body = tuple(alt)
            raw_prods.append((lineno, head, body))
            alt = []

    if declared_vars is not None:
        variables = set(declared_vars)
    else:
        variables = {head for _, head, _ in raw_prods}
        for _, _, body in raw_prods:
            for tok in body:
                if parse_ss_symbol(tok) is not None or len(tok) > 1:
                    variables.add(tok)

    if "start" in headers:
        lineno, start = _single_header_token(headers, "start")
        if not _is_variable_token(start):
            raise ParseError(lineno, f"invalid variable {start!r}")
        if declared_vars is not None and start not in variables:
            raise ParseError(lineno, f"undeclared variable {start!r}")
        variables.add(start)
    elif first_head is not None:
        start = first_head
    else:
        raise ParseError(None, "grammar has no productions and no start header")

    terminals = set()
    for lineno, head, body in raw_prods:
        if head not in variables:
            raise ParseError(lineno, f"undeclared variable {head!r}")
        for tok in body:
            if tok in variables:
                continue
            if parse_ss_symbol(tok) is not None or len(tok) > 1:
                raise ParseError(lineno, f"undeclared variable {tok!r}")
            if declared_terms is not None and tok not in declared_terms:
                raise ParseError(lineno, f"undeclared terminal {tok!r}")
            terminals.add(tok)
    if declared_terms is not None:
        terminals = set(declared_terms)

    overlap = variables & terminals
    if overlap:
        raise ParseError(None, f"symbol {sorted(overlap)[0]!r} declared both variable and terminal")

    return Cfg.make(variables, terminals,
                    {(head, body) for _, head, body in raw_prods}, start)


def _header_line(name: str, symbols) -> str:
    rest = " ".join(symbols)
    return f"{name}: {rest}" if rest else f"{name}:"


def _render_pda(pda: Pda) -> str:
    lines = [
        _header_line("states", sorted(pda.states)),
        _header_line("input", sorted(pda.input_alphabet)),
        _header_line("stack", sorted(pda.stack_alphabet)),
        f"start: {pda.start_state}",
        f"startstack: {pda.start_stack}",
    ]
    lines.extend(sorted(str(t) for t in pda.transitions))
    return "\n".join(lines) + "\n"


def _render_sspda(sspda: SingleStatePda, verbose: bool) -> str:
    lines = [
        f"states: {QM}",
        _header_line("input", sorted(sspda.input_alphabet)),
        _header_line("stack", sorted(str(s) for s in sspda.stack_alphabet)),
        f"start: {QM}",
        "startstack: Zs",
    ]
    for t in sorted(sspda.transitions, key=str):
        line = str(t)
        if verbose and sspda.provenance and t in sspda.provenance:
            line += "  # from: " + "; ".join(str(p) for p in sspda.provenance[t])
        lines.append(line)
    return "\n".join(lines) + "\n"


def _body_text(body: tuple[str, ...]) -> str:
    return " ".join(body) if body else "eps"


def _render_cfg(cfg: Cfg, verbose: bool) -> str:
    by_head = defaultdict(list)
    for head, body in cfg.productions:
        by_head[head].append(body)
    heads = sorted(by_head)

    prod_lines = []
    for head in heads:
        bodies = sorted(by_head[head], key=_body_text)
        if verbose:
            for body in bodies:
                line = f"{head} -> {_body_text(body)}"
                if cfg.origins and (head, body) in cfg.origins:
                    line += "  # from: " + "; ".join(cfg.origins[(head, body)])
                prod_lines.append(line)
        else:
            prod_lines.append(f"{head} -> " + " | ".join(_body_text(b) for b in bodies))

    # Emit a header only when a parser could not infer that set from the
    # production lines alone.
    vars_inferred = set(heads)
    for _, body in cfg.productions:
        for tok in body:
            if parse_ss_symbol(tok) is not None or len(tok) > 1:
                vars_inferred.add(tok)
    terms_inferred = {
        tok for _, body in cfg.productions for tok in body if tok not in vars_inferred}

    header_lines = []
    if cfg.variables != vars_inferred:
        header_lines.append(_header_line("variables", sorted(cfg.variables)))
    if cfg.terminals != terms_inferred:
        header_lines.append(_header_line("terminals", sorted(cfg.terminals)))
    if not heads or cfg.start != heads[0]:
        header_lines.append(f"start: {cfg.start}")
    return "\n".join(header_lines + prod_lines) + "\n"


def render(obj: Union[Pda, SingleStatePda, Cfg], verbose: bool = False) -> str:
    """Canonical text for an automaton or grammar.

    With ``verbose``, single-state transitions and constructed productions
    carry trailing ``# from: ...`` provenance comments.
    """
    if isinstance(obj, Pda):
        return _render_pda(obj)
    if isinstance(obj, SingleStatePda):
        return _render_sspda(obj, verbose)
    if isinstance(obj, Cfg):
        return _render_cfg(obj, verbose)
    raise TypeError(f"cannot render {type(obj).__name__}")


def parse_source(text: str) -> Union[Pda, SingleStatePda, Cfg]:
    """Parse text as whichever of the three formats it is.

    A ``states:`` header marks the PDA family; bracketed stack symbols mark
    the single-state variant.  Everything else parses as a grammar.
    """
    is_pda = any(tokens[0] == "states:" for _, tokens in _content_lines(text))
    if not is_pda:
        return parse_cfg(text)
    for _, tokens in _content_lines(text):
        if tokens[0] == "stack:" and any(t.startswith("[") for t in tokens[1:]):
            return parse_sspda(text)
    return parse_pda(text)


def load_source(path) -> Union[Pda, SingleStatePda, Cfg]:
    """Read and parse a file via parse_source."""
    return parse_source(Path(path).read_text(encoding="utf-8"))
