"""Data model for pushdown automata, single-state automata, and grammars.

Automata accept by empty stack and carry a set-valued (nondeterministic)
transition relation.  Epsilon is modeled as ``None`` in transition inputs and
as an empty push sequence; the text formats spell it ``eps``.  Every type is
immutable and hashable, so structural equality and use as set elements work
throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

QM = "qm"  # canonical name of the sole state of a single-state PDA

_FORBIDDEN_IN_TOKENS = set(", \t\r\n[]#|:")
_RESERVED_TOKENS = {"eps", "->"}


def is_token(name: str) -> bool:
    """True if ``name`` can serve as a state name or stack-symbol name."""
    if not name or name in _RESERVED_TOKENS:
        return False
    return not any(ch in _FORBIDDEN_IN_TOKENS for ch in name)


def is_input_symbol(ch: str) -> bool:
    """True if ``ch`` is a single printable character usable as input."""
    return len(ch) == 1 and ch.isprintable() and not ch.isspace() and ch not in "#|"


@dataclass(frozen=True)
class Transition:
    """One move of a multistate PDA.

    ``input`` is ``None`` for an epsilon move.  ``push`` is top-first: its
    first element ends up on top of the stack and is popped first.
    """

    from_state: str
    input: Optional[str]
    pop: str
    to_state: str
    push: tuple[str, ...] = ()

    def __str__(self) -> str:
        inp = "eps" if self.input is None else self.input
        rhs = " ".join(self.push) if self.push else "eps"
        return f"{self.from_state} {inp} {self.pop} -> {self.to_state} {rhs}"


@dataclass(frozen=True)
class Pda:
    """Nondeterministic pushdown automaton accepting by empty stack."""

    states: frozenset[str]
    input_alphabet: frozenset[str]
    stack_alphabet: frozenset[str]
    transitions: frozenset[Transition]
    start_state: str
    start_stack: str

    @classmethod
    def make(cls, states, input_alphabet, stack_alphabet, transitions,
             start_state, start_stack) -> "Pda":
        """Build a Pda from arbitrary iterables.  No validation happens here;
        ill-formed automata are constructible and reported by validate_pda."""
        return cls(
            states=frozenset(states),
            input_alphabet=frozenset(input_alphabet),
            stack_alphabet=frozenset(stack_alphabet),
            transitions=frozenset(transitions),
            start_state=start_state,
            start_stack=start_stack,
        )


@dataclass(frozen=True)
class Triple:
    """Composite stack symbol [p,X,q]: starting in state p with X on top of
    the stack, the automaton can consume some input, pop X off, and end in
    state q."""

    from_state: str
    base: str
    to_state: str

    def __str__(self) -> str:
        return f"[{self.from_state},{self.base},{self.to_state}]"


@dataclass(frozen=True)
class StartMarker:
    """Fresh start symbol of a single-state PDA; renders as ``Zs``."""

    def __str__(self) -> str:
        return "Zs"


START = StartMarker()

SsSymbol = Union[StartMarker, Triple]


@dataclass(frozen=True)
class SsTransition:
    """One move of a single-state PDA; the state is implicitly ``qm``."""

    input: Optional[str]
    pop: SsSymbol
    push: tuple[SsSymbol, ...] = ()

    @property
    def from_state(self) -> str:
        return QM

    @property
    def to_state(self) -> str:
        return QM

    def __str__(self) -> str:
        inp = "eps" if self.input is None else self.input
        rhs = " ".join(str(s) for s in self.push) if self.push else "eps"
        return f"{QM} {inp} {self.pop} -> {QM} {rhs}"


@dataclass(frozen=True)
class SingleStatePda:
    """PDA whose only state is ``qm``; all bookkeeping lives in the triple
    stack symbols.

    ``provenance`` maps each transition to the construction records that
    produced it.  It is diagnostic and excluded from structural equality.
    """

    input_alphabet: frozenset[str]
    stack_alphabet: frozenset[SsSymbol]
    transitions: frozenset[SsTransition]
    provenance: Optional[Mapping] = field(default=None, compare=False)


Production = tuple[str, tuple[str, ...]]


@dataclass(frozen=True)
class Cfg:
    """Context-free grammar over string symbols.

    Variables and terminals are disjoint; a production body is a tuple of
    symbols, and the empty tuple denotes an epsilon production.  ``origins``
    optionally maps productions to human-readable descriptions of where they
    came from (diagnostic only, excluded from equality).
    """

    variables: frozenset[str]
    terminals: frozenset[str]
    productions: frozenset[Production]
    start: str
    origins: Optional[Mapping[Production, tuple[str, ...]]] = field(
        default=None, compare=False)

    @classmethod
    def make(cls, variables, terminals, productions, start, origins=None) -> "Cfg":
        return cls(
            variables=frozenset(variables),
            terminals=frozenset(terminals),
            productions=frozenset((h, tuple(b)) for h, b in productions),
            start=start,
            origins=origins,
        )


@dataclass(frozen=True)
class Configuration:
    """Instantaneous description: control state, input offset, stack.

    ``stack[0]`` is the top.  For single-state automata the state is ``qm``
    and the stack holds SsSymbol values instead of plain names.
    """

    state: str
    input_pos: int
    stack: tuple


def validate_pda(pda: Pda) -> list[str]:
    """Return one human-readable description per violated Pda invariant.

    An empty list means the automaton is well formed.  Violations are data,
    not exceptions, so ill-formed automata can be built and inspected.
    """
    problems: list[str] = []
    for name in sorted(pda.states):
        if not is_token(name):
            problems.append(f"state name {name!r} is not a valid token")
    for ch in sorted(pda.input_alphabet):
        if not is_input_symbol(ch):
            problems.append(f"input symbol {ch!r} is not a single printable character")
    for name in sorted(pda.stack_alphabet):
        if not is_token(name):
            problems.append(f"stack symbol {name!r} is not a valid token")
    if not pda.states:
        problems.append("state set is empty")
    if pda.start_state not in pda.states:
        problems.append(f"start state {pda.start_state!r} is not a declared state")
    if pda.start_stack not in pda.stack_alphabet:
        problems.append(f"start stack symbol {pda.start_stack!r} is not a declared stack symbol")
    for t in sorted(pda.transitions, key=str):
        if t.from_state not in pda.states:
            problems.append(f"transition '{t}' leaves undeclared state {t.from_state!r}")
        if t.to_state not in pda.states:
            problems.append(f"transition '{t}' enters undeclared state {t.to_state!r}")
        if t.input is not None and t.input not in pda.input_alphabet:
            problems.append(f"transition '{t}' reads undeclared input symbol {t.input!r}")
        if t.pop not in pda.stack_alphabet:
            problems.append(f"transition '{t}' pops undeclared stack symbol {t.pop!r}")
        for sym in t.push:
            if sym not in pda.stack_alphabet:
                problems.append(f"transition '{t}' pushes undeclared stack symbol {sym!r}")
    return problems
