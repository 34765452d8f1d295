"""Membership deciders and bounded enumeration.

PDA membership runs as a bounded breadth-first search over configurations
and answers Accepted, Rejected, or Inconclusive; the search never lies, it
forfeits Rejected the moment a limit prunes anything.  Grammar membership
uses an Earley chart recognizer that handles epsilon productions, unit
cycles, and left recursion natively and always terminates, so exact
questions are best routed through grammars.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterator, Union

from .model import QM, START, Cfg, Configuration, Pda, SingleStatePda

Automaton = Union[Pda, SingleStatePda]
LanguageSource = Union[Pda, SingleStatePda, Cfg]


@dataclass(frozen=True)
class Limits:
    """Search bounds for the PDA simulator; both must be positive."""

    max_configs: int = 100_000
    max_stack_depth: int = 64

    def __post_init__(self):
        if self.max_configs <= 0 or self.max_stack_depth <= 0:
            raise ValueError("limits must be positive")


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class Verdict:
    """Simulator answer: accepted with a replayable witness, rejected after
    exhausting the frontier, or inconclusive naming the limit that got in
    the way."""

    kind: str  # "accepted" | "rejected" | "inconclusive"
    witness: tuple = ()
    reason: str = ""

    @property
    def is_accepted(self) -> bool:
        return self.kind == "accepted"

    @property
    def is_rejected(self) -> bool:
        return self.kind == "rejected"

    @property
    def is_inconclusive(self) -> bool:
        return self.kind == "inconclusive"


def _accepted(witness) -> Verdict:
    return Verdict("accepted", witness=tuple(witness))


_REJECTED = Verdict("rejected")


def _inconclusive(reason: str) -> Verdict:
    return Verdict("inconclusive", reason=reason)


def _automaton_view(m: Automaton):
    """Uniform access to either automaton kind: start configuration data,
    alphabet, and a (state, stack top) -> transitions index."""
    index = defaultdict(list)
    if isinstance(m, Pda):
        for t in sorted(m.transitions, key=str):
            index[(t.from_state, t.pop)].append(t)
        return m.start_state, m.start_stack, m.input_alphabet, index
    if isinstance(m, SingleStatePda):
        for t in sorted(m.transitions, key=str):
            index[(QM, t.pop)].append(t)
        return QM, START, m.input_alphabet, index
    raise TypeError(f"not an automaton: {type(m).__name__}")


def start_configuration(m: Automaton) -> Configuration:
    state, symbol, _, _ = _automaton_view(m)
    return Configuration(state, 0, (symbol,))


def step(m: Automaton, w: str, config: Configuration) -> set[Configuration]:
    """Every configuration reachable in one move on query string ``w``.

    Reading moves need the next character to match and advance the input
    position; epsilon moves do not.  An empty stack has no successors.
    """
    _, _, _, index = _automaton_view(m)
    if not config.stack:
        return set()
    successors = set()
    for t in index.get((config.state, config.stack[0]), ()):
        if t.input is None:
            pos = config.input_pos
        elif config.input_pos < len(w) and w[config.input_pos] == t.input:
            pos = config.input_pos + 1
        else:
            continue
        successors.add(Configuration(t.to_state, pos, t.push + config.stack[1:]))
    return successors


def accepts(m: Automaton, w: str, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Bounded breadth-first membership for empty-stack acceptance.

    Accepted as soon as some configuration has consumed all input on an
    empty stack; the witness is the move-minimal transition sequence.
    Rejected only when the frontier empties with nothing ever pruned;
    otherwise the verdict is Inconclusive naming the limit hit.
    """
    state, symbol, alphabet, index = _automaton_view(m)
    for ch in w:
        if ch not in alphabet:
            raise ValueError(f"input character {ch!r} is not in the alphabet")

    start = Configuration(state, 0, (symbol,))
    queue = deque([start])
    seen = {start}
    parents: dict[Configuration, tuple] = {start: None}
    explored = 0
    pruned = False
    while queue:
        if explored >= limits.max_configs:
            return _inconclusive("max_configs")
        config = queue.popleft()
        explored += 1
        if config.input_pos == len(w) and not config.stack:
            witness = []
            cursor = config
            while parents[cursor] is not None:
                cursor, move = parents[cursor]
                witness.append(move)
            return _accepted(reversed(witness))
        if not config.stack:
            continue
        for t in index.get((config.state, config.stack[0]), ()):
            if t.input is None:
                pos = config.input_pos
            elif config.input_pos < len(w) and w[config.input_pos] == t.input:
                pos = config.input_pos + 1
            else:
                continue
            stack = t.push + config.stack[1:]
            if len(stack) > limits.max_stack_depth:
                pruned = True
                continue
            successor = Configuration(t.to_state, pos, stack)
            if successor in seen:
                continue
            seen.add(successor)
            parents[successor] = (config, t)
            queue.append(successor)
    return _inconclusive("max_stack_depth") if pruned else _REJECTED


def replay_configurations(m: Automaton, w: str, witness) -> list[Configuration]:
    """Apply a transition sequence strictly from the start configuration,
    returning every configuration along the way.

    Raises ValueError if any move does not apply, making this an independent
    check on witnesses rather than a re-search.
    """
    state, symbol, _, _ = _automaton_view(m)
    configs = [Configuration(state, 0, (symbol,))]
    for t in witness:
        config = configs[-1]
        if config.state != t.from_state or not config.stack or config.stack[0] != t.pop:
            raise ValueError(f"witness move '{t}' does not apply at {config}")
        if t.input is None:
            pos = config.input_pos
        else:
            if config.input_pos >= len(w) or w[config.input_pos] != t.input:
                raise ValueError(f"witness move '{t}' does not match the input")
            pos = config.input_pos + 1
        configs.append(Configuration(t.to_state, pos, t.push + config.stack[1:]))
    return configs


def replay(m: Automaton, w: str, witness) -> Configuration:
    """Final configuration after strictly replaying a witness; callers check
    for full consumption and an empty stack themselves."""
    return replay_configurations(m, w, witness)[-1]


class _Recognizer:
    """Earley chart recognizer over one grammar.

    Items are (head, body, dot, origin).  The classic empty-completion gap
    is closed by remembering which variables have completed emptily at each
    position and advancing late-arriving parents at prediction time.
    """

    def __init__(self, cfg: Cfg):
        self.cfg = cfg
        self.bodies = defaultdict(list)
        for head, body in sorted(cfg.productions):
            self.bodies[head].append(body)

    def member(self, w: str) -> bool:
        for ch in w:
            if ch not in self.cfg.terminals:
                raise ValueError(f"character {ch!r} is not a terminal")
        cfg = self.cfg
        n = len(w)
        chart: list[list[tuple]] = [[] for _ in range(n + 1)]
        in_chart: list[set[tuple]] = [set() for _ in range(n + 1)]
        completed_empty: list[set[str]] = [set() for _ in range(n + 1)]

        def add(k: int, item: tuple) -> None:
            if item not in in_chart[k]:
                in_chart[k].add(item)
                chart[k].append(item)

        for body in self.bodies.get(cfg.start, ()):
            add(0, (cfg.start, body, 0, 0))

        for k in range(n + 1):
            i = 0
            while i < len(chart[k]):
                head, body, dot, origin = chart[k][i]
                i += 1
                if dot == len(body):
                    if origin == k:
                        completed_empty[k].add(head)
                    for j in range(len(chart[origin])):
                        h2, b2, d2, o2 = chart[origin][j]
                        if d2 < len(b2) and b2[d2] == head:
                            add(k, (h2, b2, d2 + 1, o2))
                    continue
                sym = body[dot]
                if sym in cfg.variables:
                    for prod_body in self.bodies.get(sym, ()):
                        add(k, (sym, prod_body, 0, k))
                    if sym in completed_empty[k]:
                        add(k, (head, body, dot + 1, origin))
                elif k < n and sym == w[k]:
                    add(k + 1, (head, body, dot + 1, origin))
        return any(
            head == cfg.start and dot == len(body) and origin == 0
            for head, body, dot, origin in chart[n])


def cfg_member(cfg: Cfg, w: str) -> bool:
    """True iff the grammar derives ``w``.  Always terminates."""
    return _Recognizer(cfg).member(w)


def derivable_strings(cfg: Cfg, max_len: int, max_forms: int = 1_000_000) -> set[str]:
    """Every terminal string of length <= max_len the grammar derives,
    computed by exhaustive breadth-first expansion of leftmost sentential
    forms.

    Pruning is exact: forms whose terminal content already exceeds the
    bound, whose minimum remaining yield cannot fit it, or whose length
    exceeds what any minimal derivation of a bounded string can need are
    dropped.  Independent of the chart recognizer and used to cross-check
    it.  Raises RuntimeError instead of answering if the form space
    explodes; it never guesses.
    """
    bodies = defaultdict(list)
    max_body = 1
    for head, body in sorted(cfg.productions):
        bodies[head].append(body)
        max_body = max(max_body, len(body))

    # Least number of terminals derivable per variable; inf = generates nothing.
    min_yield: dict[str, float] = {v: math.inf for v in cfg.variables}
    changed = True
    while changed:
        changed = False
        for head, body in cfg.productions:
            total = 0.0
            for sym in body:
                total += 1 if sym in cfg.terminals else min_yield.get(sym, math.inf)
            if total < min_yield[head]:
                min_yield[head] = total
                changed = True

    # In a minimal leftmost derivation of a string of length <= max_len the
    # pending suffix is bounded by tree depth times branching, and the depth
    # by |V| distinct variables per nesting level; anything longer is
    # derivable some shorter way.
    cap = max_len + 2 + max(1, len(cfg.variables)) * (2 * max_len + 2) * max(1, max_body - 1)

    start_form = (cfg.start,)
    seen = {start_form}
    queue = deque([start_form])
    found: set[str] = set()
    while queue:
        form = queue.popleft()
        leftmost = next(
            (j for j, sym in enumerate(form) if sym in cfg.variables), None)
        if leftmost is None:
            found.add("".join(form))
            continue
        for body in bodies.get(form[leftmost], ()):
            expanded = form[:leftmost] + body + form[leftmost + 1:]
            if len(expanded) > cap or expanded in seen:
                continue
            budget = 0.0
            for sym in expanded:
                budget += 1 if sym in cfg.terminals else min_yield.get(sym, math.inf)
                if budget > max_len:
                    break
            if budget > max_len:
                continue
            seen.add(expanded)
            if len(seen) > max_forms:
                raise RuntimeError(
                    "sentential form search exploded; raise max_forms or shrink the grammar")
            queue.append(expanded)
    return found


def strings_up_to(alphabet, max_len: int) -> Iterator[str]:
    """Every string over the alphabet with length <= max_len, shortest first
    and lexicographic within a length."""
    symbols = sorted(alphabet)
    for n in range(max_len + 1):
        for letters in itertools.product(symbols, repeat=n):
            yield "".join(letters)


def enumerate_language(source: LanguageSource, max_len: int,
                       limits: Limits = DEFAULT_LIMITS) -> tuple[set[str], bool]:
    """Members of the source's language up to ``max_len``.

    Grammar membership is exact; automaton membership uses the bounded
    simulator, and ``complete`` is False when any verdict was inconclusive
    (such strings are excluded rather than guessed at).
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    members: set[str] = set()
    complete = True
    if isinstance(source, Cfg):
        recognizer = _Recognizer(source)
        for w in strings_up_to(source.terminals, max_len):
            if recognizer.member(w):
                members.add(w)
        return members, complete
    for w in strings_up_to(source.input_alphabet, max_len):
        verdict = accepts(source, w, limits)
        if verdict.is_accepted:
            members.add(w)
        elif verdict.is_inconclusive:
            complete = False
    return members, complete
