"""Line-oriented text format for automata.

Sections `alphabet:`, `states:`, `initial:`, `final:` hold whitespace
separated tokens (inline after the colon or on following lines); `trans:`
is followed by one `from symbol to` triple per line. `#` starts a comment.
State tokens are arbitrary identifiers, numbered in order of first
appearance anywhere in the file.

format_automaton(parse_automaton(text)) is stable, and parsing a printed
automaton reproduces it exactly, with one caveat: states whose labels
render as the default 0..n-1 sequence come back with labels=None (the two
forms are indistinguishable to every operation), and labels that cannot
serve as tokens (whitespace, '#', duplicates) are replaced by defaults.
"""

from __future__ import annotations

from typing import Optional

from .automata import AnyAutomaton, Alphabet, Nfa, as_nfa
from .errors import AutomatonSyntaxError

_SECTIONS = ("alphabet", "states", "initial", "final", "trans")


def _default_tokens(n: int) -> tuple[str, ...]:
    return tuple(str(q) for q in range(n))


def _token_ok(tok: str) -> bool:
    if not tok or "#" in tok or any(ch.isspace() for ch in tok):
        return False
    return not (tok.endswith(":") and tok[:-1] in _SECTIONS)


def format_automaton(m: AnyAutomaton) -> str:
    """Render any automaton (deterministic ones via their NFA view)."""
    n = as_nfa(m)
    tokens: tuple[str, ...]
    if n.labels is not None and len(set(n.labels)) == n.state_count and all(
        _token_ok(t) for t in n.labels
    ):
        tokens = n.labels
    else:
        tokens = _default_tokens(n.state_count)
    lines = [
        "alphabet: " + " ".join(n.alphabet),
        "states: " + " ".join(tokens),
        "initial: " + " ".join(tokens[q] for q in sorted(n.initial)),
        "final: " + " ".join(tokens[q] for q in sorted(n.final)),
        "trans:",
    ]
    for (p, a, q) in sorted(n.transitions):
        lines.append(f"{tokens[p]} {n.alphabet.symbols[a]} {tokens[q]}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_automaton(text: str) -> Nfa:
    """Parse the text format; raises AutomatonSyntaxError with the 1-based
    line number on malformed input."""
    alphabet: Optional[Alphabet] = None
    order: dict[str, int] = {}
    seen: set[str] = set()
    initial: list[str] = []
    final: list[str] = []
    triples: list[tuple[str, str, str, int]] = []
    section: Optional[str] = None

    def intern(tok: str) -> None:
        if tok not in order:
            order[tok] = len(order)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head.endswith(":") and head[:-1] in _SECTIONS:
            section = head[:-1]
            if section in seen:
                raise AutomatonSyntaxError(f"duplicate section {head}", lineno)
            seen.add(section)
            rest = toks[1:]
            if section == "trans":
                if rest:
                    raise AutomatonSyntaxError(
                        "transitions start on the line after trans:", lineno
                    )
                continue
            toks = rest
        elif section is None:
            raise AutomatonSyntaxError(f"content before any section: {head}", lineno)
        else:
            toks = toks  # continuation line of the current section
        if section == "alphabet":
            for t in toks:
                if len(t) != 1:
                    raise AutomatonSyntaxError(
                        f"alphabet symbols are single characters, got {t!r}", lineno
                    )
            if toks:
                existing = alphabet.symbols if alphabet is not None else ()
                alphabet = Alphabet(existing + tuple(toks))
        elif section == "states":
            for t in toks:
                intern(t)
        elif section == "initial":
            for t in toks:
                intern(t)
                initial.append(t)
        elif section == "final":
            for t in toks:
                intern(t)
                final.append(t)
        elif section == "trans":
            if len(toks) != 3:
                raise AutomatonSyntaxError(
                    "each transition line needs exactly 'from symbol to'", lineno
                )
            intern(toks[0])
            intern(toks[2])
            triples.append((toks[0], toks[1], toks[2], lineno))

    missing = [s for s in _SECTIONS if s not in seen]
    if missing:
        raise AutomatonSyntaxError(f"missing section {missing[0]}:", 0)
    if alphabet is None:
        raise AutomatonSyntaxError("alphabet: section declares no symbols", 0)
    trans = set()
    for (p, sym, q, lineno) in triples:
        if sym not in alphabet:
            raise AutomatonSyntaxError(f"unknown symbol {sym!r}", lineno)
        trans.add((order[p], alphabet.index(sym), order[q]))
    count = len(order)
    tokens = tuple(order)
    labels = None if tokens == _default_tokens(count) else tokens
    return Nfa.build(
        count,
        alphabet,
        trans,
        (order[t] for t in initial),
        (order[t] for t in final),
        labels,
    )
