"""Systems of language equations as an exact textual image of an automaton.

A nondeterministic system has one variable per state; the variable's
equation collects, per symbol, the union of successor variables, plus an
epsilon term when the state is final. The initial set names the variables
whose union is the language. Deterministic automata produce the
deterministic special case (at most one successor per symbol) through the
same machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, Nfa


@dataclass(frozen=True)
class EquationSystem:
    alphabet: Alphabet
    names: tuple[str, ...]
    succ: tuple[tuple[frozenset[int], ...], ...]
    has_epsilon: tuple[bool, ...]
    initial: frozenset[int]

    def __post_init__(self) -> None:
        n, k = len(self.names), len(self.alphabet)
        if len(self.succ) != n or len(self.has_epsilon) != n:
            raise ValueError("per-variable data must match the variable count")
        for row in self.succ:
            if len(row) != k:
                raise ValueError("each variable needs one successor set per symbol")
            for js in row:
                for j in js:
                    if not 0 <= j < n:
                        raise ValueError(f"successor index out of range: {j}")
        for i in self.initial:
            if not 0 <= i < n:
                raise ValueError(f"initial index out of range: {i}")


def to_equations(n: Nfa) -> EquationSystem:
    """Exact image: variable L<label> per state, successor sets from the
    transition relation, epsilon terms from finality."""
    k = len(n.alphabet)
    succ: list[tuple[frozenset[int], ...]] = []
    for q in range(n.state_count):
        row = []
        for a in range(k):
            row.append(frozenset(t for (p, b, t) in n.transitions if p == q and b == a))
        succ.append(tuple(row))
    return EquationSystem(
        n.alphabet,
        tuple("L" + n.label_of(q) for q in range(n.state_count)),
        tuple(succ),
        tuple(q in n.final for q in range(n.state_count)),
        n.initial,
    )


def from_equations(e: EquationSystem) -> Nfa:
    """Inverse of to_equations; the round trip reproduces the automaton exactly."""
    trans = set()
    for i, row in enumerate(e.succ):
        for a, js in enumerate(row):
            for j in js:
                trans.add((i, a, j))
    stripped = tuple(
        name[1:] if name.startswith("L") else name for name in e.names
    )
    # a None-labeled automaton rendered default names; undo that exactly
    labels = None if stripped == tuple(str(i) for i in range(len(e.names))) else stripped
    return Nfa(
        len(e.names),
        e.alphabet,
        frozenset(trans),
        e.initial,
        frozenset(i for i, eps in enumerate(e.has_epsilon) if eps),
        labels,
    )


def render(e: EquationSystem) -> str:
    """Display form: terms in alphabet order, epsilon last, empty sets as
    the empty-language symbol, then the initial set."""
    lines = []
    for i, name in enumerate(e.names):
        terms = []
        for a, symbol in enumerate(e.alphabet.symbols):
            js = sorted(e.succ[i][a])
            if not js:
                continue
            if len(js) == 1:
                terms.append(symbol + e.names[js[0]])
            else:
                terms.append(symbol + "(" + " ∪ ".join(e.names[j] for j in js) + ")")
        if e.has_epsilon[i]:
            terms.append("ε")
        rhs = " ∪ ".join(terms) if terms else "∅"
        lines.append(f"{name} = {rhs}")
    init = ", ".join(e.names[i] for i in sorted(e.initial))
    lines.append("initial: {" + init + "}")
    return "\n".join(lines)
