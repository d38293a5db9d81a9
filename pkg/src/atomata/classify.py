"""Atomicity and residuality of NFAs; factorizations and the universal automaton.

An NFA is atomic when every state's right language is a union of atoms of
the accepted language, and residual when every right language is a left
quotient. Factorizations are the maximal pairs (X, Y) with X·Y contained
in the language; they are in bijection with the Galois-closed state sets
of the minimal DFA and form the states of the universal automaton.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .atoms import AtomSet, atom_recognizer, compute_atoms, union_of_atoms
from .automata import (
    AnyAutomaton,
    Dfa,
    Nfa,
    Word,
    _subset_text,
    as_nfa,
    determinize,
    equivalent,
    is_empty,
    is_minimal,
    minimize,
    reverse,
    right_language,
    right_quotient,
    shortest_distinguishing,
    subset_of,
)
from .errors import (
    EmptyLanguageError,
    NotMinimalError,
    StateBlowupError,
    VerificationError,
)


# ------------------------------------------------------------------ atomicity

@dataclass(frozen=True)
class StateAtomicity:
    """Verdict for one state: either the atoms whose union is its right
    language, or a word in the symmetric difference of the two."""

    state: int
    atom_indices: Optional[tuple[int, ...]]
    counterexample: Optional[Word]

    @property
    def is_union(self) -> bool:
        return self.atom_indices is not None


@dataclass(frozen=True)
class AtomicityReport:
    atomic: bool
    per_state: tuple[StateAtomicity, ...]
    atoms: AtomSet


def _complement(d: Dfa) -> Dfa:
    return d.with_final(frozenset(range(d.state_count)) - d.final)


def is_atomic(n: AnyAutomaton) -> AtomicityReport:
    """Check every state's right language against the union of the atoms it
    meets. No implicit trimming: unreachable states are judged too."""
    nn = as_nfa(n)
    base = minimize(determinize(nn))
    if is_empty(base):
        raise EmptyLanguageError("atomicity is defined for non-empty languages")
    aset = compute_atoms(base)
    recs = [atom_recognizer(aset, i) for i in range(len(aset))]
    anti = [_complement(r) for r in recs]
    per: list[StateAtomicity] = []
    atomic = True
    for q in range(nn.state_count):
        rq = right_language(nn, q)
        touching = tuple(
            i for i in range(len(recs)) if not subset_of(rq, anti[i])
        )
        ce = shortest_distinguishing(rq, union_of_atoms(aset, touching))
        if ce is None:
            per.append(StateAtomicity(q, touching, None))
        else:
            per.append(StateAtomicity(q, None, ce))
            atomic = False
    return AtomicityReport(atomic, tuple(per), aset)


# ----------------------------------------------------------------- residuality

@dataclass(frozen=True)
class StateResiduality:
    """The quotient matching a state's right language, with a shortest word
    producing that quotient; both None when no quotient matches."""

    state: int
    quotient_state: Optional[int]
    witness: Optional[Word]

    @property
    def matched(self) -> bool:
        return self.quotient_state is not None


@dataclass(frozen=True)
class ResidualityReport:
    residual: bool
    per_state: tuple[StateResiduality, ...]
    base: Dfa


def _shortest_word_to(d: Dfa) -> dict[int, Word]:
    """Shortest word from the start to each reachable state, ties broken by
    alphabet order."""
    out: dict[int, Word] = {d.start: ()}
    todo = [d.start]
    while todo:
        nxt: list[int] = []
        for p in todo:
            for a in range(len(d.alphabet)):
                q = d.next[p][a]
                if q not in out:
                    out[q] = out[p] + (a,)
                    nxt.append(q)
        todo = nxt
    return out


def is_residual(n: AnyAutomaton) -> ResidualityReport:
    """Match each state's right language against the quotients of L(n); the
    empty quotient participates exactly when the minimal DFA has a sink."""
    nn = as_nfa(n)
    base = minimize(determinize(nn))
    if is_empty(base):
        raise EmptyLanguageError("residuality is defined for non-empty languages")
    words = _shortest_word_to(base)
    per: list[StateResiduality] = []
    residual = True
    for q in range(nn.state_count):
        rq = right_language(nn, q)
        hit = next(
            (p for p in range(base.state_count) if equivalent(rq, base.with_start(p))),
            None,
        )
        if hit is None:
            residual = False
            per.append(StateResiduality(q, None, None))
        else:
            per.append(StateResiduality(q, hit, words[hit]))
    return ResidualityReport(residual, tuple(per), base)


# -------------------------------------------------------------- factorizations

@dataclass(frozen=True)
class Factorization:
    """A maximal pair (X, Y) with X·Y ⊆ L, represented by the Galois-closed
    set P of minimal-DFA states with Y = ⋂_{q∈P} right language of q.

    X is the set of words driving the start state into P. The two
    degenerate shapes are P = ∅ (X empty, Y = Σ*) and Y = ∅ (only
    possible for P = all states).
    """

    P: frozenset[int]
    base: Dfa
    reverse_dfa: Dfa
    y_empty: bool

    @property
    def x_empty(self) -> bool:
        return not self.P

    @property
    def degenerate(self) -> bool:
        return self.x_empty or self.y_empty

    def x_dfa(self) -> Dfa:
        return minimize(self.base.with_final(self.P))

    def y_dfa(self) -> Dfa:
        subsets = self.reverse_dfa.subset_labels
        assert subsets is not None
        finals = {s for s, sub in enumerate(subsets) if self.P <= sub}
        return minimize(
            determinize(reverse(as_nfa(self.reverse_dfa.with_final(finals))))
        )

    def name(self) -> str:
        return _subset_text(self.P, self.base.labels)


def factorizations(d: Dfa, *, max_states: int = 16) -> tuple[Factorization, ...]:
    """All factorizations of L(d), as Galois-closed sets of d's states.

    The closed sets are exactly the intersections of subfamilies of the
    membership vectors realized by words (the reachable subsets of the
    reversal determinization), with the empty subfamily giving the full
    set; the family is closed by intersecting to a fixpoint.
    """
    if not is_minimal(d):
        raise NotMinimalError("factorizations are computed over the minimal DFA")
    n = d.state_count
    if n > max_states:
        raise StateBlowupError(
            f"{n} states exceeds the factorization bound of {max_states}"
        )
    rdfa = determinize(reverse(as_nfa(d)))
    assert rdfa.subset_labels is not None
    vectors = set(rdfa.subset_labels)
    closed: set[frozenset[int]] = {frozenset(range(n))}
    frontier = list(closed)
    while frontier:
        p = frontier.pop()
        for v in vectors:
            c = p & v
            if c not in closed:
                closed.add(c)
                frontier.append(c)
    out = []
    for p in sorted(closed, key=lambda s: (len(s), sorted(s))):
        y_empty = not any(p <= sub for sub in rdfa.subset_labels)
        out.append(Factorization(p, d, rdfa, y_empty))
    return tuple(out)


# ---------------------------------------------------------- universal automaton

def build_universal(
    d: Dfa, *, max_states: int = 16, cross_check_limit: int = 12
) -> Nfa:
    """Universal automaton: one state per factorization with X ≠ ∅.

    The X-degenerate factorization (∅, Σ*) is a legitimate maximal pair
    but is excluded as a state: it is unreachable, carries right language
    Σ*, and would defeat the atomicity every other state enjoys. Edges
    are decided set-wise: P -a→ P′ iff the a-image of P lies in P′, which
    is equivalent to X·a ⊆ X′ and to a·Y′ ⊆ Y; on small instances all
    three readings are recomputed at the language level and compared.
    """
    facs = tuple(
        f for f in factorizations(d, max_states=max_states) if not f.x_empty
    )
    k = len(d.alphabet)
    sets = [f.P for f in facs]
    trans = set()
    for i, p in enumerate(sets):
        for a in range(k):
            image = frozenset(d.next[q][a] for q in p)
            for j, p2 in enumerate(sets):
                if image <= p2:
                    trans.add((i, a, j))
    nfa = Nfa.build(
        len(facs),
        d.alphabet,
        trans,
        (i for i, p in enumerate(sets) if d.start in p),
        (i for i, p in enumerate(sets) if p <= d.final),
        (f.name() for f in facs),
    )
    if len(facs) <= cross_check_limit:
        _cross_check_edges(d, facs, nfa)
    return nfa


def _cross_check_edges(
    d: Dfa, facs: tuple[Factorization, ...], nfa: Nfa
) -> None:
    """Recompute the edge set from both language-level characterizations and
    compare with the set-wise rule; disagreement is a library defect."""
    k = len(d.alphabet)
    count = len(facs)
    xs = [f.x_dfa() for f in facs]
    ys = [f.y_dfa() for f in facs]
    # X' a^-1 per (target, symbol); a^-1 Y per (source, symbol)
    x_shift = [[right_quotient(x, (a,)) for a in range(k)] for x in xs]
    y_shift = [[y.with_start(y.next[y.start][a]) for a in range(k)] for y in ys]
    for i in range(count):
        for a in range(k):
            for j in range(count):
                edge = (i, a, j) in nfa.transitions
                by_x = subset_of(xs[i], x_shift[j][a])
                by_y = subset_of(ys[j], y_shift[i][a])
                if edge != by_x or edge != by_y:
                    raise VerificationError(
                        f"universal edge rule mismatch at ({i}, {a}, {j}): "
                        f"set-wise={edge} via-X={by_x} via-Y={by_y}"
                    )
