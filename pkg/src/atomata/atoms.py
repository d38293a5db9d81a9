"""Atoms of a non-empty regular language and its átomaton.

An atom is a non-empty intersection that takes every left quotient of the
language either plainly or complemented, with at least one plain term; its
signature is the set of quotients taken plainly. Words in the same atom
are exactly the words with identical membership across all quotients.

The computational route: in the determinization of the reversed minimal
DFA, the subset reached from the start by u is precisely the set of states
whose right language contains reverse(u). The reachable non-empty subsets
are therefore exactly the signatures, and that subset automaton doubles as
the minimal DFA of the reversed language.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .automata import (
    Dfa,
    Nfa,
    Word,
    as_nfa,
    determinize,
    dfa_to_idfa,
    equivalent,
    is_bideterministic,
    is_empty,
    is_isomorphic,
    is_minimal,
    minimize,
    reverse,
    right_language,
    subset_of,
    trim,
    try_as_dfa,
)
from .errors import (
    EmptyLanguageError,
    NotMinimalError,
    NotSymmetricError,
    VerificationError,
)
from . import regex as rx


@dataclass(frozen=True, order=True)
class AtomSignature:
    """Fixed-width bit set of the quotients appearing uncomplemented."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("signature width must be positive")
        if not 0 < self.bits < (1 << self.width):
            raise ValueError("signature must be a non-empty subset of the quotients")

    @classmethod
    def of(cls, states, width: int) -> "AtomSignature":
        bits = 0
        for q in states:
            bits |= 1 << q
        return cls(bits, width)

    @property
    def states(self) -> frozenset[int]:
        return frozenset(q for q in range(self.width) if self.bits >> q & 1)

    def contains(self, q: int) -> bool:
        return bool(self.bits >> q & 1)

    def name(self, labels: Optional[tuple[str, ...]] = None) -> str:
        """ASCII rendering; a leading '-' marks a complemented quotient."""
        parts = []
        for q in range(self.width):
            text = labels[q] if labels is not None else str(q)
            parts.append(text if self.contains(q) else "-" + text)
        return "".join(parts)


@dataclass(frozen=True)
class AtomSet:
    """The atoms of a language over a fixed minimal quotient DFA.

    reverse_dfa is the determinized reversal of base: the minimal DFA of
    the reversed language, whose subset labels are the signatures. The
    final atom (the one containing the empty word) sits last by
    convention; the others ascend by signature bit pattern.
    """

    base: Dfa
    atoms: tuple[AtomSignature, ...]
    final_index: int
    initial_indices: tuple[int, ...]
    reverse_dfa: Dfa

    def __len__(self) -> int:
        return len(self.atoms)

    def index_of(self, states: frozenset[int]) -> int:
        sig = AtomSignature.of(states, self.base.state_count)
        return self.atoms.index(sig)

    def _reverse_state_of(self, i: int) -> int:
        subsets = self.reverse_dfa.subset_labels
        assert subsets is not None
        return subsets.index(self.atoms[i].states)


@dataclass(frozen=True)
class Atomaton:
    """NFA whose states correspond one-to-one with the atoms."""

    nfa: Nfa
    signatures: tuple[AtomSignature, ...]
    atoms: AtomSet


def compute_atoms(d: Dfa, *, strict: bool = False) -> AtomSet:
    """Atoms of L(d). The quotient basis is minimize(d); with strict=True a
    non-minimal input is rejected instead of silently minimized."""
    if is_empty(d):
        raise EmptyLanguageError("atoms are defined for non-empty languages only")
    if strict and not is_minimal(d):
        raise NotMinimalError("compute_atoms(strict=True) needs a minimal DFA")
    m = minimize(d)
    n = m.state_count
    rdfa = determinize(reverse(as_nfa(m)))
    assert rdfa.subset_labels is not None
    final_sig = frozenset(m.final)
    others = sorted(
        AtomSignature.of(s, n)
        for s in rdfa.subset_labels
        if s and s != final_sig
    )
    atoms = tuple(others) + (AtomSignature.of(final_sig, n),)
    return AtomSet(
        base=m,
        atoms=atoms,
        final_index=len(atoms) - 1,
        initial_indices=tuple(i for i, a in enumerate(atoms) if a.contains(m.start)),
        reverse_dfa=rdfa,
    )


def atom_recognizer(s: AtomSet, i: int) -> Dfa:
    """A minimal DFA accepting exactly atom i: fix acceptance of the subset
    automaton to the one signature, then reverse and re-determinize."""
    target = s._reverse_state_of(i)
    picked = s.reverse_dfa.with_final({target})
    return minimize(determinize(reverse(as_nfa(picked))))


def quotient_as_atoms(s: AtomSet, q: int) -> tuple[int, ...]:
    """Indices of the atoms whose union is the right language of base state q."""
    if not 0 <= q < s.base.state_count:
        raise ValueError(f"state out of range: {q}")
    return tuple(i for i, a in enumerate(s.atoms) if a.contains(q))


def atom_of_word(s: AtomSet, w: Word) -> Optional[int]:
    """The unique atom containing w, or None when w lies in no quotient."""
    state = s.reverse_dfa.run(tuple(reversed(w)))
    assert s.reverse_dfa.subset_labels is not None
    subset = s.reverse_dfa.subset_labels[state]
    if not subset:
        return None
    return s.index_of(subset)


def atom_quotient(
    s: AtomSet, i: int, w: Word, *, verify: bool = False
) -> tuple[int, ...]:
    """Indices J with w^-1 A_i = union of atoms A_j, j in J.

    Computed on the subset automaton: w^-1 A_i collects the atoms whose
    signature state reaches atom i's signature state on reverse(w). With
    verify=True the identity is re-checked by language equivalence.
    """
    rdfa = s.reverse_dfa
    target = s._reverse_state_of(i)
    wr = tuple(reversed(w))
    out = tuple(
        j
        for j in range(len(s.atoms))
        if rdfa.run(wr, start=s._reverse_state_of(j)) == target
    )
    if verify:
        rec = atom_recognizer(s, i)
        lhs = rec.with_start(rec.run(w))
        rhs = union_of_atoms(s, out)
        if not equivalent(lhs, rhs):
            raise VerificationError(
                f"atom_quotient disagrees with language equivalence for atom {i}"
            )
    return out


def union_of_atoms(s: AtomSet, indices) -> Dfa:
    """DFA of the union of the chosen atoms (empty choice: empty language)."""
    alphabet = s.base.alphabet
    rdfa = s.reverse_dfa
    finals = {s._reverse_state_of(j) for j in indices}
    return determinize(reverse(as_nfa(rdfa.with_final(finals))))


def atomaton_direct(d: Dfa) -> Atomaton:
    """Atomaton by the definition: a transition from atom i to atom j on a
    exactly when A_j is contained in the a-quotient of A_i, decided with
    recognizer containment products."""
    aset = compute_atoms(d)
    m = aset.base
    k = len(m.alphabet)
    count = len(aset.atoms)
    recs = [atom_recognizer(aset, i) for i in range(count)]
    trans = set()
    for i in range(count):
        for a in range(k):
            shifted = recs[i].with_start(recs[i].next[recs[i].start][a])
            for j in range(count):
                if subset_of(recs[j], shifted):
                    trans.add((i, a, j))
    labels = _atom_labels(aset)
    nfa = Nfa.build(
        count,
        m.alphabet,
        trans,
        aset.initial_indices,
        {aset.final_index},
        labels,
    )
    return Atomaton(nfa, aset.atoms, aset)


def _atom_labels(aset: AtomSet) -> tuple[str, ...]:
    return tuple(sig.name(aset.base.labels) for sig in aset.atoms)


def _match_signatures(nfa: Nfa, aset: AtomSet) -> tuple[int, ...]:
    """For each state, the unique atom equal to its right language; a failed
    or non-bijective match is a library defect, not bad input."""
    count = len(aset.atoms)
    recs = [atom_recognizer(aset, i) for i in range(count)]
    assigned: list[int] = []
    for q in range(nfa.state_count):
        rl = minimize(right_language(nfa, q))
        hits = [i for i in range(count) if equivalent(rl, recs[i])]
        if len(hits) != 1:
            raise VerificationError(
                f"state {q} matches {len(hits)} atoms; expected exactly one"
            )
        assigned.append(hits[0])
    if len(set(assigned)) != nfa.state_count or nfa.state_count != count:
        raise VerificationError("atom matching is not a bijection")
    return tuple(assigned)


def _with_signatures(nfa: Nfa, aset: AtomSet) -> Atomaton:
    assigned = _match_signatures(nfa, aset)
    names = _atom_labels(aset)
    labeled = replace(nfa, labels=tuple(names[i] for i in assigned))
    return Atomaton(labeled, tuple(aset.atoms[i] for i in assigned), aset)


def atomaton_reverse_route(n: Nfa) -> Atomaton:
    """Atomaton as the normal automaton: reverse, determinize, minimize,
    trim, reverse; signatures recovered by matching right languages."""
    nn = as_nfa(n)
    exact = try_as_dfa(nn)
    base = minimize(determinize(nn) if exact is None else exact)
    if is_empty(base):
        raise EmptyLanguageError("the átomaton is defined for non-empty languages")
    route = reverse(trim(as_nfa(minimize(determinize(reverse(nn))))))
    aset = compute_atoms(base)
    return _with_signatures(route, aset)


def symmetric_shortcut(d: Dfa) -> Atomaton:
    """For a language equal to its own reversal, the átomaton is simply the
    trimmed reversal of the minimal DFA."""
    if is_empty(d):
        raise EmptyLanguageError("the átomaton is defined for non-empty languages")
    rd = determinize(reverse(as_nfa(d)))
    if not equivalent(d, rd):
        raise NotSymmetricError("language differs from its reversal")
    m = minimize(d)
    shortcut = reverse(trim(as_nfa(m)))
    aset = compute_atoms(m)
    return _with_signatures(shortcut, aset)


def check_bideterministic_characterization(
    r: "rx.Regex", alphabet
) -> tuple[bool, bool]:
    """(átomaton is isomorphic to the quotient IDFA, language is
    bideterministic); the two must agree for every regular language."""
    m = rx.quotient_dfa(r, alphabet)
    if is_empty(m):
        raise EmptyLanguageError("bideterminism check needs a non-empty language")
    atm = atomaton_direct(m)
    qidfa = dfa_to_idfa(m)
    iso = is_isomorphic(atm.nfa, as_nfa(qidfa)) is not None
    bidet = is_bideterministic(qidfa)
    return (iso, bidet)
