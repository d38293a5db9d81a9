"""Brute-force oracles and reproducible random instance generators.

The oracles re-derive language facts from word enumeration alone, so they
are independent of the subset-construction and reversal machinery they are
used to validate.

Randomness comes from splitmix64, fixed here rather than taken from the
platform RNG so corpora are bit-identical across runs, platforms, and
reimplementations. One step of the generator is:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z xor (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output = z xor (z >> 31)
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import regex as rx
from .automata import (
    Alphabet,
    AnyAutomaton,
    Dfa,
    Nfa,
    Word,
    accepts,
    is_empty,
    minimize,
    subset_of,
)
from .errors import AlphabetMismatchError, AtomataError

logger = logging.getLogger(__name__)

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class Splitmix64:
    """The fixed 64-bit mixing generator documented in the module docstring."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free by rejection."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = _MASK + 1 - (_MASK + 1) % n
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        # 53-bit mantissa draw, same construction as random.Random.random
        return (self.next_u64() >> 11) * 2.0**-53 < p

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]


def _substream(seed: int, stream: int) -> int:
    # decorrelate parallel draws from the same user seed
    return (seed ^ (stream * _GOLDEN + 0x1F123BB5)) & _MASK


@dataclass(frozen=True)
class GenParams:
    """Generator knobs; equal params always reproduce the same instance.

    regex_depth bounds the operator nesting of random_regex and has no
    effect on automaton generation.
    """

    min_states: int = 2
    max_states: int = 6
    alphabet_size: int = 2
    density: float = 0.2
    initial_p: float = 0.3
    final_p: float = 0.3
    seed: int = 1
    regex_depth: int = 6

    def __post_init__(self) -> None:
        if not 1 <= self.min_states <= self.max_states:
            raise ValueError("need 1 <= min_states <= max_states")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        for p in (self.density, self.initial_p, self.final_p):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")
        if self.regex_depth < 0:
            raise ValueError("regex_depth must be non-negative")


def params_alphabet(p: GenParams) -> Alphabet:
    return Alphabet(tuple("abcdefghijklmnopqrstuvwxyz"[: p.alphabet_size]))


# ------------------------------------------------------------------- oracles

def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len, in length-then-lex order."""
    k = len(alphabet)
    for length in range(max_len + 1):
        for w in itertools.product(range(k), repeat=length):
            yield w


def oracle_signature(d: Dfa, w: Word) -> frozenset[int]:
    """The membership vector of w: states of d from which w is accepted."""
    return frozenset(q for q in range(d.state_count) if d.run(w, start=q) in d.final)


def oracle_atoms(d: Dfa, max_len: int, *, literal: bool = False) -> set[frozenset[int]]:
    """Distinct non-empty membership vectors over words of length <= max_len.

    The default path walks breadth-first over tuples (state reached from
    every start simultaneously) instead of over words; words with equal
    tuples have identical signature futures, so the collected set is the
    same as literal enumeration while revisits are pruned. literal=True
    runs the plain word loop; tests cross-check the two.
    """
    if literal:
        sigs: set[frozenset[int]] = set()
        for w in enumerate_words(d.alphabet, max_len):
            s = oracle_signature(d, w)
            if s:
                sigs.add(s)
        return sigs
    n, k = d.state_count, len(d.alphabet)

    def sig(t: tuple[int, ...]) -> frozenset[int]:
        return frozenset(q for q in range(n) if t[q] in d.final)

    start = tuple(range(n))
    seen = {start}
    frontier = [start]
    sigs = set()
    s0 = sig(start)
    if s0:
        sigs.add(s0)
    depth = 0
    while frontier and depth < max_len:
        depth += 1
        nxt: list[tuple[int, ...]] = []
        for t in frontier:
            for a in range(k):
                t2 = tuple(d.next[t[q]][a] for q in range(n))
                if t2 not in seen:
                    seen.add(t2)
                    nxt.append(t2)
                    s = sig(t2)
                    if s:
                        sigs.add(s)
        frontier = nxt
    return sigs


def oracle_equivalent(a: AnyAutomaton, b: AnyAutomaton, max_len: int) -> bool:
    """Word-by-word comparison up to max_len; sound only for disproof."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("oracle_equivalent requires a common alphabet")
    for w in enumerate_words(a.alphabet, max_len):
        if accepts(a, w) != accepts(b, w):
            return False
    return True


# ---------------------------------------------------------------- generators

_MAX_DRAWS = 100


def random_nfa(p: GenParams) -> Nfa:
    """Reproducible random NFA with a guaranteed non-empty language.

    Empty-language draws are rejected (and counted in the debug log); the
    retry uses a derived substream so the function stays a pure function
    of its params.
    """
    alphabet = params_alphabet(p)
    k = len(alphabet)
    for attempt in range(_MAX_DRAWS):
        rng = Splitmix64(_substream(p.seed, attempt))
        n = rng.between(p.min_states, p.max_states)
        trans = set()
        for q in range(n):
            for a in range(k):
                for r in range(n):
                    if rng.chance(p.density):
                        trans.add((q, a, r))
        initial = {q for q in range(n) if rng.chance(p.initial_p)}
        if not initial:
            initial = {rng.below(n)}
        final = {q for q in range(n) if rng.chance(p.final_p)}
        if not final:
            final = {rng.below(n)}
        cand = Nfa.build(n, alphabet, trans, initial, final)
        if not is_empty(cand):
            if attempt:
                logger.debug(
                    "random_nfa seed=%d: rejected %d empty-language draw(s)",
                    p.seed,
                    attempt,
                )
            return cand
    raise AtomataError(
        f"random_nfa could not draw a non-empty language in {_MAX_DRAWS} tries"
        f" (seed={p.seed}, density={p.density})"
    )


def random_dfa(p: GenParams) -> Dfa:
    """Reproducible random complete DFA with a non-empty language."""
    alphabet = params_alphabet(p)
    k = len(alphabet)
    for attempt in range(_MAX_DRAWS):
        rng = Splitmix64(_substream(p.seed, 0x0D0D + attempt))
        n = rng.between(p.min_states, p.max_states)
        rows = tuple(tuple(rng.below(n) for _ in range(k)) for _ in range(n))
        final = {q for q in range(n) if rng.chance(p.final_p)}
        if not final:
            final = {rng.below(n)}
        cand = Dfa(alphabet, rows, 0, frozenset(final))
        if not is_empty(cand):
            if attempt:
                logger.debug(
                    "random_dfa seed=%d: rejected %d empty-language draw(s)",
                    p.seed,
                    attempt,
                )
            return cand
    raise AtomataError(f"random_dfa could not draw a non-empty language (seed={p.seed})")


def random_minimal_dfa(p: GenParams) -> Dfa:
    """Minimal complete DFA of a random language; never larger than max_states."""
    return minimize(random_dfa(p))


def random_regex(p: GenParams) -> rx.Regex:
    """Random AST over params_alphabet(p); never denotes the empty language
    (no empty-set leaves, and the other constructors preserve non-emptiness)."""
    rng = Splitmix64(_substream(p.seed, 0x0E0E))
    k = p.alphabet_size

    def gen(depth: int) -> rx.Regex:
        if depth == 0 or rng.chance(0.3):
            if rng.chance(0.1):
                return rx.epsilon()
            return rx.sym(rng.below(k))
        roll = rng.below(10)
        if roll < 4:
            return rx.union(gen(depth - 1), gen(depth - 1))
        if roll < 8:
            return rx.concat(gen(depth - 1), gen(depth - 1))
        if roll < 9:
            return rx.star(gen(depth - 1))
        return rx.plus(gen(depth - 1))

    return gen(p.regex_depth)


def random_residual_nfa(d: Dfa, seed: int, extra_p: float = 0.35) -> Nfa:
    """A residual NFA for L(d): the quotient skeleton plus random sub-quotient
    edges. Each state keeps the right language of its quotient because the
    added successors are contained in the deterministic one, so the guarded
    equation system still has the quotients as its unique solution."""
    m = minimize(d)
    n, k = m.state_count, len(m.alphabet)
    quotients = [m.with_start(q) for q in range(n)]
    contained = [
        [subset_of(quotients[i], quotients[j]) for j in range(n)] for i in range(n)
    ]
    rng = Splitmix64(_substream(seed, 0x0F0F))
    trans = set()
    for q in range(n):
        for a in range(k):
            base = m.next[q][a]
            trans.add((q, a, base))
            for r in range(n):
                if r != base and contained[r][base] and rng.chance(extra_p):
                    trans.add((q, a, r))
    initial = {m.start}
    for r in range(n):
        if r != m.start and contained[r][m.start] and rng.chance(extra_p):
            initial.add(r)
    return Nfa.build(n, m.alphabet, trans, initial, m.final, labels=m.labels)
