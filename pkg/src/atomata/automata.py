"""Finite-automaton data model and the core operator set.

States are dense integer indices. A nondeterministic automaton stores its
transition relation as a set of (from, symbol, to) triples over symbol
indices of a shared Alphabet; deterministic automata store a dense table.
Labels are advisory metadata and never affect semantics. All values are
frozen after construction, so every operation returns a new automaton.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional, Union

from .errors import (
    AlphabetMismatchError,
    EmptyLanguageError,
    NotTrimError,
)

Word = tuple[int, ...]
EPSILON: Word = ()
_NO_STATES: set[int] = set()


@dataclass(frozen=True)
class Alphabet:
    """An ordered, duplicate-free sequence of single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        for s in self.symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbol must be a single character: {s!r}")

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self.symbols

    def index(self, ch: str) -> int:
        return self.symbols.index(ch)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Word from concatenated symbol characters; "%" denotes the empty word."""
    if text == "%":
        return EPSILON
    return tuple(alphabet.index(ch) for ch in text)


def format_word(alphabet: Alphabet, w: Word) -> str:
    """Inverse of parse_word; the empty word prints as "%"."""
    if not w:
        return "%"
    return "".join(alphabet.symbols[a] for a in w)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton without epsilon transitions."""

    state_count: int
    alphabet: Alphabet
    transitions: frozenset[tuple[int, int, int]]
    initial: frozenset[int]
    final: frozenset[int]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n, k = self.state_count, len(self.alphabet)
        if n < 0:
            raise ValueError("state_count must be non-negative")
        for (p, a, q) in self.transitions:
            if not (0 <= p < n and 0 <= a < k and 0 <= q < n):
                raise ValueError(f"transition out of range: {(p, a, q)}")
        for s in self.initial | self.final:
            if not 0 <= s < n:
                raise ValueError(f"state index out of range: {s}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per state")

    @classmethod
    def build(
        cls,
        state_count: int,
        alphabet: Alphabet,
        transitions: Iterable[tuple[int, int, int]],
        initial: Iterable[int],
        final: Iterable[int],
        labels: Optional[Iterable[str]] = None,
    ) -> "Nfa":
        return cls(
            state_count,
            alphabet,
            frozenset(transitions),
            frozenset(initial),
            frozenset(final),
            None if labels is None else tuple(labels),
        )

    def successors(self, states: Iterable[int], a: int) -> frozenset[int]:
        ss = set(states)
        return frozenset(q for (p, b, q) in self.transitions if b == a and p in ss)

    def run(self, w: Word) -> frozenset[int]:
        frontier = self.initial
        for a in w:
            frontier = self.successors(frontier, a)
        return frontier

    def label_of(self, q: int) -> str:
        if self.labels is not None:
            return self.labels[q]
        return str(q)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton: a total next-state table.

    subset_labels records the origin-NFA subset behind each state when the
    value came out of determinize; purely advisory, like labels.
    """

    alphabet: Alphabet
    next: tuple[tuple[int, ...], ...]
    start: int
    final: frozenset[int]
    subset_labels: Optional[tuple[frozenset[int], ...]] = None
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n, k = len(self.next), len(self.alphabet)
        if n == 0:
            raise ValueError("a Dfa needs at least its start state")
        for row in self.next:
            if len(row) != k:
                raise ValueError("next must be total: one successor per symbol")
            for q in row:
                if not 0 <= q < n:
                    raise ValueError(f"successor out of range: {q}")
        if not 0 <= self.start < n:
            raise ValueError("start out of range")
        for s in self.final:
            if not 0 <= s < n:
                raise ValueError(f"final state out of range: {s}")
        if self.subset_labels is not None and len(self.subset_labels) != n:
            raise ValueError("subset_labels must have one entry per state")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per state")

    @property
    def state_count(self) -> int:
        return len(self.next)

    def run(self, w: Word, start: Optional[int] = None) -> int:
        q = self.start if start is None else start
        for a in w:
            q = self.next[q][a]
        return q

    def label_of(self, q: int) -> str:
        if self.labels is not None:
            return self.labels[q]
        return str(q)

    def with_start(self, q: int) -> "Dfa":
        return replace(self, start=q)

    def with_final(self, final: Iterable[int]) -> "Dfa":
        return replace(self, final=frozenset(final))


@dataclass(frozen=True)
class Idfa:
    """Incomplete (partial) deterministic automaton; None marks a missing move."""

    alphabet: Alphabet
    next: tuple[tuple[Optional[int], ...], ...]
    start: int
    final: frozenset[int]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n, k = len(self.next), len(self.alphabet)
        if n == 0:
            raise ValueError("an Idfa needs at least its start state")
        for row in self.next:
            if len(row) != k:
                raise ValueError("next must have one (possibly None) entry per symbol")
            for q in row:
                if q is not None and not 0 <= q < n:
                    raise ValueError(f"successor out of range: {q}")
        if not 0 <= self.start < n:
            raise ValueError("start out of range")
        for s in self.final:
            if not 0 <= s < n:
                raise ValueError(f"final state out of range: {s}")

    @property
    def state_count(self) -> int:
        return len(self.next)

    def run(self, w: Word) -> Optional[int]:
        q: Optional[int] = self.start
        for a in w:
            if q is None:
                return None
            q = self.next[q][a]
        return q


AnyAutomaton = Union[Nfa, Dfa, Idfa]


# ---------------------------------------------------------------- conversions

def as_nfa(m: AnyAutomaton) -> Nfa:
    """View any automaton as an Nfa (identity on Nfa inputs)."""
    if isinstance(m, Nfa):
        return m
    trans = set()
    for p, row in enumerate(m.next):
        for a, q in enumerate(row):
            if q is not None:
                trans.add((p, a, q))
    labels = m.labels
    if labels is None and isinstance(m, Dfa) and m.subset_labels is not None:
        labels = tuple(_subset_text(s, None) for s in m.subset_labels)
    return Nfa(
        m.state_count,
        m.alphabet,
        frozenset(trans),
        frozenset({m.start}),
        m.final,
        labels,
    )


def _subset_text(subset: frozenset[int], labels: Optional[tuple[str, ...]]) -> str:
    names = sorted(
        (labels[q] if labels is not None else str(q) for q in subset),
        key=lambda t: (len(t), t),
    )
    return "{" + ",".join(names) + "}"


def try_as_dfa(n: Nfa) -> Optional[Dfa]:
    """Exact Dfa view of an Nfa that is complete-deterministic; None otherwise."""
    if len(n.initial) != 1:
        return None
    k = len(n.alphabet)
    table: list[list[Optional[int]]] = [[None] * k for _ in range(n.state_count)]
    for (p, a, q) in n.transitions:
        if table[p][a] is not None:
            return None
        table[p][a] = q
    if any(c is None for row in table for c in row):
        return None
    return Dfa(
        n.alphabet,
        tuple(tuple(row) for row in table),  # type: ignore[arg-type]
        next(iter(n.initial)),
        n.final,
        None,
        n.labels,
    )


def try_as_idfa(n: Nfa) -> Optional[Idfa]:
    """Exact Idfa view of an Nfa with one initial state and deterministic moves."""
    if len(n.initial) != 1:
        return None
    k = len(n.alphabet)
    table: list[list[Optional[int]]] = [[None] * k for _ in range(n.state_count)]
    for (p, a, q) in n.transitions:
        if table[p][a] is not None:
            return None
        table[p][a] = q
    return Idfa(
        n.alphabet,
        tuple(tuple(row) for row in table),
        next(iter(n.initial)),
        n.final,
        n.labels,
    )


def dfa_to_idfa(d: Dfa) -> Idfa:
    """Trim a complete Dfa into a partial one (drop dead and unreachable states)."""
    idfa = try_as_idfa(trim(as_nfa(d)))
    assert idfa is not None  # trimming a deterministic automaton stays deterministic
    return idfa


def idfa_to_dfa(i: Idfa) -> Dfa:
    """Complete a partial automaton, adding one fresh sink only if needed."""
    n, k = i.state_count, len(i.alphabet)
    if all(c is not None for row in i.next for c in row):
        return Dfa(i.alphabet, tuple(tuple(row) for row in i.next), i.start, i.final, None, i.labels)  # type: ignore[arg-type]
    sink = n
    table = [[q if q is not None else sink for q in row] for row in i.next]
    table.append([sink] * k)
    labels = None if i.labels is None else i.labels + ("{}",)
    return Dfa(i.alphabet, tuple(tuple(row) for row in table), i.start, i.final, None, labels)


# ----------------------------------------------------------------- operators

def reverse(n: Nfa) -> Nfa:
    """Swap initial and final sets and flip every transition."""
    return Nfa(
        n.state_count,
        n.alphabet,
        frozenset((q, a, p) for (p, a, q) in n.transitions),
        n.final,
        n.initial,
        n.labels,
    )


def _reachable(n: Nfa) -> set[int]:
    seen = set(n.initial)
    todo = deque(sorted(seen))
    succ: dict[int, list[int]] = {}
    for (p, _a, q) in n.transitions:
        succ.setdefault(p, []).append(q)
    while todo:
        p = todo.popleft()
        for q in succ.get(p, ()):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def trim_with_map(n: Nfa) -> tuple[Nfa, tuple[int, ...]]:
    """Trim plus the report: kept[i] is the old index of new state i."""
    useful = sorted(_reachable(n) & _reachable(reverse(n)))
    if not useful:
        raise EmptyLanguageError("cannot trim an automaton accepting the empty language")
    remap = {old: new for new, old in enumerate(useful)}
    return (
        Nfa(
            len(useful),
            n.alphabet,
            frozenset(
                (remap[p], a, remap[q])
                for (p, a, q) in n.transitions
                if p in remap and q in remap
            ),
            frozenset(remap[q] for q in n.initial if q in remap),
            frozenset(remap[q] for q in n.final if q in remap),
            None if n.labels is None else tuple(n.labels[q] for q in useful),
        ),
        tuple(useful),
    )


def trim(n: Nfa) -> Nfa:
    """Restrict to states both reachable and co-reachable; same language."""
    return trim_with_map(n)[0]


def is_trim(n: Nfa) -> bool:
    useful = _reachable(n) & _reachable(reverse(n))
    return len(useful) == n.state_count


def determinize(n: Nfa) -> Dfa:
    """Subset construction over reachable subsets, including a reachable empty one."""
    k = len(n.alphabet)
    succ: dict[tuple[int, int], set[int]] = {}
    for (p, a, q) in n.transitions:
        succ.setdefault((p, a), set()).add(q)
    start = frozenset(n.initial)
    order: dict[frozenset[int], int] = {start: 0}
    rows: list[tuple[int, ...]] = []
    queue = [start]
    qi = 0
    while qi < len(queue):
        subset = queue[qi]
        qi += 1
        row = []
        for a in range(k):
            acc: set[int] = set()
            for p in subset:
                acc |= succ.get((p, a), _NO_STATES)
            nxt = frozenset(acc)
            if nxt not in order:
                order[nxt] = len(order)
                queue.append(nxt)
            row.append(order[nxt])
        rows.append(row)  # type: ignore[arg-type]
    subsets = tuple(queue)
    return Dfa(
        n.alphabet,
        tuple(tuple(r) for r in rows),
        0,
        frozenset(i for i, s in enumerate(subsets) if s & n.final),
        subsets,
        tuple(_subset_text(s, n.labels) for s in subsets),
    )


def _dfa_reachable(d: Dfa) -> list[int]:
    seen = {d.start}
    out = [d.start]
    todo = deque([d.start])
    while todo:
        p = todo.popleft()
        for q in d.next[p]:
            if q not in seen:
                seen.add(q)
                out.append(q)
                todo.append(q)
    return out


def minimize_with_map(d: Dfa) -> tuple[Dfa, dict[int, int]]:
    """Moore partition refinement; also reports old-state -> class-index merges.

    Classes are renumbered by their smallest original member so labels stay
    attached to the first-seen representative.
    """
    reach = sorted(_dfa_reachable(d))
    k = len(d.alphabet)
    block = {q: (1 if q in d.final else 0) for q in reach}
    while True:
        sig = {q: (block[q],) + tuple(block[d.next[q][a]] for a in range(k)) for q in reach}
        renum: dict[tuple, int] = {}
        for q in reach:
            renum.setdefault(sig[q], len(renum))
        new_block = {q: renum[sig[q]] for q in reach}
        if new_block == block:
            break
        block = new_block
    reps: dict[int, int] = {}
    for q in reach:  # ascending, so min member claims its class first
        reps.setdefault(block[q], q)
    classes = sorted(reps.values())
    index_of = {block[rep]: i for i, rep in enumerate(classes)}
    merge = {q: index_of[block[q]] for q in reach}
    rows = tuple(
        tuple(merge[d.next[rep][a]] for a in range(k)) for rep in classes
    )
    return (
        Dfa(
            d.alphabet,
            rows,
            merge[d.start],
            frozenset(merge[q] for q in reach if q in d.final),
            None if d.subset_labels is None else tuple(d.subset_labels[rep] for rep in classes),
            None if d.labels is None else tuple(d.labels[rep] for rep in classes),
        ),
        merge,
    )


def minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA of the same language."""
    return minimize_with_map(d)[0]


def minimize_idfa(i: Idfa) -> Idfa:
    """Minimal partial DFA: complete, minimize, trim back to partial."""
    return dfa_to_idfa(minimize(idfa_to_dfa(i)))


def is_minimal(d: Dfa) -> bool:
    return minimize(d).state_count == len(_dfa_reachable(d))


def accepts(m: AnyAutomaton, w: Word) -> bool:
    """Membership of w in L(m)."""
    if isinstance(m, Dfa):
        return m.run(w) in m.final
    if isinstance(m, Idfa):
        q = m.run(w)
        return q is not None and q in m.final
    return bool(m.run(w) & m.final)


def product(a: Dfa, b: Dfa, mode: str = "and") -> Dfa:
    """Reachable pairwise product; mode "and" intersects, "andnot" subtracts."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("product requires a common alphabet")
    if mode not in ("and", "andnot"):
        raise ValueError(f"unknown product mode: {mode}")
    k = len(a.alphabet)
    order: dict[tuple[int, int], int] = {(a.start, b.start): 0}
    pairs = [(a.start, b.start)]
    rows: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(pairs):
        (p, q) = pairs[qi]
        qi += 1
        row = []
        for s in range(k):
            nxt = (a.next[p][s], b.next[q][s])
            if nxt not in order:
                order[nxt] = len(order)
                pairs.append(nxt)
            row.append(order[nxt])
        rows.append(tuple(row))
    if mode == "and":
        fin = frozenset(i for i, (p, q) in enumerate(pairs) if p in a.final and q in b.final)
    else:
        fin = frozenset(i for i, (p, q) in enumerate(pairs) if p in a.final and q not in b.final)
    return Dfa(a.alphabet, tuple(rows), 0, fin)


def _to_dfa(m: AnyAutomaton) -> Dfa:
    if isinstance(m, Dfa):
        return m
    if isinstance(m, Idfa):
        return idfa_to_dfa(m)
    exact = try_as_dfa(m)
    return exact if exact is not None else determinize(m)


def is_empty(m: AnyAutomaton) -> bool:
    if isinstance(m, Nfa):
        return not any(q in m.final for q in _reachable(m))
    d = _to_dfa(m)
    return not any(q in d.final for q in _dfa_reachable(d))


def subset_of(a: AnyAutomaton, b: AnyAutomaton) -> bool:
    """L(a) is a subset of L(b), by emptiness of the a-minus-b pair search."""
    da, db = _to_dfa(a), _to_dfa(b)
    if da.alphabet != db.alphabet:
        raise AlphabetMismatchError("subset_of requires a common alphabet")
    k = len(da.alphabet)
    seen = {(da.start, db.start)}
    todo = deque(seen)
    while todo:
        (p, q) = todo.popleft()
        if p in da.final and q not in db.final:
            return False
        for s in range(k):
            nxt = (da.next[p][s], db.next[q][s])
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return True


def equivalent(a: AnyAutomaton, b: AnyAutomaton) -> bool:
    return subset_of(a, b) and subset_of(b, a)


def shortest_distinguishing(a: AnyAutomaton, b: AnyAutomaton) -> Optional[Word]:
    """Shortest word accepted by exactly one of a and b; None when equivalent.

    Ties are broken by alphabet order (breadth-first search).
    """
    da, db = _to_dfa(a), _to_dfa(b)
    if da.alphabet != db.alphabet:
        raise AlphabetMismatchError("comparison requires a common alphabet")
    k = len(da.alphabet)
    start = (da.start, db.start)
    seen = {start}
    todo: deque[tuple[tuple[int, int], Word]] = deque([(start, EPSILON)])
    while todo:
        (p, q), w = todo.popleft()
        if (p in da.final) != (q in db.final):
            return w
        for s in range(k):
            nxt = (da.next[p][s], db.next[q][s])
            if nxt not in seen:
                seen.add(nxt)
                todo.append((nxt, w + (s,)))
    return None


def shortest_accepted(m: AnyAutomaton) -> Optional[Word]:
    """Shortest accepted word (alphabet-order tie-break); None for the empty language."""
    d = _to_dfa(m)
    k = len(d.alphabet)
    seen = {d.start}
    todo: deque[tuple[int, Word]] = deque([(d.start, EPSILON)])
    while todo:
        q, w = todo.popleft()
        if q in d.final:
            return w
        for s in range(k):
            nxt = d.next[q][s]
            if nxt not in seen:
                seen.add(nxt)
                todo.append((nxt, w + (s,)))
    return None


def right_language(n: Nfa, q: int) -> Dfa:
    """DFA of the right language of q: words leading q into a final state."""
    if not 0 <= q < n.state_count:
        raise ValueError(f"state out of range: {q}")
    return determinize(replace(n, initial=frozenset({q})))


@dataclass(frozen=True)
class LeftLanguage:
    """Left language of a state, delivered as the DFA of its reversal.

    Callers consume left languages reversed (the natural direction for the
    co-accessible machinery), so reversed is always True; it is kept as an
    explicit flag so the orientation travels with the value.
    """

    dfa: Dfa
    reversed: bool = True


def left_language(n: Nfa, q: int) -> LeftLanguage:
    """Reversed-DFA view of the words leading some initial state to q."""
    if not 0 <= q < n.state_count:
        raise ValueError(f"state out of range: {q}")
    return LeftLanguage(determinize(replace(reverse(n), initial=frozenset({q}))))


def right_quotient(d: Dfa, w: Word) -> Dfa:
    """L w^-1 = { x : xw in L }, via the reversal of a left quotient."""
    rdfa = determinize(reverse(as_nfa(d)))  # accepts reverse(L)
    shifted = rdfa.with_start(rdfa.run(tuple(reversed(w))))
    return determinize(reverse(as_nfa(shifted)))


def is_bideterministic(m: Union[Idfa, Nfa]) -> bool:
    """A trim automaton is bideterministic iff it and its reverse are both
    deterministic with at most one start state. Nondeterministic input is
    accepted and reported False rather than rejected."""
    n = m if isinstance(m, Nfa) else as_nfa(m)
    if not is_trim(n):
        raise NotTrimError("bideterminism is defined for trim automata")
    if len(n.initial) > 1 or len(n.final) > 1:
        return False
    seen_out: set[tuple[int, int]] = set()
    seen_in: set[tuple[int, int]] = set()
    for (p, a, q) in n.transitions:
        if (p, a) in seen_out or (q, a) in seen_in:
            return False
        seen_out.add((p, a))
        seen_in.add((q, a))
    return True


def is_isomorphic(a: AnyAutomaton, b: AnyAutomaton) -> Optional[dict[int, int]]:
    """A bijection preserving transitions, initial and final sets, or None.

    Deterministic inputs with every state reachable are matched by
    synchronized traversal; anything else falls back to color refinement
    with backtracking (instances here are small).
    """
    na, nb = as_nfa(a), as_nfa(b)
    if na.alphabet != nb.alphabet:
        return None
    if (
        na.state_count != nb.state_count
        or len(na.initial) != len(nb.initial)
        or len(na.final) != len(nb.final)
        or len(na.transitions) != len(nb.transitions)
    ):
        return None
    fast = _iso_synchronized(na, nb)
    if fast is not None:
        return fast
    return _iso_backtracking(na, nb)


def _nfa_table(n: Nfa) -> Optional[list[list[Optional[int]]]]:
    k = len(n.alphabet)
    table: list[list[Optional[int]]] = [[None] * k for _ in range(n.state_count)]
    for (p, a, q) in n.transitions:
        if table[p][a] is not None:
            return None
        table[p][a] = q
    return table


def _iso_synchronized(na: Nfa, nb: Nfa) -> Optional[dict[int, int]]:
    """Deterministic fast path; None means "decide by backtracking instead".

    Only applies when both sides are deterministic, share |initial| = 1 and
    have every state reachable; then the bijection, if any, is forced. A
    forced-map failure also returns None: the backtracking pass re-proves
    the mismatch, which keeps this function free of a third verdict.
    """
    if len(na.initial) != 1 or len(nb.initial) != 1:
        return None
    ta, tb = _nfa_table(na), _nfa_table(nb)
    if ta is None or tb is None:
        return None
    if len(_reachable(na)) != na.state_count or len(_reachable(nb)) != nb.state_count:
        return None
    k = len(na.alphabet)
    pa, pb = next(iter(na.initial)), next(iter(nb.initial))
    mapping = {pa: pb}
    todo = deque([(pa, pb)])
    while todo:
        p, q = todo.popleft()
        if (p in na.final) != (q in nb.final):
            return None
        for s in range(k):
            np_, nq = ta[p][s], tb[q][s]
            if (np_ is None) != (nq is None):
                return None
            if np_ is None:
                continue
            if np_ in mapping:
                if mapping[np_] != nq:
                    return None
            elif nq in mapping.values():
                return None
            else:
                mapping[np_] = nq
                todo.append((np_, nq))
    if len(mapping) != na.state_count:
        return None
    return mapping


def _refine_colors(n: Nfa) -> list[int]:
    # ids are ranks of sorted signatures, never first-seen order, so equal
    # colors mean the same thing when two automata are refined separately
    out: dict[int, list[tuple[int, int]]] = {q: [] for q in range(n.state_count)}
    inc: dict[int, list[tuple[int, int]]] = {q: [] for q in range(n.state_count)}
    for (p, a, q) in n.transitions:
        out[p].append((a, q))
        inc[q].append((a, p))
    seed = [(q in n.initial, q in n.final) for q in range(n.state_count)]
    rank = {s: i for i, s in enumerate(sorted(set(seed)))}
    current = [rank[s] for s in seed]
    while True:
        sig = [
            (
                current[q],
                tuple(sorted((a, current[t]) for (a, t) in out[q])),
                tuple(sorted((a, current[t]) for (a, t) in inc[q])),
            )
            for q in range(n.state_count)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        nxt = [rank[s] for s in sig]
        if len(set(nxt)) == len(set(current)):
            return nxt
        current = nxt


def _iso_backtracking(na: Nfa, nb: Nfa) -> Optional[dict[int, int]]:
    from collections import Counter

    ca, cb = _refine_colors(na), _refine_colors(nb)
    if Counter(ca) != Counter(cb):
        return None
    outa: dict[int, set[tuple[int, int]]] = {q: set() for q in range(na.state_count)}
    outb: dict[int, set[tuple[int, int]]] = {q: set() for q in range(nb.state_count)}
    for (p, a, q) in na.transitions:
        outa[p].add((a, q))
    for (p, a, q) in nb.transitions:
        outb[p].add((a, q))

    # assign rare colors first to fail fast
    freq = Counter(ca)
    order = sorted(range(na.state_count), key=lambda q: (freq[ca[q]], q))
    mapping: dict[int, int] = {}
    inverse: dict[int, int] = {}
    edges_b = set(nb.transitions)

    def consistent(p: int, q: int) -> bool:
        if ca[p] != cb[q]:
            return False
        if (p in na.initial) != (q in nb.initial) or (p in na.final) != (q in nb.final):
            return False
        if len(outa[p]) != len(outb[q]):
            return False
        for (a, t) in outa[p]:
            if (t in mapping or t == p) and (a, mapping.get(t, q)) not in outb[q]:
                return False
        for (a, t) in outb[q]:
            if (t in inverse or t == q) and (a, inverse.get(t, p)) not in outa[p]:
                return False
        # edges into p/q from already-mapped states
        for s, v in mapping.items():
            for (a, t) in outa[s]:
                if t == p and (a, q) not in outb[v]:
                    return False
            for (a, t) in outb[v]:
                if t == q and (a, p) not in outa[s]:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            mapped = {(mapping[p], a, mapping[q]) for (p, a, q) in na.transitions}
            return mapped == edges_b
        p = order[i]
        for q in range(nb.state_count):
            if q in inverse or not consistent(p, q):
                continue
            mapping[p] = q
            inverse[q] = p
            if search(i + 1):
                return True
            del mapping[p]
            del inverse[q]
        return False

    return dict(mapping) if search(0) else None
