"""Regular-expression front end.

ASTs are canonical by construction: the smart constructors apply the
similarity rules (associative/commutative/idempotent union, empty-set
absorption, epsilon units, star collapse) so structurally equal languages
that the rules identify share one representation. That keeps the set of
word derivatives finite; it does not make it minimal, which is why
quotient_dfa runs a refinement pass at the end.

Grammar: single-character symbols from a declared alphabet, `|` union,
juxtaposition concatenation, `*` star, `+` plus, `(`...`)` grouping,
`%` for the empty word, `#` for the empty set. Whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, Dfa, Nfa, Word
from .errors import DerivativeBlowupError, RegexSyntaxError, UnknownSymbolError
from . import automata


class Regex:
    """Base class; instances are immutable and compared structurally."""

    __slots__ = ()

    def _key(self) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class Empty(Regex):
    def _key(self) -> tuple:
        return (0,)


@dataclass(frozen=True)
class Epsilon(Regex):
    def _key(self) -> tuple:
        return (1,)


@dataclass(frozen=True)
class Sym(Regex):
    index: int

    def _key(self) -> tuple:
        return (2, self.index)


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex

    def _key(self) -> tuple:
        return (3, self.inner._key())


@dataclass(frozen=True)
class Plus(Regex):
    inner: Regex

    def _key(self) -> tuple:
        return (4, self.inner._key())


@dataclass(frozen=True)
class Concat(Regex):
    items: tuple[Regex, ...]

    def _key(self) -> tuple:
        return (5, tuple(i._key() for i in self.items))


@dataclass(frozen=True)
class Union(Regex):
    items: tuple[Regex, ...]

    def _key(self) -> tuple:
        return (6, tuple(i._key() for i in self.items))


_EMPTY = Empty()
_EPSILON = Epsilon()


def empty() -> Regex:
    return _EMPTY


def epsilon() -> Regex:
    return _EPSILON


def sym(index: int) -> Regex:
    if index < 0:
        raise ValueError("symbol index must be non-negative")
    return Sym(index)


def union(*parts: Regex) -> Regex:
    items: list[Regex] = []
    for p in parts:
        if isinstance(p, Union):
            items.extend(p.items)
        elif not isinstance(p, Empty):
            items.append(p)
    uniq: dict[tuple, Regex] = {}
    for it in items:
        uniq.setdefault(it._key(), it)
    ordered = [uniq[k] for k in sorted(uniq)]
    if not ordered:
        return _EMPTY
    if len(ordered) == 1:
        return ordered[0]
    return Union(tuple(ordered))


def concat(*parts: Regex) -> Regex:
    items: list[Regex] = []
    for p in parts:
        if isinstance(p, Empty):
            return _EMPTY
        if isinstance(p, Epsilon):
            continue
        if isinstance(p, Concat):
            items.extend(p.items)
        else:
            items.append(p)
    if not items:
        return _EPSILON
    if len(items) == 1:
        return items[0]
    return Concat(tuple(items))


def star(r: Regex) -> Regex:
    if isinstance(r, (Empty, Epsilon)):
        return _EPSILON
    if isinstance(r, Star):
        return r
    if isinstance(r, Plus):
        return Star(r.inner)
    return Star(r)


def plus(r: Regex) -> Regex:
    if isinstance(r, (Empty, Epsilon, Star, Plus)):
        return r
    return Plus(r)


# ------------------------------------------------------------------ analysis

def nullable(r: Regex) -> bool:
    """True iff the empty word belongs to the denoted language."""
    if isinstance(r, (Epsilon, Star)):
        return True
    if isinstance(r, (Empty, Sym)):
        return False
    if isinstance(r, Plus):
        return nullable(r.inner)
    if isinstance(r, Concat):
        return all(nullable(i) for i in r.items)
    assert isinstance(r, Union)
    return any(nullable(i) for i in r.items)


def derivative(r: Regex, a: int) -> Regex:
    """Canonical AST of the left quotient of L(r) by the symbol a."""
    if isinstance(r, (Empty, Epsilon)):
        return _EMPTY
    if isinstance(r, Sym):
        return _EPSILON if r.index == a else _EMPTY
    if isinstance(r, Union):
        return union(*(derivative(i, a) for i in r.items))
    if isinstance(r, Concat):
        head, tail = r.items[0], concat(*r.items[1:])
        first = concat(derivative(head, a), tail)
        if nullable(head):
            return union(first, derivative(tail, a))
        return first
    if isinstance(r, Star):
        return concat(derivative(r.inner, a), r)
    assert isinstance(r, Plus)
    return concat(derivative(r.inner, a), star(r.inner))


def quotient_by_word(r: Regex, w: Word) -> Regex:
    for a in w:
        r = derivative(r, a)
    return r


def quotient_dfa(r: Regex, alphabet: Alphabet, max_states: int = 10_000) -> Dfa:
    """The minimal complete DFA whose states are the distinct quotients.

    Derivative exploration alone only reaches canonical-form distinctness,
    so a refinement pass merges derivatives that still denote the same
    quotient.
    """
    k = len(alphabet)
    order: dict[Regex, int] = {r: 0}
    queue = [r]
    rows: list[tuple[int, ...]] = []
    qi = 0
    while qi < len(queue):
        cur = queue[qi]
        qi += 1
        row = []
        for a in range(k):
            d = derivative(cur, a)
            if d not in order:
                if len(order) >= max_states:
                    raise DerivativeBlowupError(
                        f"more than {max_states} canonical derivatives"
                    )
                order[d] = len(order)
                queue.append(d)
            row.append(order[d])
        rows.append(tuple(row))
    raw = Dfa(
        alphabet,
        tuple(rows),
        0,
        frozenset(i for i, q in enumerate(queue) if nullable(q)),
    )
    return automata.minimize(raw)


def thompson_nfa(r: Regex, alphabet: Alphabet) -> Nfa:
    """Construction with internal epsilon moves, eliminated by forward
    closure before returning, so the Nfa type stays epsilon-free."""
    counter = [0]
    eps: set[tuple[int, int]] = set()
    lab: set[tuple[int, int, int]] = set()

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def build(node: Regex) -> tuple[int, int]:
        start, accept = fresh(), fresh()
        if isinstance(node, Empty):
            pass
        elif isinstance(node, Epsilon):
            eps.add((start, accept))
        elif isinstance(node, Sym):
            lab.add((start, node.index, accept))
        elif isinstance(node, Union):
            for item in node.items:
                s, t = build(item)
                eps.add((start, s))
                eps.add((t, accept))
        elif isinstance(node, Concat):
            prev = start
            for item in node.items:
                s, t = build(item)
                eps.add((prev, s))
                prev = t
            eps.add((prev, accept))
        elif isinstance(node, (Star, Plus)):
            s, t = build(node.inner)
            eps.add((start, s))
            eps.add((t, s))
            eps.add((t, accept))
            if isinstance(node, Star):
                eps.add((start, accept))
        else:  # pragma: no cover
            raise TypeError(f"unknown node {node!r}")
        return start, accept

    start, accept = build(r)
    n = counter[0]
    succ: dict[int, list[int]] = {}
    for (p, q) in eps:
        succ.setdefault(p, []).append(q)

    def closure(p: int) -> set[int]:
        seen = {p}
        todo = [p]
        while todo:
            cur = todo.pop()
            for q in succ.get(cur, ()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    closures = [closure(p) for p in range(n)]
    trans = {
        (p, a, q)
        for p in range(n)
        for c in closures[p]
        for (c2, a, q) in lab
        if c2 == c
    }
    final = frozenset(p for p in range(n) if accept in closures[p])
    return Nfa(n, alphabet, frozenset(trans), frozenset({start}), final)


# ------------------------------------------------------------- text form

_META = set("%#|*+()")


def parse_regex(text: str, alphabet: Alphabet) -> Regex:
    """Recursive-descent parser for the grammar in the module docstring."""
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def peek() -> str | None:
        skip_ws()
        return text[pos] if pos < len(text) else None

    def parse_union() -> Regex:
        nonlocal pos
        parts = [parse_concat()]
        while peek() == "|":
            pos += 1
            parts.append(parse_concat())
        return union(*parts)

    def parse_concat() -> Regex:
        parts = []
        while True:
            ch = peek()
            if ch is None or ch in ")|":
                break
            parts.append(parse_postfix())
        if not parts:
            raise RegexSyntaxError("expected an expression", pos)
        return concat(*parts)

    def parse_postfix() -> Regex:
        nonlocal pos
        node = parse_atom()
        while peek() in ("*", "+"):
            op = text[pos]
            pos += 1
            node = star(node) if op == "*" else plus(node)
        return node

    def parse_atom() -> Regex:
        nonlocal pos
        ch = peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of input", pos)
        if ch == "(":
            pos += 1
            node = parse_union()
            if peek() != ")":
                raise RegexSyntaxError("expected ')'", pos)
            pos += 1
            return node
        if ch == "%":
            pos += 1
            return epsilon()
        if ch == "#":
            pos += 1
            return empty()
        if ch in "*+":
            raise RegexSyntaxError(f"'{ch}' needs an operand", pos)
        if ch == ")":
            raise RegexSyntaxError("unmatched ')'", pos)
        if ch not in alphabet:
            raise UnknownSymbolError(f"symbol {ch!r} is not in the alphabet", pos)
        pos += 1
        return sym(alphabet.index(ch))

    node = parse_union()
    if peek() is not None:
        raise RegexSyntaxError(f"unexpected {text[pos]!r}", pos)
    return node


def _prec(r: Regex) -> int:
    if isinstance(r, Union):
        return 0
    if isinstance(r, Concat):
        return 1
    if isinstance(r, (Star, Plus)):
        return 2
    return 3


def format_regex(r: Regex, alphabet: Alphabet) -> str:
    """Printed normal form; parse_regex inverts it exactly on canonical ASTs."""

    def fmt(node: Regex, ctx: int) -> str:
        if isinstance(node, Empty):
            s = "#"
        elif isinstance(node, Epsilon):
            s = "%"
        elif isinstance(node, Sym):
            s = alphabet.symbols[node.index]
        elif isinstance(node, Star):
            s = fmt(node.inner, 3) + "*"
        elif isinstance(node, Plus):
            s = fmt(node.inner, 3) + "+"
        elif isinstance(node, Concat):
            s = "".join(fmt(i, 2) for i in node.items)
        else:
            assert isinstance(node, Union)
            s = "|".join(fmt(i, 1) for i in node.items)
        if _prec(node) < ctx:
            return "(" + s + ")"
        return s

    return fmt(r, 0)


def infer_alphabet(text: str) -> Alphabet:
    """Alphabet of a regex text: its non-metacharacter symbols, sorted."""
    symbols = sorted({ch for ch in text if not ch.isspace() and ch not in _META})
    if not symbols:
        # a purely structural regex like "%" still needs a carrier alphabet
        symbols = ["a"]
    return Alphabet(tuple(symbols))
